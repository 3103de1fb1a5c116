#pragma once

#include "cochain.hpp"
#include "hochschild_serre.hpp"
#include "monoid.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace moncoh {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, "'" + path + "': " + e.what());
    }
}

template <class T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "': " + e.what());
    }
}

// {"elements": [names], "table": [[indices]], "identity": index}
inline FiniteMonoid monoid_from_json(const json &j) {
    auto names = field<std::vector<std::string>>(j, "elements");
    auto table = field<std::vector<std::vector<size_t>>>(j, "table");
    auto id = field<size_t>(j, "identity");
    return build_monoid(table, id, names);
}

// one monoid, or {"factors": [group, commutative monoids...]}
inline SetupMonoid setup_from_json(const json &j) {
    if (j.is_object() && j.contains("factors")) {
        std::vector<FiniteMonoid> fs;
        for (auto &f : j.at("factors"))
            fs.push_back(monoid_from_json(f));
        return direct_product(fs);
    }
    return as_setup(monoid_from_json(j));
}

inline json monoid_to_json(const FiniteMonoid &M) {
    json t = json::array();
    for (Elem a = 0; a < M.size(); ++a) {
        json row = json::array();
        for (Elem b = 0; b < M.size(); ++b)
            row.push_back(M.mul(a, b));
        t.push_back(row);
    }
    return {{"elements", M.names()}, {"table", t}, {"identity", M.identity()}};
}

inline Elem element_by_name(const FiniteMonoid &M, const std::string &nm) {
    if (auto e = M.find(nm))
        return *e;
    throw Error(ErrorKind::InvalidInput, "unknown element '" + nm + "'");
}

// {"free_rank": r, "torsion": [d...], "action": {"name": [[matrix]]}}; unlisted elements act trivially
inline GModule module_from_json(const json &j, const FiniteMonoid &M) {
    size_t r = j.contains("free_rank") ? field<size_t>(j, "free_rank") : 0;
    std::vector<int64_t> tor = j.contains("torsion") ? field<std::vector<int64_t>>(j, "torsion") : std::vector<int64_t>{};
    std::vector<int64_t> mods(r, 0);
    for (auto d : tor) {
        if (d < 2)
            throw Error(ErrorKind::InvalidInput, "torsion orders must be >= 2");
        mods.push_back(d);
    }
    if (mods.empty())
        throw Error(ErrorKind::InvalidInput, "module has no generators");
    const size_t c = mods.size();
    Mat64 I(c, Vec64(c, 0));
    for (size_t i = 0; i < c; ++i)
        I[i][i] = 1;
    std::vector<Mat64> acts(M.size(), I);
    if (j.contains("action")) {
        if (!j.at("action").is_object())
            throw Error(ErrorKind::InvalidInput, "'action' must map element names to matrices");
        for (auto &[nm, m] : j.at("action").items()) {
            Mat64 a;
            try {
                a = m.get<Mat64>();
            } catch (const json::exception &e) {
                throw Error(ErrorKind::InvalidInput, "action of '" + nm + "': " + e.what());
            }
            acts[element_by_name(M, nm)] = a;
        }
    }
    return GModule(M, mods, acts);
}

inline std::vector<Elem> subset_from_list(const std::vector<size_t> &idx, const FiniteMonoid &M) {
    std::vector<Elem> out;
    for (auto i : idx) {
        if (i >= M.size())
            throw Error(ErrorKind::InvalidInput, "element index " + std::to_string(i) + " out of range");
        out.push_back(static_cast<Elem>(i));
    }
    return out;
}

inline json integer_json(const Integer &v) {
    if (v >= Integer(INT64_MIN) && v <= Integer(INT64_MAX))
        return to_ll(v);
    return v.str();
}

inline json canonical_json(const CanonicalForm &c) {
    json f = json::array();
    for (auto &d : c.invariant_factors)
        f.push_back(integer_json(d));
    return {{"free_rank", c.free_rank}, {"invariant_factors", f}, {"text", c.str()}};
}

// {degree, values: flat array of coefficient vectors}
inline json cochain_json(const Cochain &f) {
    json v = json::array();
    for (size_t k = 0; k < f.tuples(); ++k)
        v.push_back(f.value(k));
    return {{"degree", f.degree}, {"values", v}};
}

inline Cochain cochain_from_json(const json &j, const GModule &A) {
    const size_t n = field<size_t>(j, "degree");
    auto vals = field<std::vector<Vec64>>(j, "values");
    Cochain f = zero_cochain(A, n);
    if (vals.size() != f.tuples())
        throw Error(ErrorKind::InvalidInput, "cochain needs " + std::to_string(f.tuples()) + " values");
    for (size_t k = 0; k < vals.size(); ++k) {
        if (vals[k].size() != A.comps())
            throw Error(ErrorKind::InvalidInput, "coefficient vector length");
        A.reduce(vals[k].data());
        std::copy(vals[k].begin(), vals[k].end(), f.at(k));
    }
    f.normalised = is_normalised(A, f);
    return f;
}

// {r, entries: {"p,q": canonical}}
inline json page_json(const SpectralPageForms &pg, bool infinite) {
    json e = json::object();
    for (auto &x : pg.entries)
        e[std::to_string(x.p) + "," + std::to_string(x.q)] = canonical_json(x.form);
    return {{"r", infinite ? json("inf") : json(pg.r)}, {"entries", e}};
}

inline json suite_json(const SuiteReport &r) {
    json items = json::array();
    for (auto &i : r.items) {
        json it = {{"suite", i.suite}, {"key", i.key}, {"instance", i.instance}, {"pass", i.ok}};
        if (!i.ok)
            it["witness"] = i.witness;
        items.push_back(it);
    }
    return {{"pass", r.ok()}, {"items", items}};
}

inline std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string o = "\"";
    for (char c : s)
        o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

} // namespace moncoh
