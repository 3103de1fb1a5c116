#pragma once

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

using Elem = uint32_t;

class FiniteMonoid {
  public:
    FiniteMonoid() = default;

    size_t size() const { return n_; }
    Elem identity() const { return id_; }
    Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
    const std::vector<std::string> &names() const { return names_; }
    const std::string &name(Elem a) const { return names_[a]; }
    std::optional<Elem> find(const std::string &nm) const {
        for (Elem a = 0; a < n_; ++a)
            if (names_[a] == nm)
                return a;
        return std::nullopt;
    }
    std::vector<std::vector<Elem>> table() const {
        std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b)
                t[a][b] = mul(a, b);
        return t;
    }

    std::optional<Elem> inverse(Elem a) const {
        for (Elem b = 0; b < n_; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_)
                return b;
        return std::nullopt;
    }
    Elem inv(Elem a) const {
        auto b = inverse(a);
        if (!b)
            throw Error(ErrorKind::InvalidInput, "element " + name(a) + " is not invertible");
        return *b;
    }
    bool is_group() const {
        for (Elem a = 0; a < n_; ++a)
            if (!inverse(a))
                return false;
        return true;
    }
    bool is_commutative() const {
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a))
                    return false;
        return true;
    }
    std::vector<Elem> non_identity() const {
        std::vector<Elem> v;
        for (Elem a = 0; a < n_; ++a)
            if (a != id_)
                v.push_back(a);
        return v;
    }

  private:
    friend FiniteMonoid build_monoid(const std::vector<std::vector<size_t>> &, size_t,
                                     std::vector<std::string>);
    size_t n_ = 0;
    Elem id_ = 0;
    std::vector<Elem> table_;
    std::vector<std::string> names_;
};

inline FiniteMonoid build_monoid(const std::vector<std::vector<size_t>> &table, size_t identity,
                                 std::vector<std::string> names = {}) {
    const size_t n = table.size();
    if (n == 0)
        throw Error(ErrorKind::InvalidInput, "empty multiplication table");
    for (auto &r : table) {
        if (r.size() != n)
            throw Error(ErrorKind::InvalidInput, "table is not square");
        for (size_t v : r)
            if (v >= n)
                throw Error(ErrorKind::InvalidInput, "table entry out of range");
    }
    if (identity >= n)
        throw Error(ErrorKind::InvalidInput, "identity index out of range");
    if (names.empty())
        for (size_t i = 0; i < n; ++i)
            names.push_back(std::to_string(i));
    if (names.size() != n)
        throw Error(ErrorKind::InvalidInput, "element name count mismatch");
    for (size_t a = 0; a < n; ++a)
        if (table[identity][a] != a || table[a][identity] != a)
            throw Error(ErrorKind::NotIdentity,
                        "identity " + std::to_string(identity) + " fails at element " +
                            std::to_string(a));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorKind::NotAssociative,
                                "witness (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
    FiniteMonoid m;
    m.n_ = n;
    m.id_ = static_cast<Elem>(identity);
    m.names_ = std::move(names);
    m.table_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            m.table_[a * n + b] = static_cast<Elem>(table[a][b]);
    return m;
}

inline FiniteMonoid trivial_monoid() { return build_monoid({{0}}, 0, {"1"}); }

inline FiniteMonoid cyclic_group(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    std::vector<std::string> names;
    for (size_t a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g" + std::to_string(a)));
        for (size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    }
    return build_monoid(t, 0, names);
}

// (Z/2, ·): elements 0 and 1, identity 1
inline FiniteMonoid z2_multiplicative() {
    return build_monoid({{0, 0}, {0, 1}}, 1, {"0", "1"});
}

inline std::string cycle_notation(const std::vector<size_t> &perm) {
    std::vector<char> seen(perm.size(), 0);
    std::string out;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i)
            continue;
        out += "(";
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            out += std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// S_n, elements in lexicographic order of images; (ab)(k) = a(b(k))
inline FiniteMonoid symmetric_group(size_t n) {
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const size_t N = perms.size();
    std::vector<std::vector<size_t>> t(N, std::vector<size_t>(N));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            std::vector<size_t> c(n);
            for (size_t k = 0; k < n; ++k)
                c[k] = perms[a][perms[b][k]];
            t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    std::vector<std::string> names;
    for (auto &q : perms)
        names.push_back(cycle_notation(q));
    return build_monoid(t, 0, names);
}

// sign of a permutation element of symmetric_group(n): +1 / -1
inline int permutation_sign(const FiniteMonoid &S, Elem a) {
    // count inversions from the element's order: compute order parity via cycles in the name
    const std::string &nm = S.name(a);
    int sign = 1;
    size_t len = 0;
    for (char ch : nm) {
        if (ch == '(')
            len = 0;
        else if (ch == ')') {
            if (len > 0 && (len - 1) % 2 == 1)
                sign = -sign;
        } else
            ++len;
    }
    return sign;
}

// A finite monoid G = G'_1 x ... x G'_k x M_1 x ... x M_r.
// The leading factors are groups (their product is the group part), the rest
// commutative monoids. Elements are mixed-radix tuples, first factor most significant.
class SetupMonoid {
  public:
    SetupMonoid() = default;
    SetupMonoid(std::vector<FiniteMonoid> group_factors, std::vector<FiniteMonoid> monoid_factors) {
        for (auto &g : group_factors)
            if (!g.is_group())
                throw Error(ErrorKind::FirstFactorNotGroup, "group factor is not a group");
        for (auto &m : monoid_factors)
            if (!m.is_commutative())
                throw Error(ErrorKind::FactorNotCommutative, "monoid factor is not commutative");
        ngroup_ = group_factors.size();
        factors_ = std::move(group_factors);
        for (auto &m : monoid_factors)
            factors_.push_back(std::move(m));
        if (factors_.empty())
            factors_.push_back(trivial_monoid());
        if (ngroup_ == 0) {
            factors_.insert(factors_.begin(), trivial_monoid());
            ngroup_ = 1;
        }
        build();
    }

    const FiniteMonoid &product() const { return product_; }
    size_t size() const { return product_.size(); }
    Elem identity() const { return product_.identity(); }
    Elem mul(Elem a, Elem b) const { return product_.mul(a, b); }
    size_t factor_count() const { return factors_.size(); }
    size_t group_factor_count() const { return ngroup_; }
    const FiniteMonoid &factor(size_t i) const { return factors_[i]; }
    const FiniteMonoid &group_part() const { return group_part_; }
    std::vector<FiniteMonoid> monoid_parts() const {
        return {factors_.begin() + ngroup_, factors_.end()};
    }
    bool is_group() const { return group_only_; }

    Elem component(Elem x, size_t i) const { return comps_[x * factors_.size() + i]; }
    Elem compose(const std::vector<Elem> &c) const {
        Elem x = 0;
        for (size_t i = 0; i < factors_.size(); ++i)
            x = static_cast<Elem>(x * factors_[i].size() + c[i]);
        return x;
    }
    std::vector<Elem> components(Elem x) const {
        std::vector<Elem> c(factors_.size());
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = component(x, i);
        return c;
    }
    // embedding of factor i
    Elem embed(size_t i, Elem a) const {
        std::vector<Elem> c(factors_.size());
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = factors_[k].identity();
        c[i] = a;
        return compose(c);
    }
    // index of the group-part component of x in group_part()
    Elem group_component(Elem x) const { return gidx_[x]; }
    Elem from_group_part(Elem g) const { return gembed_[g]; }
    bool in_group_part(Elem x) const {
        for (size_t i = ngroup_; i < factors_.size(); ++i)
            if (component(x, i) != factors_[i].identity())
                return false;
        return true;
    }

  private:
    void build() {
        size_t n = 1;
        for (auto &f : factors_)
            n *= f.size();
        const size_t k = factors_.size();
        comps_.resize(n * k);
        std::vector<std::string> names(n);
        for (size_t x = 0; x < n; ++x) {
            size_t r = x;
            for (size_t i = k; i-- > 0;) {
                comps_[x * k + i] = static_cast<Elem>(r % factors_[i].size());
                r /= factors_[i].size();
            }
            std::string nm;
            size_t shown = 0;
            for (size_t i = 0; i < k; ++i) {
                if (factors_[i].size() == 1)
                    continue;
                nm += (shown++ ? "," : "") + factors_[i].name(comps_[x * k + i]);
            }
            names[x] = shown > 1 ? "(" + nm + ")" : (shown ? nm : "1");
        }
        std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
        std::vector<Elem> ca(k), cb(k);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                std::vector<Elem> c(k);
                for (size_t i = 0; i < k; ++i)
                    c[i] = factors_[i].mul(comps_[a * k + i], comps_[b * k + i]);
                t[a][b] = compose(c);
            }
        std::vector<Elem> idc(k);
        for (size_t i = 0; i < k; ++i)
            idc[i] = factors_[i].identity();
        product_ = build_monoid(t, compose(idc), names);

        // group part as its own monoid
        size_t ng = 1;
        for (size_t i = 0; i < ngroup_; ++i)
            ng *= factors_[i].size();
        gembed_.resize(ng);
        gidx_.assign(n, 0);
        for (size_t g = 0; g < ng; ++g) {
            std::vector<Elem> c = idc;
            size_t r = g;
            for (size_t i = ngroup_; i-- > 0;) {
                c[i] = static_cast<Elem>(r % factors_[i].size());
                r /= factors_[i].size();
            }
            gembed_[g] = compose(c);
        }
        for (size_t x = 0; x < n; ++x) {
            size_t g = 0;
            for (size_t i = 0; i < ngroup_; ++i)
                g = g * factors_[i].size() + comps_[x * k + i];
            gidx_[x] = static_cast<Elem>(g);
        }
        std::vector<std::vector<size_t>> gt(ng, std::vector<size_t>(ng));
        std::vector<std::string> gn(ng);
        for (size_t a = 0; a < ng; ++a) {
            gn[a] = product_.name(gembed_[a]);
            for (size_t b = 0; b < ng; ++b)
                gt[a][b] = gidx_[product_.mul(gembed_[a], gembed_[b])];
        }
        group_part_ = build_monoid(gt, gidx_[product_.identity()], gn);
        group_only_ = true;
        for (size_t i = ngroup_; i < k; ++i)
            if (factors_[i].size() > 1 && !factors_[i].is_group())
                group_only_ = false;
        group_only_ = group_only_ && product_.is_group();
    }

    std::vector<FiniteMonoid> factors_;
    size_t ngroup_ = 0;
    FiniteMonoid product_, group_part_;
    std::vector<Elem> comps_, gembed_, gidx_;
    bool group_only_ = false;
};

// First factor a group, remaining factors commutative monoids.
inline SetupMonoid direct_product(const std::vector<FiniteMonoid> &factors) {
    if (factors.empty())
        return SetupMonoid({trivial_monoid()}, {});
    if (!factors[0].is_group())
        throw Error(ErrorKind::FirstFactorNotGroup, "first factor must be a group");
    return SetupMonoid({factors[0]}, {factors.begin() + 1, factors.end()});
}

// Setup monoid for a single finite monoid: a group, or a commutative monoid.
inline SetupMonoid as_setup(const FiniteMonoid &M) {
    if (M.is_group())
        return SetupMonoid({M}, {});
    if (M.is_commutative())
        return SetupMonoid({}, {M});
    throw Error(ErrorKind::InvalidInput,
                "monoid is neither a group nor commutative; give its factorisation");
}

// D x G with D commutative: D joins the group part when it is a group.
inline SetupMonoid product_with(const FiniteMonoid &D, const SetupMonoid &G) {
    if (!D.is_commutative())
        throw Error(ErrorKind::DNotCommutative, "D must be commutative");
    std::vector<FiniteMonoid> gf, mf;
    if (D.is_group())
        gf.push_back(D);
    else
        mf.push_back(D);
    for (size_t i = 0; i < G.group_factor_count(); ++i)
        gf.push_back(G.factor(i));
    for (size_t i = G.group_factor_count(); i < G.factor_count(); ++i)
        mf.push_back(G.factor(i));
    return SetupMonoid(gf, mf);
}

// x^{-1} y x on the group part; monoid parts of y kept.
inline Elem conjugate_by(const SetupMonoid &G, Elem x, Elem y) {
    std::vector<Elem> c = G.components(y);
    for (size_t i = 0; i < G.group_factor_count(); ++i) {
        const FiniteMonoid &F = G.factor(i);
        Elem xi = G.component(x, i);
        c[i] = F.mul(F.mul(F.inv(xi), c[i]), xi);
    }
    return G.compose(c);
}

struct QuotientData {
    SetupMonoid ambient;
    std::vector<char> in_normal;   // membership of N
    std::vector<Elem> normal;      // N as a list
    std::vector<char> factor_in_normal; // per monoid factor: factor fully inside N
    FiniteMonoid quotient;         // G/N
    std::vector<Elem> proj;        // pi: G -> G/N
    std::vector<Elem> section;     // s: G/N -> G, s(1) = 1
    std::vector<Elem> star;        // s o pi
    std::vector<Elem> nu;          // (-)_N

    bool in_N(Elem x) const { return in_normal[x]; }
};

namespace detail {

struct NormalShape {
    std::vector<char> group_sub; // N'' inside the group part (indices of group_part())
    std::vector<char> factor_in; // per factor index (monoid factors only meaningful)
};

inline NormalShape check_normal_shape(const SetupMonoid &G, const std::vector<char> &inN) {
    const size_t n = G.size(), k = G.factor_count(), kg = G.group_factor_count();
    NormalShape sh;
    sh.factor_in.assign(k, 0);
    const FiniteMonoid &Gp = G.group_part();
    sh.group_sub.assign(Gp.size(), 0);
    for (Elem x = 0; x < n; ++x) {
        if (!inN[x])
            continue;
        for (size_t i = kg; i < k; ++i)
            if (G.component(x, i) != G.factor(i).identity())
                sh.factor_in[i] = 1;
        if (G.in_group_part(x))
            sh.group_sub[G.group_component(x)] = 1;
    }
    // N must equal N'' x prod_{i in E} M_i
    for (Elem x = 0; x < n; ++x) {
        bool expect = sh.group_sub[G.group_component(x)];
        for (size_t i = kg; i < k && expect; ++i)
            if (!sh.factor_in[i] && G.component(x, i) != G.factor(i).identity())
                expect = false;
        if (expect != static_cast<bool>(inN[x]))
            throw Error(ErrorKind::InvalidInput,
                        "N is not of the form N' x product of monoid factors (element " +
                            G.product().name(x) + ")");
    }
    // N'' a normal subgroup
    for (Elem a = 0; a < Gp.size(); ++a)
        for (Elem b = 0; b < Gp.size(); ++b)
            if (sh.group_sub[a] && sh.group_sub[b] && !sh.group_sub[Gp.mul(a, b)])
                throw Error(ErrorKind::NotSubgroup, "N' not closed under products");
    if (!sh.group_sub[Gp.identity()])
        throw Error(ErrorKind::NotSubgroup, "N' does not contain 1");
    for (Elem g = 0; g < Gp.size(); ++g)
        for (Elem m = 0; m < Gp.size(); ++m)
            if (sh.group_sub[m] && !sh.group_sub[Gp.mul(Gp.mul(Gp.inv(g), m), g)])
                throw Error(ErrorKind::NotNormal,
                            "witness g=" + Gp.name(g) + ", n=" + Gp.name(m));
    return sh;
}

} // namespace detail

// section_choice: one element per fiber of pi (any order), or empty for the default policy.
inline QuotientData quotient_with_section(const SetupMonoid &G, const std::vector<Elem> &N,
                                          const std::vector<Elem> &section_choice = {}) {
    const size_t n = G.size(), k = G.factor_count(), kg = G.group_factor_count();
    QuotientData Q;
    Q.ambient = G;
    Q.in_normal.assign(n, 0);
    for (Elem x : N) {
        if (x >= n)
            throw Error(ErrorKind::InvalidInput, "normal subset element out of range");
        Q.in_normal[x] = 1;
    }
    for (Elem x = 0; x < n; ++x)
        if (Q.in_normal[x])
            Q.normal.push_back(x);
    auto sh = detail::check_normal_shape(G, Q.in_normal);
    Q.factor_in_normal = sh.factor_in;
    const FiniteMonoid &Gp = G.group_part();

    // fiber key: (right... left coset x N'' of the group part, components outside N)
    std::vector<long> coset_of(Gp.size(), -1);
    long ncos = 0;
    for (Elem g = 0; g < Gp.size(); ++g) {
        if (coset_of[g] >= 0)
            continue;
        for (Elem m = 0; m < Gp.size(); ++m)
            if (sh.group_sub[m])
                coset_of[Gp.mul(g, m)] = ncos;
        ++ncos;
    }
    std::vector<std::vector<Elem>> keys(n);
    std::vector<std::vector<Elem>> distinct;
    Q.proj.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
        std::vector<Elem> key{static_cast<Elem>(coset_of[G.group_component(x)])};
        for (size_t i = kg; i < k; ++i)
            key.push_back(sh.factor_in[i] ? 0 : G.component(x, i));
        auto it = std::find(distinct.begin(), distinct.end(), key);
        if (it == distinct.end()) {
            Q.proj[x] = static_cast<Elem>(distinct.size());
            distinct.push_back(key);
        } else {
            Q.proj[x] = static_cast<Elem>(it - distinct.begin());
        }
    }
    const size_t nq = distinct.size();
    const Elem one = G.identity();
    Q.section.assign(nq, 0);
    if (section_choice.empty()) {
        // identity for the neutral fiber; otherwise least index with trivial
        // components in the factors swallowed by N
        std::vector<char> set(nq, 0);
        for (Elem x = 0; x < n; ++x) {
            Elem f = Q.proj[x];
            if (set[f])
                continue;
            bool ok = true;
            for (size_t i = kg; i < k; ++i)
                if (sh.factor_in[i] && G.component(x, i) != G.factor(i).identity())
                    ok = false;
            if (f == Q.proj[one]) {
                Q.section[f] = one;
                set[f] = 1;
            } else if (ok) {
                Q.section[f] = x;
                set[f] = 1;
            }
        }
    } else {
        std::vector<int> hits(nq, 0);
        for (Elem x : section_choice) {
            if (x >= n)
                throw Error(ErrorKind::BadSection, "section element out of range");
            Q.section[Q.proj[x]] = x;
            ++hits[Q.proj[x]];
        }
        for (size_t f = 0; f < nq; ++f)
            if (hits[f] != 1)
                throw Error(ErrorKind::BadSection,
                            "fiber " + std::to_string(f) + " has " + std::to_string(hits[f]) +
                                " representatives");
        if (Q.section[Q.proj[one]] != one)
            throw Error(ErrorKind::BadSection, "the identity must represent its own fiber");
    }
    // quotient monoid
    std::vector<std::vector<size_t>> qt(nq, std::vector<size_t>(nq));
    std::vector<std::string> qn(nq);
    for (size_t a = 0; a < nq; ++a) {
        qn[a] = "[" + G.product().name(Q.section[a]) + "]";
        for (size_t b = 0; b < nq; ++b)
            qt[a][b] = Q.proj[G.mul(Q.section[a], Q.section[b])];
    }
    Q.quotient = build_monoid(qt, Q.proj[one], qn);
    // star and nu
    Q.star.resize(n);
    Q.nu.resize(n);
    for (Elem x = 0; x < n; ++x) {
        Q.star[x] = Q.section[Q.proj[x]];
        std::vector<Elem> c = G.components(x);
        std::vector<Elem> sx = G.components(Q.star[x]);
        for (size_t i = 0; i < kg; ++i)
            c[i] = G.factor(i).mul(G.factor(i).inv(sx[i]), c[i]);
        for (size_t i = kg; i < k; ++i)
            if (!sh.factor_in[i])
                c[i] = G.factor(i).identity();
        Q.nu[x] = G.compose(c);
    }
    // invariants
    for (Elem x = 0; x < n; ++x) {
        if (!Q.in_normal[Q.nu[x]])
            throw Error(ErrorKind::BadSection, "nu(x) outside N for x=" + G.product().name(x));
        if (G.in_group_part(x) && G.mul(Q.star[x], Q.nu[x]) != x)
            throw Error(ErrorKind::BadSection,
                        "factorisation x = x* x_N fails at " + G.product().name(x));
        if (Q.in_normal[x] && Q.nu[x] != x)
            throw Error(ErrorKind::BadSection, "nu is not the identity on N");
        for (Elem y = 0; y < n; ++y)
            if (Q.proj[G.mul(x, y)] != Q.quotient.mul(Q.proj[x], Q.proj[y]))
                throw Error(ErrorKind::InvalidInput, "projection is not multiplicative");
    }
    return Q;
}

struct CosetRepMap {
    FiniteMonoid group;
    std::vector<char> in_sub;
    std::vector<Elem> sub;        // H as a list
    std::vector<Elem> coset;      // right coset index of g (Hg)
    std::vector<Elem> transversal; // s(coset), transversal[0] = 1
    std::vector<Elem> rep;        // _H(g) = g s(p(g))^{-1}

    size_t index() const { return transversal.size(); }
};

inline CosetRepMap coset_rep_map(const FiniteMonoid &G, const std::vector<Elem> &H) {
    if (!G.is_group())
        throw Error(ErrorKind::InvalidInput, "coset representatives need a group");
    CosetRepMap C;
    C.group = G;
    const size_t n = G.size();
    C.in_sub.assign(n, 0);
    for (Elem h : H) {
        if (h >= n)
            throw Error(ErrorKind::InvalidInput, "subgroup element out of range");
        C.in_sub[h] = 1;
    }
    if (!C.in_sub[G.identity()])
        throw Error(ErrorKind::NotSubgroup, "H does not contain 1");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (C.in_sub[a] && C.in_sub[b] && !C.in_sub[G.mul(a, b)])
                throw Error(ErrorKind::NotSubgroup,
                            "not closed: " + G.name(a) + "*" + G.name(b));
    for (Elem a = 0; a < n; ++a)
        if (C.in_sub[a])
            C.sub.push_back(a);
    C.coset.assign(n, static_cast<Elem>(-1));
    // identity coset first, then by least element
    auto mark = [&](Elem g) {
        Elem idx = static_cast<Elem>(C.transversal.size());
        C.transversal.push_back(g);
        for (Elem h : C.sub)
            C.coset[G.mul(h, g)] = idx;
    };
    mark(G.identity());
    for (Elem g = 0; g < n; ++g)
        if (C.coset[g] == static_cast<Elem>(-1))
            mark(g);
    C.rep.resize(n);
    for (Elem g = 0; g < n; ++g)
        C.rep[g] = G.mul(g, G.inv(C.transversal[C.coset[g]]));
    if (C.rep[G.identity()] != G.identity())
        throw Error(ErrorKind::InvalidInput, "rep(1) != 1");
    for (Elem h : C.sub)
        for (Elem g = 0; g < n; ++g)
            if (C.rep[G.mul(h, g)] != G.mul(h, C.rep[g]))
                throw Error(ErrorKind::InvalidInput, "rep(hg) != h rep(g)");
    for (Elem g = 0; g < n; ++g)
        if (!C.in_sub[C.rep[g]])
            throw Error(ErrorKind::InvalidInput, "rep(g) outside H");
    return C;
}

// subgroup generated by a list of elements of a group
inline std::vector<Elem> generated_subgroup(const FiniteMonoid &G, const std::vector<Elem> &gens) {
    std::vector<char> in(G.size(), 0);
    std::vector<Elem> out{G.identity()};
    in[G.identity()] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (Elem g : gens) {
            Elem y = G.mul(out[i], g);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace moncoh
