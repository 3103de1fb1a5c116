#pragma once

#include "cochain.hpp"
#include "double_complex.hpp"
#include "hochschild_serre.hpp"
#include "shapiro.hpp"
#include "torsor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace moncoh {

// Sign corruptions for mutation runs; -1 leaves the operator intact.
struct Faults {
    int kappa = -1;    // term of the Shapiro homotopy
    int shuffle = -1;  // injection index inside shuffle_p
    int hs_delta = -1; // term of the partial coboundary delta_p
    int dc_delta = -1; // term of the D-direction differential of the double complex

    bool any() const { return kappa >= 0 || shuffle >= 0 || hs_delta >= 0 || dc_delta >= 0; }
};

struct Bounds {
    size_t degree = 3;        // coboundary, spectral, double
    size_t shapiro_degree = 2;
    size_t sign_total = 7;    // injections p+q
    size_t pairing_total = 5;
    size_t interchange_total = 4;
    size_t samples = 100;
    uint64_t seed = 1;
};

struct CheckItem {
    std::string suite, key, instance;
    bool ok = false;
    std::string witness;
};

struct SuiteReport {
    std::vector<CheckItem> items;

    void add(const std::string &suite, const std::string &key, const std::string &inst, bool ok,
             const std::string &witness = {}) {
        items.push_back({suite, key, inst, ok, ok ? std::string() : witness});
    }
    bool ok() const {
        for (auto &i : items)
            if (!i.ok)
                return false;
        return true;
    }
    // true when every item whose key starts with prefix passed (and at least one exists)
    bool ok_prefix(const std::string &prefix) const {
        bool seen = false;
        for (auto &i : items)
            if (i.key.rfind(prefix, 0) == 0) {
                seen = true;
                if (!i.ok)
                    return false;
            }
        return seen;
    }
    std::string first_witness() const {
        for (auto &i : items)
            if (!i.ok)
                return i.key + " [" + i.instance + "]: " + i.witness;
        return {};
    }
    void append(const SuiteReport &o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

// ---- test instances ----

struct NamedMonoid {
    std::string name;
    SetupMonoid G;
};

struct NamedModule {
    std::string name;
    GModule A;
};

inline std::vector<NamedMonoid> test_monoids() {
    return {{"C2", as_setup(cyclic_group(2))},
            {"C3", as_setup(cyclic_group(3))},
            {"S3", as_setup(symmetric_group(3))},
            {"(Z/2,.)", as_setup(z2_multiplicative())},
            {"C2x(Z/2,.)", SetupMonoid({cyclic_group(2)}, {z2_multiplicative()})}};
}

// sign character on the group part when the first group factor has one, else trivial
inline int group_sign(const SetupMonoid &G, Elem g) {
    if (G.group_factor_count() == 0)
        return 1;
    const FiniteMonoid &F = G.factor(0);
    const Elem a = G.component(g, 0);
    if (F.size() == 2)
        return a == F.identity() ? 1 : -1;
    if (F.size() == 6)
        return permutation_sign(F, a);
    return 1;
}

// Z^2 with the coordinates swapped through the sign character (trivial when there is none)
inline GModule swap_module(const SetupMonoid &G) {
    return GModule::from_function(G.product(), {0, 0}, [&](Elem g) {
        return group_sign(G, g) == 1 ? Mat64{{1, 0}, {0, 1}} : Mat64{{0, 1}, {1, 0}};
    });
}

inline GModule sign_module(const SetupMonoid &G, int64_t modulus) {
    return GModule::from_function(G.product(), {modulus}, [&](Elem g) { return Mat64{{group_sign(G, g)}}; });
}

inline std::vector<NamedModule> test_modules(const SetupMonoid &G) {
    const FiniteMonoid &M = G.product();
    return {{"Z/2", GModule::trivial(M, {2})},
            {"Z/3", GModule::trivial(M, {3})},
            {"Z/4", GModule::trivial(M, {4})},
            {"Z^2 swap", swap_module(G)}};
}

inline std::string tuple_str(const FiniteMonoid &M, const Elem *t, size_t n) {
    std::string s = "(";
    for (size_t i = 0; i < n; ++i)
        s += (i ? "," : "") + M.name(t[i]);
    return s + ")";
}

inline std::string first_difference(const Cochain &a, const Cochain &b, const FiniteMonoid &M) {
    for (size_t k = 0; k < a.tuples(); ++k)
        if (a.value(k) != b.value(k)) {
            auto t = decode_tuple(a.msize, k, a.degree);
            return "at " + tuple_str(M, t.data(), t.size());
        }
    return {};
}

// basis cochain: generator j at tuple index k
inline Cochain basis_cochain(const GModule &A, size_t n, size_t k, size_t j) {
    Cochain f = zero_cochain(A, n);
    f.at(k)[j] = 1;
    f.normalised = is_normalised(A, f);
    return f;
}

// ---- coboundary, normalisation, long exact sequence, projectivity witness ----

inline SuiteReport coboundary_suite(const Bounds &b) {
    SuiteReport r;
    const std::string S = "coboundary";
    for (auto &[mn, G] : test_monoids())
        for (auto &[an, A] : test_modules(G)) {
            const std::string inst = mn + " / " + an;
            bool ok = true;
            std::string w;
            for (size_t n = 0; n <= b.degree && ok; ++n) {
                const size_t T = ipow(G.size(), n);
                for (size_t k = 0; k < T && ok; ++k)
                    for (size_t j = 0; j < A.comps() && ok; ++j) {
                        Cochain dd = coboundary(A, coboundary(A, basis_cochain(A, n, k, j)));
                        if (!dd.is_zero()) {
                            ok = false;
                            auto t = decode_tuple(G.size(), k, n);
                            w = "d(d(e" + std::to_string(j) + tuple_str(G.product(), t.data(), n) + ")) != 0 " +
                                first_difference(dd, zero_cochain(A, n + 2), G.product());
                        }
                    }
            }
            r.add(S, "coboundary.square_zero", inst, ok, w);
            auto full = cohomology_groups(A, b.degree, Variant::Full);
            auto norm = cohomology_groups(A, b.degree, Variant::Normalised);
            std::string d;
            for (size_t n = 0; n <= b.degree; ++n)
                if (full[n] != norm[n])
                    d = "H^" + std::to_string(n) + ": " + full[n].str() + " vs " + norm[n].str();
            r.add(S, "coboundary.normalised_equals_full", inst, d.empty(), d);
        }
    // long exact sequences
    const size_t nl = std::min<size_t>(b.degree, 2);
    auto les = [&](const std::string &inst, const ModuleSES &s) {
        auto spots = les_report(s, nl);
        std::string w, wf;
        for (auto &sp : spots) {
            if (!sp.exact)
                w = "not exact at " + sp.name;
            if (sp.delta_forced && !sp.delta_nonzero)
                wf = "connecting map vanishes where forced at " + sp.name;
        }
        r.add(S, "les.exact", inst, w.empty(), w);
        r.add(S, "les.connecting_forced", inst, wf.empty(), wf);
    };
    {
        FiniteMonoid C2 = cyclic_group(2);
        GModule Z2 = GModule::trivial(C2, {2}), Z4 = GModule::trivial(C2, {4});
        les("C2: 0 -> Z/2 -> Z/4 -> Z/2 -> 0", ses_with_section(Z2, Z4, Z2, {{2}}, {{1}}));
        SetupMonoid G = as_setup(C2);
        les("C2: 0 -> Z -> Z^2 swap -> Z sign -> 0",
            ses_with_section(GModule::trivial(C2, {0}), swap_module(G), sign_module(G, 0), {{1}, {1}}, {{1, -1}}));
    }
    DualBasisReport db = dual_basis_witness();
    std::string fw = db.failures.empty() ? std::string() : db.failures.front();
    r.add(S, "projectivity.linear", "(Z/2,.)", db.linear, fw);
    r.add(S, "projectivity.dual_basis", "(Z/2,.)", db.identity, fw);
    r.add(S, "projectivity.not_cyclic", "(Z/2,.), box " + std::to_string(db.box), db.not_cyclic, fw);
    return r;
}

// ---- Shapiro ----

struct ShapiroInstance {
    std::string name;
    FiniteMonoid G;
    std::vector<Elem> H;
};

inline std::vector<ShapiroInstance> shapiro_instances() {
    FiniteMonoid C2 = cyclic_group(2), S3 = symmetric_group(3);
    std::vector<Elem> A3, T;
    for (Elem g = 0; g < S3.size(); ++g)
        if (permutation_sign(S3, g) == 1)
            A3.push_back(g);
    // <(12)>: identity and the first transposition
    for (Elem g = 0; g < S3.size(); ++g)
        if (g == S3.identity() || (T.size() < 2 && permutation_sign(S3, g) == -1))
            T.push_back(g);
    return {{"(C2,1)", C2, {C2.identity()}}, {"(S3,A3)", S3, A3}, {"(S3,<" + S3.name(T[1]) + ">)", S3, T}};
}

inline SuiteReport shapiro_suite(const Bounds &b, const Faults &f = {}) {
    SuiteReport r;
    const std::string S = "shapiro";
    const size_t N = b.shapiro_degree;
    for (auto &I : shapiro_instances())
        for (int64_t m : {2, 3}) {
            const std::string inst = I.name + " / Z/" + std::to_string(m);
            SubgroupMonoid sub = subgroup_monoid(I.G, I.H);
            ShapiroContext C = shapiro_context(I.G, I.H, GModule::trivial(sub.H, {m}));
            const GModule &Ind = C.ind(), &A = C.A();
            std::string wa, wb, wab, wh;
            for (size_t n = 0; n <= N; ++n) {
                for (size_t k = 0; k < ipow(I.G.size(), n); ++k)
                    for (size_t j = 0; j < Ind.comps(); ++j) {
                        Cochain e = basis_cochain(Ind, n, k, j);
                        Cochain lhs = coboundary(A, shapiro_alpha(C, e)), rhs = shapiro_alpha(C, coboundary(Ind, e));
                        if (wa.empty() && !(lhs == rhs))
                            wa = "degree " + std::to_string(n) + " " + first_difference(lhs, rhs, sub.H);
                        // d kappa_n + kappa_{n+1} d = beta alpha - id
                        Cochain h = shapiro_kappa(C, coboundary(Ind, e), f.kappa);
                        if (n >= 1)
                            h = cochain_add(Ind, h, coboundary(Ind, shapiro_kappa(C, e, f.kappa)));
                        Cochain t = cochain_sub(Ind, shapiro_beta(C, shapiro_alpha(C, e)), e);
                        if (wh.empty() && !(h == t))
                            wh = "degree " + std::to_string(n) + " basis " + std::to_string(k) + "." +
                                 std::to_string(j) + " " + first_difference(h, t, I.G);
                    }
                for (size_t k = 0; k < ipow(sub.H.size(), n); ++k)
                    for (size_t j = 0; j < A.comps(); ++j) {
                        Cochain e = basis_cochain(A, n, k, j);
                        Cochain lhs = coboundary(Ind, shapiro_beta(C, e)), rhs = shapiro_beta(C, coboundary(A, e));
                        if (wb.empty() && !(lhs == rhs))
                            wb = "degree " + std::to_string(n) + " " + first_difference(lhs, rhs, I.G);
                        Cochain ab = shapiro_alpha(C, shapiro_beta(C, e));
                        if (wab.empty() && !(ab == e))
                            wab = "degree " + std::to_string(n) + " " + first_difference(ab, e, sub.H);
                    }
            }
            r.add(S, "shapiro.alpha_chain_map", inst, wa.empty(), wa);
            r.add(S, "shapiro.beta_chain_map", inst, wb.empty(), wb);
            r.add(S, "shapiro.alpha_beta_identity", inst, wab.empty(), wab);
            r.add(S, "shapiro.homotopy", inst, wh.empty(), wh);
            if (!f.any()) {
                ShapiroIsoReport iso = shapiro_iso_report(C, b.degree);
                std::string d;
                for (size_t n = 0; n < iso.ind_side.size(); ++n)
                    if (iso.ind_side[n] != iso.sub_side[n])
                        d = "H^" + std::to_string(n) + ": " + iso.ind_side[n].str() + " vs " + iso.sub_side[n].str();
                r.add(S, "shapiro.cohomology_iso", inst, iso.agree, d);
                r.add(S, "shapiro.alpha_class_iso", inst, iso.alpha_iso, "alpha is not bijective on classes");
            }
        }
    return r;
}

// ---- shuffles ----

inline int inversion_sign(const std::vector<size_t> &perm) {
    size_t inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return (inv % 2) ? -1 : 1;
}

inline SuiteReport shuffle_suite(const Bounds &b, const Faults &f = {}) {
    SuiteReport r;
    const std::string S = "shuffle";
    if (!f.any()) {
        std::string w, wp;
        size_t count = 0;
        for (size_t n = 0; n <= b.sign_total; ++n)
            for (size_t p = 0; p <= n; ++p)
                for (auto &m : all_injections(p, n - p)) {
                    ++count;
                    int s_star = complement_and_sign(m.phi_star, n - p, p).sign;
                    int expect = ((p * (n - p)) % 2) ? -1 : 1;
                    if (m.sign * s_star != expect && w.empty())
                        w = "p=" + std::to_string(p) + " q=" + std::to_string(n - p);
                    // independent: parity of the permutation listing phi* then phi
                    std::vector<size_t> perm = m.phi_star;
                    perm.insert(perm.end(), m.phi.begin(), m.phi.end());
                    if (inversion_sign(perm) != m.sign && wp.empty())
                        wp = "p=" + std::to_string(p) + " q=" + std::to_string(n - p);
                }
        r.add(S, "shuffle.sign_identity", std::to_string(count) + " injections", w.empty(), w);
        r.add(S, "shuffle.sign_parity", std::to_string(count) + " injections", wp.empty(), wp);
        SetupMonoid G = SetupMonoid({symmetric_group(3)}, {z2_multiplicative()});
        CounterRng rng(b.seed, 0x9a1);
        for (size_t n = 2; n <= b.pairing_total; ++n)
            for (size_t p = 1; p < n; ++p) {
                std::vector<std::vector<Elem>> tuples;
                for (size_t s = 0; s < 16; ++s) {
                    std::vector<Elem> z(n);
                    for (auto &e : z)
                        e = static_cast<Elem>(rng.below(G.size()));
                    tuples.push_back(z);
                }
                PairingReport pr = pairing_report(G, p, n - p, tuples);
                r.add(S, "shuffle.pairing", "S3x(Z/2,.) p=" + std::to_string(p) + " q=" + std::to_string(n - p),
                      pr.ok, pr.witness);
            }
    }
    std::vector<NamedMonoid> ms = {{"S3", as_setup(symmetric_group(3))},
                                   {"C2x(Z/2,.)", SetupMonoid({cyclic_group(2)}, {z2_multiplicative()})}};
    for (auto &[mn, G] : ms)
        for (auto &[an, A] : std::vector<NamedModule>{{"Z sign", sign_module(G, 0)}, {"Z^2 swap", swap_module(G)}}) {
            CounterRng rng(b.seed, 0x5f1 + G.size());
            for (size_t n = 2; n <= b.interchange_total; ++n)
                for (size_t p = 1; p < n; ++p) {
                    const size_t q = n - p;
                    std::string w;
                    for (size_t s = 0; s < b.samples && w.empty(); ++s) {
                        Cochain c = random_cochain(A, n - 1, false, rng);
                        Cochain lhs = shuffle_apply(G, A, coboundary(A, c), p, f.shuffle);
                        Cochain r1 = partial_q(A, shuffle_apply(G, A, c, p, f.shuffle), p, q);
                        Cochain r2 = partial_p(G, A, shuffle_apply(G, A, c, p - 1, f.shuffle), p, q, f.hs_delta);
                        Cochain rhs = cochain_add(A, r1, r2, (q % 2) ? -1 : 1);
                        if (!(lhs == rhs))
                            w = "sample " + std::to_string(s) + " " + first_difference(lhs, rhs, G.product());
                    }
                    r.add(S, "shuffle.interchange",
                          mn + " / " + an + " p=" + std::to_string(p) + " q=" + std::to_string(q), w.empty(), w);
                }
        }
    return r;
}

// ---- spectral sequence ----

struct SpectralInstance {
    std::string name;
    SetupMonoid G;
    std::vector<Elem> U;
    GModule A;
};

inline std::vector<SpectralInstance> spectral_instances() {
    std::vector<SpectralInstance> out;
    for (bool monoid_part : {false, true}) {
        SetupMonoid G = monoid_part ? SetupMonoid({symmetric_group(3)}, {z2_multiplicative()})
                                    : as_setup(symmetric_group(3));
        std::vector<Elem> U;
        for (Elem g = 0; g < G.size(); ++g) {
            bool in = permutation_sign(G.factor(0), G.component(g, 0)) == 1;
            for (size_t i = 1; i < G.factor_count(); ++i)
                in = in && G.component(g, i) == G.factor(i).identity();
            if (in)
                U.push_back(g);
        }
        const std::string gn = monoid_part ? "S3x(Z/2,.) / A3" : "S3 / A3";
        out.push_back({gn + " / Z/3", G, U, GModule::trivial(G.product(), {3})});
        out.push_back({gn + " / Z/3 sign", G, U, sign_module(G, 3)});
    }
    return out;
}

inline SuiteReport spectral_suite(const Bounds &b) {
    SuiteReport r;
    const std::string S = "spectral";
    for (auto &I : spectral_instances()) {
        HSContext C = hs_context(I.G, I.A, I.U);
        HSComparison cmp = hochschild_serre_comparison(C, b.degree, true);
        for (auto &it : cmp.items)
            r.add(S, it.key, I.name + " p=" + std::to_string(it.p) + " q=" + std::to_string(it.q), it.ok, it.detail);
        for (size_t p = 0; p + 1 <= b.degree; ++p) {
            RowZeroReport rz = row_zero_report(C, p);
            r.add(S, "spectral.row0_invariant_values", I.name + " p=" + std::to_string(p), rz.values_invariant,
                  rz.witness);
            r.add(S, "spectral.row0_inverse_maps", I.name + " p=" + std::to_string(p), rz.inverse_maps, rz.witness);
        }
    }
    return r;
}

// ---- double complex ----

struct DoubleInstance {
    std::string name;
    FiniteMonoid D;
    SetupMonoid G;
    std::function<GModule(const ProductSetup &)> module;
};

inline std::vector<DoubleInstance> double_instances() {
    auto z_by_D = [](const ProductSetup &P) { // D = (Z/2,.) acting on Z by multiplication with d
        return GModule::from_function(P.M(), {0}, [&](Elem z) {
            return Mat64{{P.projD[z] == P.D.identity() ? int64_t(1) : int64_t(0)}};
        });
    };
    auto z_sign_D = [](const ProductSetup &P) { // D = C2 acting on Z by -1
        return GModule::from_function(P.M(), {0}, [&](Elem z) {
            return Mat64{{P.projD[z] == P.D.identity() ? int64_t(1) : int64_t(-1)}};
        });
    };
    auto z_sign_G = [](const ProductSetup &P) {
        return GModule::from_function(P.M(), {0}, [&](Elem z) {
            return Mat64{{int64_t(permutation_sign(P.G.factor(0), P.G.component(P.projG[z], 0)))}};
        });
    };
    auto trivial = [](int64_t m) {
        return [m](const ProductSetup &P) { return GModule::trivial(P.M(), {m}); };
    };
    FiniteMonoid Z2m = z2_multiplicative(), C2 = cyclic_group(2), S3 = symmetric_group(3);
    return {{"(Z/2,.) x C2 / Z/2", Z2m, as_setup(C2), trivial(2)},
            {"(Z/2,.) x C2 / Z by d", Z2m, as_setup(C2), z_by_D},
            {"C2 x C2 / Z/2", C2, as_setup(C2), trivial(2)},
            {"C2 x C2 / Z with D by -1", C2, as_setup(C2), z_sign_D},
            {"(Z/2,.) x S3 / Z sign", Z2m, as_setup(S3), z_sign_G}};
}

inline SuiteReport double_suite(const Bounds &b, const Faults &f = {}) {
    SuiteReport r;
    const std::string S = "double";
    for (auto &I : double_instances()) {
        ProductSetup P = product_setup(I.D, I.G);
        DoubleComplex X = build_double(I.D, I.G, I.module(P), b.degree);
        DoubleIdentityReport id = double_identity_report(X, std::max<size_t>(b.samples / 4, 8), b.seed, f.dc_delta, f.shuffle);
        r.add(S, "double.delta_square_zero", I.name, id.delta_squared, id.witness);
        r.add(S, "double.partial_square_zero", I.name, id.partial_squared, id.witness);
        r.add(S, "double.differentials_commute", I.name, id.commute, id.witness);
        r.add(S, "double.total_matrix", I.name, id.matrix_agrees, id.witness);
        r.add(S, "double.alpha_chain_map", I.name, id.alpha_chain_map, id.witness);
        r.add(S, "double.section_identity", I.name, id.section_identity, id.witness);
        r.add(S, "double.extension_closed_form", I.name, id.extend_closed_form, id.witness);
        r.add(S, "double.extension_vanishes_on_D", I.name, id.extend_vanishes_on_D, id.witness);
        r.add(S, "double.extension_section", I.name, id.extend_alpha, id.witness);
        if (f.any())
            continue;
        ResidualReport res = residual_report(X, b.samples, b.seed);
        r.add(S, "double.residual_cancellation", I.name + ", " + std::to_string(res.samples) + " samples",
              res.residual_zero && res.pairs_cancel && res.sum_matches, res.witness);
        QuasiIsoReport q = quasi_iso_report(X);
        r.add(S, "double.quasi_iso", I.name, q.agree, q.witness);
        r.add(S, "double.alpha_class_iso", I.name, q.alpha_iso, q.witness);
        r.add(S, "double.extension_preimages", I.name, q.extension_preimages, q.witness);
    }
    if (f.any())
        return r;
    // splitting for D = C2 acting trivially
    FiniteMonoid C2 = cyclic_group(2), C3 = cyclic_group(3);
    for (auto &[nm, G, m] : std::vector<std::tuple<std::string, FiniteMonoid, int64_t>>{
             {"C2 x C2 / Z/2", C2, 2}, {"C2 x C3 / Z/3", C3, 3}, {"C2 x S3 / Z", symmetric_group(3), 0}}) {
        ProductSetup P = product_setup(C2, as_setup(G));
        DoubleComplex X = build_double(C2, as_setup(G), GModule::trivial(P.M(), {m}), b.degree);
        SplittingReport sp = splitting_report(X);
        r.add(S, "double.splitting", nm, sp.agree, sp.witness);
        r.add(S, "double.tensor_map", nm, sp.tensor_commutes, sp.witness);
    }
    for (size_t k = 1; k <= 2; ++k)
        for (auto &[nm, A] : std::vector<NamedModule>{{"S3 / Z", GModule::trivial(symmetric_group(3), {0})},
                                                      {"C2 / Z/2", GModule::trivial(C2, {2})}}) {
            FiberReport fr = mapping_fiber_report(A, k, b.degree);
            std::string w;
            for (size_t n = 0; n < fr.fiber.size(); ++n)
                if (fr.fiber[n] != fr.expected[n])
                    w = "H^" + std::to_string(n) + ": " + fr.fiber[n].str() + " vs " + fr.expected[n].str();
            r.add(S, "double.mapping_fiber", nm + " r=" + std::to_string(k), fr.agree, w);
        }
    {
        FiniteMonoid S3 = symmetric_group(3), Z2m = z2_multiplicative();
        std::vector<Elem> A3;
        for (Elem g = 0; g < S3.size(); ++g)
            if (permutation_sign(S3, g) == 1)
                A3.push_back(g);
        SubgroupMonoid H = subgroup_monoid(S3, A3);
        ProductSetup PH = product_setup(Z2m, as_setup(H.H));
        GModule A = GModule::from_function(PH.M(), {3}, [&](Elem z) {
            return Mat64{{PH.projD[z] == Z2m.identity() ? int64_t(1) : int64_t(0)}};
        });
        MonoidShapiroReport ms = monoid_shapiro_report(Z2m, S3, A3, A, std::min<size_t>(b.degree, 2), b.seed);
        r.add(S, "double.monoid_shapiro", "(Z/2,.), (S3,A3), Z/3", ms.agree, ms.witness);
        r.add(S, "double.monoid_shapiro_alpha", "(Z/2,.), (S3,A3), Z/3", ms.alpha_chain_maps, ms.witness);
    }
    return r;
}

// ---- torsors and extensions ----

inline SuiteReport torsor_suite(const Bounds &) {
    SuiteReport r;
    const std::string S = "torsor";
    FiniteMonoid C2 = cyclic_group(2);
    std::vector<std::tuple<std::string, GModule, size_t>> mods = {
        {"C2 / Z/3 inversion", GModule::from_function(C2, {3}, [&](Elem g) {
             return Mat64{{g == C2.identity() ? int64_t(1) : int64_t(-1)}};
         }), 3},
        {"C2 / Z/4", GModule::trivial(C2, {4}), 4}};
    for (auto &[nm, A, m] : mods) {
        CohomologyData H(A, 1, Variant::Full);
        SemilinearModule SL = cyclic_scalars(A, m);
        std::string wt, we;
        auto cs = all_one_cocycles(A);
        for (auto &c : cs) {
            TorsorInstance T = cocycle_to_torsor(A, c);
            for (size_t x = 0; x < T.nx && wt.empty(); ++x)
                if (!H.cohomologous(torsor_to_cocycle(T, x), c))
                    wt = "cocycle " + first_difference(c, zero_cochain(A, 1), C2) + " basepoint " + std::to_string(x);
            ExtensionInstance E = extension_from_cocycle(SL, c);
            if (!H.cohomologous(cocycle_from_extension(E), c) && we.empty())
                we = "cocycle " + first_difference(c, zero_cochain(A, 1), C2);
        }
        r.add(S, "torsor.round_trip", nm, wt.empty(), wt);
        r.add(S, "extension.round_trip", nm, we.empty(), we);
        TorsorClassReport tc = torsor_class_report(A);
        const Integer h1 = H.H[1].canonical().order();
        r.add(S, "torsor.class_count", nm + ", " + std::to_string(tc.cocycles) + " cocycles",
              Integer(tc.torsor_classes) == h1 && Integer(tc.cohomology_classes) == h1,
              std::to_string(tc.torsor_classes) + " torsor classes, " + std::to_string(tc.cohomology_classes) +
                  " cohomology classes, |H^1| = " + h1.str());
        r.add(S, "torsor.classification", nm, tc.well_defined && tc.injective,
              tc.well_defined ? "isomorphic torsors from non-cohomologous cocycles" : "cohomologous cocycles give non-isomorphic torsors");
    }
    return r;
}

inline const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> n = {"coboundary", "shapiro", "shuffle", "spectral", "double", "torsor"};
    return n;
}

inline SuiteReport run_suite(const std::string &name, const Bounds &b, const Faults &f = {}) {
    if (name == "coboundary")
        return coboundary_suite(b);
    if (name == "shapiro")
        return shapiro_suite(b, f);
    if (name == "shuffle")
        return shuffle_suite(b, f);
    if (name == "spectral")
        return spectral_suite(b);
    if (name == "double")
        return double_suite(b, f);
    if (name == "torsor")
        return torsor_suite(b);
    if (name == "all") {
        SuiteReport r;
        for (auto &s : suite_names())
            r.append(run_suite(s, b, f));
        return r;
    }
    throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

// ---- mutation sensitivity ----

struct MutationOutcome {
    std::string target; // kappa, shuffle, hs-delta, dc-delta
    int term = 0;
    bool detected = false;
    std::string witness;
};

// flip each sign of the four operators in turn and rerun the suite that exercises it
inline std::vector<MutationOutcome> mutation_sweep(const Bounds &b0) {
    Bounds b = b0;
    b.samples = std::min<size_t>(b.samples, 20);
    b.degree = std::min<size_t>(b.degree, 2);
    std::vector<MutationOutcome> out;
    auto run = [&](const std::string &target, int max_term, auto &&set, const std::string &suite) {
        for (int t = 0; t <= max_term; ++t) {
            Faults f;
            set(f, t);
            SuiteReport r = run_suite(suite, b, f);
            out.push_back({target, t, !r.ok(), r.first_witness()});
        }
    };
    // kappa_{n+1} on degree n+1 inputs has terms 0..n; the suite reaches n = shapiro_degree
    run("kappa", static_cast<int>(b.shapiro_degree), [](Faults &f, int t) { f.kappa = t; }, "shapiro");
    // largest injection family in the interchange check: C(4, 2) = 6
    run("shuffle", 5, [](Faults &f, int t) { f.shuffle = t; }, "shuffle");
    // delta_p has terms 0..p, p <= interchange_total - 1
    run("hs-delta", static_cast<int>(b.interchange_total - 1), [](Faults &f, int t) { f.hs_delta = t; }, "shuffle");
    // D-direction differential on C^{p,q}, p <= degree - 1: terms 0..p+1
    run("dc-delta", static_cast<int>(b.degree), [](Faults &f, int t) { f.dc_delta = t; }, "double");
    return out;
}

} // namespace moncoh
