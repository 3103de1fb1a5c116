#pragma once

#include "cochain.hpp"
#include "gmodule.hpp"

#include <optional>
#include <vector>

namespace moncoh {

// G a group, H <= G, A over H, Ind the induced module with values stored on the transversal.
struct ShapiroContext {
    FiniteMonoid G;
    InducedModule I;

    const GModule &A() const { return I.A; }
    const GModule &ind() const { return I.ind; }
    const FiniteMonoid &H() const { return I.sub.H; }
    Elem rep(Elem g) const { return I.reps.rep[g]; }                       // _H(g) in G
    Elem to_H(Elem h) const { return static_cast<Elem>(I.sub.index[h]); } // G index -> H index
};

inline ShapiroContext shapiro_context(const FiniteMonoid &G, const std::vector<Elem> &H, const GModule &A) {
    if (!G.is_group())
        throw Error(ErrorKind::MonoidPartPresent, "Shapiro maps need a group");
    return {G, induced_module(G, H, A)};
}

// value of an Ind-valued cochain at (tuple) and group element x
inline Vec64 ind_eval(const ShapiroContext &S, const Cochain &f, const Elem *t, Elem x) {
    return S.I.value_at(f.at(t), x);
}

// alpha(f)(h1..hn) = f(h1..hn)(1)
inline Cochain shapiro_alpha(const ShapiroContext &S, const Cochain &f) {
    const size_t n = f.degree;
    std::vector<Elem> g(n);
    return tabulate(S.A(), n, [&](const Elem *h) {
        for (size_t i = 0; i < n; ++i)
            g[i] = S.I.sub.embed[h[i]];
        return ind_eval(S, f, g.data(), S.G.identity());
    });
}

// beta(f)(g1..gn)(x) = _H(x) f(_H(x)^{-1} _H(x g1), ..., _H(x g1..g_{n-1})^{-1} _H(x g1..gn))
inline Cochain shapiro_beta(const ShapiroContext &S, const Cochain &f) {
    const FiniteMonoid &G = S.G;
    const size_t n = f.degree, c = S.A().comps(), m = S.I.reps.index();
    std::vector<Elem> R(n + 1), h(n);
    return tabulate(S.ind(), n, [&](const Elem *g) {
        Vec64 out(m * c, 0);
        for (size_t k = 0; k < m; ++k) {
            Elem P = S.I.reps.transversal[k];
            R[0] = S.rep(P);
            for (size_t j = 1; j <= n; ++j) {
                P = G.mul(P, g[j - 1]);
                R[j] = S.rep(P);
            }
            for (size_t j = 0; j < n; ++j)
                h[j] = S.to_H(G.mul(G.inv(R[j]), R[j + 1]));
            S.A().add_act(S.to_H(R[0]), f.at(h.data()), 1, out.data() + k * c);
        }
        return out;
    });
}

// Homotopy kappa_{n+1}: C^{n+1}(G, Ind) -> C^n(G, Ind), written out termwise.
// flip_term (mutation hook): 0 flips the leading term, i >= 1 the i-th summand.
inline Cochain shapiro_kappa(const ShapiroContext &S, const Cochain &f, int flip_term = -1) {
    const FiniteMonoid &G = S.G;
    if (f.degree == 0)
        throw Error(ErrorKind::InvalidInput, "kappa needs degree >= 1");
    const size_t n = f.degree - 1, c = S.A().comps(), m = S.I.reps.index();
    std::vector<Elem> P(n + 1), R(n + 1), args(n + 1);
    return tabulate(S.ind(), n, [&](const Elem *g) {
        Vec64 out(m * c, 0);
        for (size_t k = 0; k < m; ++k) {
            const Elem x = S.I.reps.transversal[k];
            // prefix products P_j = x g1..gj and R_j = _H(P_j)
            P[0] = x;
            for (size_t j = 1; j <= n; ++j)
                P[j] = G.mul(P[j - 1], g[j - 1]);
            for (size_t j = 0; j <= n; ++j)
                R[j] = S.rep(P[j]);
            int64_t *o = out.data() + k * c;
            // f(x^{-1} _H(x), R_0^{-1} R_1, ..., R_{n-1}^{-1} R_n)(x)
            args[0] = G.mul(G.inv(x), R[0]);
            for (size_t j = 1; j <= n; ++j)
                args[j] = G.mul(G.inv(R[j - 1]), R[j]);
            Vec64 v = ind_eval(S, f, args.data(), x);
            S.A().add_scaled(v.data(), flip_term == 0 ? -1 : 1, o);
            for (size_t i = 1; i <= n; ++i) {
                for (size_t j = 0; j < i; ++j)
                    args[j] = g[j];
                args[i] = G.mul(G.inv(P[i]), R[i]);
                for (size_t j = i + 1; j <= n; ++j)
                    args[j] = G.mul(G.inv(R[j - 1]), R[j]);
                int64_t s = (i % 2) ? -1 : 1;
                if (flip_term == static_cast<int>(i))
                    s = -s;
                S.A().add_scaled(ind_eval(S, f, args.data(), x).data(), s, o);
            }
        }
        return out;
    });
}

struct ShapiroIsoReport {
    std::vector<CanonicalForm> ind_side, sub_side;
    bool agree = true;
    bool alpha_iso = true; // alpha induces an isomorphism on classes
};

// H^n(G, Ind) vs H^n(H, A), n <= n_max, plus the class map induced by alpha
inline ShapiroIsoReport shapiro_iso_report(const ShapiroContext &S, size_t n_max) {
    ShapiroIsoReport r;
    CohomologyData HI(S.ind(), n_max), HA(S.A(), n_max);
    const Variant v = Variant::Normalised;
    for (size_t n = 0; n <= n_max; ++n) {
        r.ind_side.push_back(HI.H[n].canonical());
        r.sub_side.push_back(HA.H[n].canonical());
        if (r.ind_side.back() != r.sub_side.back())
            r.agree = false;
        IntMatrix a = induced_matrix(HI.H[n], HA.H[n], [&](const Vec64 &x) {
            return to_vector(S.A(), shapiro_alpha(S, from_vector(S.ind(), n, x, v)), v);
        });
        AbHom F(HI.H[n].group(), HA.H[n].group(), a);
        AbHom z0(FgAbelianGroup::free(0), HI.H[n].group(), IntMatrix(HI.H[n].orders().size(), 0));
        AbHom z1(HA.H[n].group(), FgAbelianGroup::free(0), IntMatrix(0, HA.H[n].orders().size()));
        if (!homology_at(z0, F).canonical().trivial() || !homology_at(F, z1).canonical().trivial())
            r.alpha_iso = false;
    }
    return r;
}

} // namespace moncoh
