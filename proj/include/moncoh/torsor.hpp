#pragma once

#include "cochain.hpp"
#include "gmodule.hpp"

#include <optional>
#include <vector>

namespace moncoh {

// Finite A-torsor with a compatible G-action; points are indices 0..nx-1.
struct TorsorInstance {
    GModule A;
    size_t nx = 0;
    std::vector<size_t> mu;   // nx x |A|: mu(x, a)
    std::vector<size_t> gact; // |G| x nx: g . x

    size_t act_A(size_t x, size_t a) const { return mu[x * A.element_count() + a]; }
    size_t act_G(Elem g, size_t x) const { return gact[g * nx + x]; }

    // the unique a with mu(x, a) = y
    size_t division(size_t x, size_t y) const {
        for (size_t a = 0; a < A.element_count(); ++a)
            if (act_A(x, a) == y)
                return a;
        throw Error(ErrorKind::InvalidInput, "torsor is not transitive");
    }

    void verify() const {
        const size_t na = A.element_count();
        const FiniteMonoid &G = A.monoid();
        const Vec64 zero(A.comps(), 0);
        const size_t a0 = A.element_index(zero);
        // right action of A
        for (size_t x = 0; x < nx; ++x) {
            if (act_A(x, a0) != x)
                throw Error(ErrorKind::InvalidInput, "0 does not act trivially on the torsor");
            for (size_t a = 0; a < na; ++a)
                for (size_t b = 0; b < na; ++b) {
                    Vec64 s = A.element(a);
                    A.add_scaled(A.element(b).data(), 1, s.data());
                    if (act_A(act_A(x, a), b) != act_A(x, A.element_index(s)))
                        throw Error(ErrorKind::InvalidInput, "torsor action is not an action");
                }
        }
        // (id, mu): X x A -> X x X is a bijection
        std::vector<char> hit(nx * nx, 0);
        for (size_t x = 0; x < nx; ++x)
            for (size_t a = 0; a < na; ++a) {
                size_t y = act_A(x, a);
                if (hit[x * nx + y]++)
                    throw Error(ErrorKind::InvalidInput, "torsor action is not free");
            }
        if (nx * na != nx * nx)
            throw Error(ErrorKind::InvalidInput, "torsor action is not transitive");
        // G-action and compatibility g mu(x, a) = mu(g x, g a)
        for (size_t x = 0; x < nx; ++x) {
            if (act_G(G.identity(), x) != x)
                throw Error(ErrorKind::InvalidInput, "identity does not fix the torsor");
            for (Elem g = 0; g < G.size(); ++g) {
                for (Elem h = 0; h < G.size(); ++h)
                    if (act_G(g, act_G(h, x)) != act_G(G.mul(g, h), x))
                        throw Error(ErrorKind::InvalidInput, "G-action on the torsor is not an action");
                for (size_t a = 0; a < na; ++a)
                    if (act_G(g, act_A(x, a)) != act_A(act_G(g, x), A.element_index(A.act(g, A.element(a)))))
                        throw Error(ErrorKind::NotEquivariant, "g mu(x,a) != mu(gx, ga) at g=" + G.name(g));
            }
        }
    }
};

inline void require_cocycle(const GModule &A, const Cochain &c) {
    if (!coboundary(A, c).is_zero())
        throw Error(ErrorKind::NotCocycle, "1-cochain is not a cocycle");
}

// X = A, mu(x, a) = x + a, g.x = c(g) + g x
inline TorsorInstance cocycle_to_torsor(const GModule &A, const Cochain &c) {
    if (c.degree != 1)
        throw Error(ErrorKind::InvalidInput, "torsors come from 1-cocycles");
    require_cocycle(A, c);
    const size_t na = A.element_count();
    const FiniteMonoid &G = A.monoid();
    TorsorInstance T{A, na, std::vector<size_t>(na * na), std::vector<size_t>(G.size() * na)};
    for (size_t x = 0; x < na; ++x) {
        Vec64 vx = A.element(x);
        for (size_t a = 0; a < na; ++a) {
            Vec64 s = vx;
            A.add_scaled(A.element(a).data(), 1, s.data());
            T.mu[x * na + a] = A.element_index(s);
        }
        for (Elem g = 0; g < G.size(); ++g) {
            Vec64 y = c.value(g);
            A.add_act(g, vx.data(), 1, y.data());
            T.gact[g * na + x] = A.element_index(y);
        }
    }
    T.verify();
    return T;
}

// c_X(g) = x \ (g x)
inline Cochain torsor_to_cocycle(const TorsorInstance &T, size_t basepoint) {
    Cochain c = zero_cochain(T.A, 1);
    for (Elem g = 0; g < T.A.monoid().size(); ++g) {
        Vec64 a = T.A.element(T.division(basepoint, T.act_G(g, basepoint)));
        std::copy(a.begin(), a.end(), c.at(g));
    }
    c.normalised = is_normalised(T.A, c);
    return c;
}

// An isomorphism is fixed by the image of one point; try each.
inline std::optional<std::vector<size_t>> torsor_isomorphism(const TorsorInstance &S, const TorsorInstance &T) {
    if (S.nx != T.nx)
        return std::nullopt;
    const size_t na = S.A.element_count();
    for (size_t y = 0; y < T.nx; ++y) {
        std::vector<size_t> phi(S.nx);
        for (size_t a = 0; a < na; ++a)
            phi[S.act_A(0, a)] = T.act_A(y, a);
        bool ok = true;
        for (size_t x = 0; x < S.nx && ok; ++x) {
            for (size_t a = 0; a < na && ok; ++a)
                ok = phi[S.act_A(x, a)] == T.act_A(phi[x], a);
            for (Elem g = 0; g < S.A.monoid().size() && ok; ++g)
                ok = phi[S.act_G(g, x)] == T.act_G(g, phi[x]);
        }
        if (ok)
            return phi;
    }
    return std::nullopt;
}

// Middle term A x R of the extension attached to a 1-cocycle, element (a, r) at index a |R| + r.
struct ExtensionInstance {
    SemilinearModule data;
    std::vector<size_t> gact; // |G| x |E|

    size_t size() const { return data.A.element_count() * data.R.n; }
    size_t index(size_t a, size_t r) const { return a * data.R.n + r; }
    size_t a_part(size_t e) const { return e / data.R.n; }
    size_t r_part(size_t e) const { return e % data.R.n; }
    size_t act(Elem g, size_t e) const { return gact[g * size() + e]; }
    size_t plus(size_t e, size_t f) const {
        const GModule &A = data.A;
        Vec64 s = A.element(a_part(e));
        A.add_scaled(A.element(a_part(f)).data(), 1, s.data());
        return index(A.element_index(s), data.R.plus(r_part(e), r_part(f)));
    }
    size_t negate(size_t e) const {
        for (size_t f = 0; f < size(); ++f)
            if (plus(e, f) == index(data.A.element_index(Vec64(data.A.comps(), 0)), data.R.zero))
                return f;
        throw Error(ErrorKind::InvalidInput, "no additive inverse");
    }
    size_t scale(size_t r, size_t e) const {
        return index(data.act_scalar(r, a_part(e)), data.R.times(r, r_part(e)));
    }

    // action law, additivity, semilinearity, equivariance of A -> E -> R
    void verify() const {
        const FiniteMonoid &G = data.A.monoid();
        const FiniteRing &R = data.R;
        for (size_t e = 0; e < size(); ++e) {
            if (act(G.identity(), e) != e)
                throw Error(ErrorKind::InvalidInput, "identity does not act trivially on E");
            for (Elem g = 0; g < G.size(); ++g) {
                for (Elem h = 0; h < G.size(); ++h)
                    if (act(g, act(h, e)) != act(G.mul(g, h), e))
                        throw Error(ErrorKind::InvalidInput, "action law fails on E at g=" + G.name(g));
                for (size_t f = 0; f < size(); ++f)
                    if (act(g, plus(e, f)) != plus(act(g, e), act(g, f)))
                        throw Error(ErrorKind::InvalidInput, "G does not act additively on E");
                for (size_t r = 0; r < R.n; ++r)
                    if (act(g, scale(r, e)) != scale(R.action[g][r], act(g, e)))
                        throw Error(ErrorKind::NotSemilinear, "E is not semilinear at g=" + G.name(g));
                if (r_part(act(g, e)) != R.action[g][r_part(e)])
                    throw Error(ErrorKind::NotEquivariant, "projection E -> R is not equivariant");
            }
        }
        for (size_t a = 0; a < data.A.element_count(); ++a)
            for (Elem g = 0; g < G.size(); ++g) {
                size_t ga = data.A.element_index(data.A.act(g, data.A.element(a)));
                if (act(g, index(a, R.zero)) != index(ga, R.zero))
                    throw Error(ErrorKind::NotEquivariant, "inclusion A -> E is not equivariant");
            }
        for (size_t r = 0; r < R.n; ++r)
            for (size_t e = 0; e < size(); ++e)
                if (r_part(scale(r, e)) != R.times(r, r_part(e)))
                    throw Error(ErrorKind::InvalidInput, "projection is not R-linear");
    }
};

// g.(a, r) = ((g r) c(g) + g a, g r)
inline ExtensionInstance extension_from_cocycle(const SemilinearModule &S, const Cochain &c) {
    S.verify();
    require_cocycle(S.A, c);
    const GModule &A = S.A;
    const FiniteMonoid &G = A.monoid();
    ExtensionInstance E{S, {}};
    E.gact.resize(G.size() * E.size());
    const size_t na = A.element_count();
    for (Elem g = 0; g < G.size(); ++g) {
        size_t cg = A.element_index(c.value(g));
        for (size_t a = 0; a < na; ++a)
            for (size_t r = 0; r < S.R.n; ++r) {
                size_t gr = S.R.action[g][r];
                Vec64 v = A.element(S.act_scalar(gr, cg));
                A.add_act(g, A.element(a).data(), 1, v.data());
                E.gact[g * E.size() + E.index(a, r)] = E.index(A.element_index(v), gr);
            }
    }
    E.verify();
    return E;
}

// g -> g e - e for a preimage e of 1
inline Cochain cocycle_from_extension(const ExtensionInstance &E, size_t e) {
    if (E.r_part(e) != E.data.R.one)
        throw Error(ErrorKind::InvalidInput, "e is not a preimage of 1");
    const GModule &A = E.data.A;
    Cochain c = zero_cochain(A, 1);
    for (Elem g = 0; g < A.monoid().size(); ++g) {
        size_t d = E.plus(E.act(g, e), E.negate(e));
        if (E.r_part(d) != E.data.R.zero)
            throw Error(ErrorKind::NotEquivariant, "g e - e does not lie in A");
        Vec64 v = A.element(E.a_part(d));
        std::copy(v.begin(), v.end(), c.at(g));
    }
    c.normalised = is_normalised(A, c);
    return c;
}
inline Cochain cocycle_from_extension(const ExtensionInstance &E) {
    return cocycle_from_extension(E, E.index(E.data.A.element_index(Vec64(E.data.A.comps(), 0)), E.data.R.one));
}

// Ladder maps (a, r) -> (a + r a0, r); returns a0 when one is G-equivariant.
inline std::optional<size_t> extensions_equivalent(const ExtensionInstance &E, const ExtensionInstance &F) {
    if (E.size() != F.size())
        return std::nullopt;
    const GModule &A = E.data.A;
    for (size_t a0 = 0; a0 < A.element_count(); ++a0) {
        auto phi = [&](size_t e) {
            Vec64 v = A.element(E.a_part(e));
            A.add_scaled(A.element(E.data.act_scalar(E.r_part(e), a0)).data(), 1, v.data());
            return F.index(A.element_index(v), E.r_part(e));
        };
        bool ok = true;
        for (size_t e = 0; e < E.size() && ok; ++e)
            for (Elem g = 0; g < A.monoid().size() && ok; ++g)
                ok = phi(E.act(g, e)) == F.act(g, phi(e));
        if (ok)
            return a0;
    }
    return std::nullopt;
}

// all 1-cocycles of a finite module (brute force over tables)
inline std::vector<Cochain> all_one_cocycles(const GModule &A) {
    const FiniteMonoid &G = A.monoid();
    const size_t na = A.element_count();
    std::vector<Cochain> out;
    std::vector<size_t> digits(G.size(), 0);
    while (true) {
        Cochain c = zero_cochain(A, 1);
        for (Elem g = 0; g < G.size(); ++g) {
            Vec64 v = A.element(digits[g]);
            std::copy(v.begin(), v.end(), c.at(g));
        }
        c.normalised = is_normalised(A, c);
        if (coboundary(A, c).is_zero())
            out.push_back(c);
        size_t k = 0;
        while (k < digits.size() && ++digits[k] == na)
            digits[k++] = 0;
        if (k == digits.size())
            break;
    }
    return out;
}

struct TorsorClassReport {
    size_t cocycles = 0;
    size_t torsor_classes = 0;    // isomorphism classes of the attached torsors
    size_t cohomology_classes = 0; // classes of the cocycles under im d
    bool well_defined = true;      // cohomologous -> isomorphic
    bool injective = true;         // isomorphic -> cohomologous
};

inline TorsorClassReport torsor_class_report(const GModule &A) {
    TorsorClassReport r;
    auto cs = all_one_cocycles(A);
    r.cocycles = cs.size();
    CohomologyData H(A, 1, Variant::Full);
    std::vector<TorsorInstance> ts;
    for (auto &c : cs)
        ts.push_back(cocycle_to_torsor(A, c));
    std::vector<size_t> tcls(cs.size(), SIZE_MAX), hcls(cs.size(), SIZE_MAX);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (tcls[i] == SIZE_MAX) {
            tcls[i] = r.torsor_classes++;
            for (size_t j = i + 1; j < cs.size(); ++j)
                if (tcls[j] == SIZE_MAX && torsor_isomorphism(ts[i], ts[j]))
                    tcls[j] = tcls[i];
        }
        if (hcls[i] == SIZE_MAX) {
            hcls[i] = r.cohomology_classes++;
            for (size_t j = i + 1; j < cs.size(); ++j)
                if (hcls[j] == SIZE_MAX && H.cohomologous(cs[i], cs[j]))
                    hcls[j] = hcls[i];
        }
    }
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) {
            bool same_t = tcls[i] == tcls[j], same_h = hcls[i] == hcls[j];
            if (same_h && !same_t)
                r.well_defined = false;
            if (same_t && !same_h)
                r.injective = false;
        }
    return r;
}

} // namespace moncoh
