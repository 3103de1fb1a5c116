#pragma once

#include "abelian.hpp"
#include "integer.hpp"
#include "monoid.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace moncoh {

using Vec64 = std::vector<int64_t>;
using Mat64 = std::vector<std::vector<int64_t>>; // row-major c x c

// A finitely generated abelian group Z^r + Z/d_1 + ... in diagonal form,
// with a left action of a finite monoid by endomorphism matrices.
class GModule {
  public:
    GModule() = default;
    GModule(FiniteMonoid M, std::vector<int64_t> moduli, std::vector<Mat64> action)
        : M_(std::move(M)), mod_(std::move(moduli)), act_(std::move(action)) {
        const size_t c = mod_.size();
        for (auto m : mod_)
            if (m < 0 || m == 1)
                throw Error(ErrorKind::InvalidInput, "carrier moduli must be 0 or >= 2");
        if (act_.size() != M_.size())
            throw Error(ErrorKind::InvalidInput, "one action matrix per monoid element");
        for (auto &A : act_) {
            if (A.size() != c)
                throw Error(ErrorKind::InvalidInput, "action matrix shape");
            for (size_t i = 0; i < c; ++i) {
                if (A[i].size() != c)
                    throw Error(ErrorKind::InvalidInput, "action matrix shape");
                for (size_t j = 0; j < c; ++j)
                    if (mod_[i])
                        A[i][j] = mod64(A[i][j], mod_[i]);
            }
            // relations of the source map into relations of the target
            for (size_t j = 0; j < c; ++j)
                for (size_t i = 0; i < c; ++i) {
                    if (mod_[j] == 0) {
                        continue;
                    }
                    Integer v = Integer(A[i][j]) * mod_[j];
                    if (mod_[i] == 0 ? v != 0 : v % mod_[i] != 0)
                        throw Error(ErrorKind::InvalidInput,
                                    "action does not respect the carrier relations");
                }
        }
        verify_action();
    }

    static GModule trivial(const FiniteMonoid &M, std::vector<int64_t> moduli) {
        const size_t c = moduli.size();
        Mat64 I(c, Vec64(c, 0));
        for (size_t i = 0; i < c; ++i)
            I[i][i] = 1;
        return GModule(M, std::move(moduli), std::vector<Mat64>(M.size(), I));
    }
    static GModule from_function(const FiniteMonoid &M, std::vector<int64_t> moduli,
                                 const std::function<Mat64(Elem)> &f) {
        std::vector<Mat64> a;
        for (Elem g = 0; g < M.size(); ++g)
            a.push_back(f(g));
        return GModule(M, std::move(moduli), std::move(a));
    }

    const FiniteMonoid &monoid() const { return M_; }
    size_t comps() const { return mod_.size(); }
    const std::vector<int64_t> &moduli() const { return mod_; }
    const Mat64 &action(Elem g) const { return act_[g]; }
    bool is_finite() const {
        for (auto m : mod_)
            if (m == 0)
                return false;
        return true;
    }
    FgAbelianGroup carrier() const {
        std::vector<Integer> ds(mod_.begin(), mod_.end());
        return FgAbelianGroup::cyclic_sum(ds);
    }
    CanonicalForm canonical() const { return carrier().canonical(); }
    // exponent ring: lcm of the torsion, 0 when a free summand exists
    int64_t ring_modulus() const {
        int64_t e = 1;
        for (auto m : mod_) {
            if (m == 0)
                return 0;
            e = static_cast<int64_t>(lcm(Integer(e), Integer(m)));
        }
        return e;
    }
    bool acts_trivially() const {
        for (Elem g = 0; g < M_.size(); ++g)
            for (size_t i = 0; i < comps(); ++i)
                for (size_t j = 0; j < comps(); ++j)
                    if (act_[g][i][j] != (i == j ? 1 % (mod_[i] ? mod_[i] : 2) : 0) &&
                        !(i == j && act_[g][i][j] == 1))
                        return false;
        return true;
    }

    void reduce(int64_t *x) const {
        for (size_t i = 0; i < comps(); ++i)
            if (mod_[i])
                x[i] = mod64(x[i], mod_[i]);
    }
    Vec64 reduced(Vec64 x) const {
        reduce(x.data());
        return x;
    }
    // y += s * (g . x); the result is reduced
    void add_act(Elem g, const int64_t *x, int64_t s, int64_t *y) const {
        const Mat64 &A = act_[g];
        for (size_t i = 0; i < comps(); ++i) {
            int64_t acc = 0;
            for (size_t j = 0; j < comps(); ++j)
                if (A[i][j] && x[j])
                    acc = checked_add(acc, checked_mul(A[i][j], x[j]));
            y[i] = checked_add(y[i], checked_mul(s, acc));
            if (mod_[i])
                y[i] = mod64(y[i], mod_[i]);
        }
    }
    void add_scaled(const int64_t *x, int64_t s, int64_t *y) const {
        for (size_t i = 0; i < comps(); ++i) {
            y[i] = checked_add(y[i], checked_mul(s, x[i]));
            if (mod_[i])
                y[i] = mod64(y[i], mod_[i]);
        }
    }
    Vec64 act(Elem g, const Vec64 &x) const {
        Vec64 y(comps(), 0);
        add_act(g, x.data(), 1, y.data());
        return y;
    }

    // enumeration of a finite carrier (mixed radix, first component most significant)
    size_t element_count() const {
        size_t n = 1;
        for (auto m : mod_) {
            if (m == 0)
                throw Error(ErrorKind::InvalidInput, "carrier is infinite");
            n *= static_cast<size_t>(m);
        }
        return n;
    }
    Vec64 element(size_t idx) const {
        Vec64 x(comps());
        for (size_t i = comps(); i-- > 0;) {
            x[i] = static_cast<int64_t>(idx % mod_[i]);
            idx /= mod_[i];
        }
        return x;
    }
    size_t element_index(const Vec64 &x) const {
        size_t idx = 0;
        for (size_t i = 0; i < comps(); ++i)
            idx = idx * mod_[i] + static_cast<size_t>(mod64(x[i], mod_[i]));
        return idx;
    }

    // restriction of the action along a monoid map phi: M' -> M
    GModule pullback(const FiniteMonoid &Mp, const std::vector<Elem> &phi) const {
        std::vector<Mat64> a;
        for (Elem g = 0; g < Mp.size(); ++g)
            a.push_back(act_[phi[g]]);
        return GModule(Mp, mod_, a);
    }

  private:
    void verify_action() const {
        const size_t c = comps();
        auto eq = [&](const Mat64 &A, const Mat64 &B) {
            for (size_t i = 0; i < c; ++i)
                for (size_t j = 0; j < c; ++j) {
                    int64_t a = A[i][j], b = B[i][j];
                    if (mod_[i] ? mod64(a - b, mod_[i]) != 0 : a != b)
                        return false;
                }
            return true;
        };
        Mat64 I(c, Vec64(c, 0));
        for (size_t i = 0; i < c; ++i)
            I[i][i] = 1;
        if (!eq(act_[M_.identity()], I))
            throw Error(ErrorKind::InvalidInput, "identity does not act as the identity");
        for (Elem g = 0; g < M_.size(); ++g)
            for (Elem h = 0; h < M_.size(); ++h) {
                Mat64 P(c, Vec64(c, 0));
                for (size_t i = 0; i < c; ++i)
                    for (size_t k = 0; k < c; ++k)
                        for (size_t j = 0; j < c; ++j)
                            P[i][j] = checked_add(P[i][j],
                                                  checked_mul(act_[g][i][k], act_[h][k][j]));
                if (!eq(act_[M_.mul(g, h)], P))
                    throw Error(ErrorKind::InvalidInput,
                                "action(gh) != action(g) action(h) at g=" + M_.name(g) +
                                    ", h=" + M_.name(h));
            }
    }

    FiniteMonoid M_;
    std::vector<int64_t> mod_;
    std::vector<Mat64> act_;
};

inline IntMatrix to_int_matrix(const Mat64 &A) {
    IntMatrix m(A.size(), A.empty() ? 0 : A[0].size());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            m(i, j) = A[i][j];
    return m;
}

struct InvariantsResult {
    FgAbelianGroup group;   // diagonal presentation on canonical generators
    AbHom inclusion;        // canonical generators -> carrier of A
    DenseSubquotient section;
};

// joint kernel of {action(n) - id : n in N}
inline InvariantsResult invariants_of(const GModule &A, const std::vector<Elem> &N) {
    const size_t c = A.comps();
    FgAbelianGroup carrier = A.carrier();
    std::vector<Integer> tmods;
    IntMatrix big(N.size() * c, c);
    for (size_t k = 0; k < N.size(); ++k)
        for (size_t i = 0; i < c; ++i) {
            tmods.push_back(A.moduli()[i]);
            for (size_t j = 0; j < c; ++j)
                big(k * c + i, j) = A.action(N[k])[i][j] - (i == j ? 1 : 0);
        }
    FgAbelianGroup target = FgAbelianGroup::cyclic_sum(tmods);
    IntMatrix aug = big.hcat(target.relations());
    IntMatrix ker;
    if (aug.rows() == 0) {
        ker = IntMatrix::identity(c);
    } else {
        IntMatrix K = integer_kernel(aug);
        ker = IntMatrix(c, K.cols());
        for (size_t i = 0; i < c; ++i)
            for (size_t j = 0; j < K.cols(); ++j)
                ker(i, j) = K(i, j);
    }
    DenseSubquotient sq = dense_subquotient(carrier, ker, IntMatrix(c, 0));
    IntMatrix inc = sq.lifts.empty()
                        ? IntMatrix(c, 0)
                        : IntMatrix::from_columns(c, sq.lifts);
    return {sq.group, AbHom(sq.group, carrier, inc), sq};
}

// A^N as a module over a monoid Q acting through lift: Q -> M (elements must normalise N).
inline GModule invariants_module(const GModule &A, const std::vector<Elem> &N, const FiniteMonoid &Q,
                                 const std::vector<Elem> &lift) {
    InvariantsResult inv = invariants_of(A, N);
    const size_t k = inv.section.orders.size();
    std::vector<int64_t> mods;
    for (auto &o : inv.section.orders)
        mods.push_back(static_cast<int64_t>(o));
    std::vector<Mat64> acts;
    for (Elem q = 0; q < Q.size(); ++q) {
        Mat64 m(k, Vec64(k, 0));
        for (size_t j = 0; j < k; ++j) {
            std::vector<Integer> v = to_int_matrix(A.action(lift[q])) * inv.section.lifts[j];
            auto co = inv.section.coordinates(v);
            for (size_t i = 0; i < k; ++i)
                m[i][j] = to_ll(co[i]);
        }
        acts.push_back(m);
    }
    return GModule(Q, mods, acts);
}

struct SubgroupMonoid {
    FiniteMonoid H;          // H as a monoid on its own indices
    std::vector<Elem> embed; // H index -> G index
    std::vector<long> index; // G index -> H index or -1
};

inline SubgroupMonoid subgroup_monoid(const FiniteMonoid &G, const std::vector<Elem> &H) {
    SubgroupMonoid S;
    S.index.assign(G.size(), -1);
    std::vector<Elem> hs = H;
    std::sort(hs.begin(), hs.end());
    // identity first
    auto it = std::find(hs.begin(), hs.end(), G.identity());
    if (it == hs.end())
        throw Error(ErrorKind::NotSubgroup, "H does not contain 1");
    std::rotate(hs.begin(), it, it + 1);
    for (size_t i = 0; i < hs.size(); ++i)
        S.index[hs[i]] = static_cast<long>(i);
    std::vector<std::vector<size_t>> t(hs.size(), std::vector<size_t>(hs.size()));
    std::vector<std::string> names;
    for (size_t a = 0; a < hs.size(); ++a) {
        names.push_back(G.name(hs[a]));
        for (size_t b = 0; b < hs.size(); ++b) {
            long p = S.index[G.mul(hs[a], hs[b])];
            if (p < 0)
                throw Error(ErrorKind::NotSubgroup, "H is not closed");
            t[a][b] = static_cast<size_t>(p);
        }
    }
    S.H = build_monoid(t, 0, names);
    S.embed = hs;
    return S;
}

// Ind_G^H(A): H-equivariant F: G -> A, stored as (F(sigma_k))_k on the transversal.
struct InducedModule {
    CosetRepMap reps;
    SubgroupMonoid sub;
    GModule A;   // over sub.H
    GModule ind; // over G

    // F(g) = _H(g) . F(s(p(g)))
    Vec64 value_at(const int64_t *F, Elem g) const {
        const size_t c = A.comps();
        Elem k = reps.coset[g];
        Vec64 y(c, 0);
        A.add_act(static_cast<Elem>(sub.index[reps.rep[g]]), F + k * c, 1, y.data());
        return y;
    }
};

inline InducedModule induced_module(const FiniteMonoid &G, const std::vector<Elem> &H,
                                    const GModule &A) {
    InducedModule I{coset_rep_map(G, H), subgroup_monoid(G, H), A, {}};
    if (A.monoid().size() != I.sub.H.size())
        throw Error(ErrorKind::InvalidInput, "module is not over H");
    const size_t c = A.comps(), m = I.reps.index();
    std::vector<int64_t> mods;
    for (size_t k = 0; k < m; ++k)
        mods.insert(mods.end(), A.moduli().begin(), A.moduli().end());
    std::vector<Mat64> acts;
    for (Elem g = 0; g < G.size(); ++g) {
        Mat64 M(m * c, Vec64(m * c, 0));
        // (gF)(sigma_k) = F(sigma_k g) = _H(sigma_k g) . F(sigma_{k'})
        for (size_t k = 0; k < m; ++k) {
            Elem x = G.mul(I.reps.transversal[k], g);
            Elem kp = I.reps.coset[x];
            const Mat64 &h = A.action(static_cast<Elem>(I.sub.index[I.reps.rep[x]]));
            for (size_t i = 0; i < c; ++i)
                for (size_t j = 0; j < c; ++j)
                    M[k * c + i][kp * c + j] = h[i][j];
        }
        acts.push_back(M);
    }
    I.ind = GModule(G, mods, acts);
    return I;
}

struct ModuleSES {
    GModule A, B, C;
    Mat64 inject;  // c_B x c_A
    Mat64 surject; // c_C x c_B
    // set-section on canonical representatives of C
    std::function<Vec64(const Vec64 &)> section;

    Vec64 apply_inject(const Vec64 &a) const { return apply(inject, B, a); }
    Vec64 apply_surject(const Vec64 &b) const { return apply(surject, C, b); }
    static Vec64 apply(const Mat64 &M, const GModule &T, const Vec64 &x) {
        Vec64 y(T.comps(), 0);
        for (size_t i = 0; i < y.size(); ++i)
            for (size_t j = 0; j < x.size(); ++j)
                y[i] = checked_add(y[i], checked_mul(M[i][j], x[j]));
        T.reduce(y.data());
        return y;
    }
};

inline ModuleSES ses_with_section(const GModule &A, const GModule &B, const GModule &C,
                                  const Mat64 &inject, const Mat64 &surject) {
    ModuleSES s{A, B, C, inject, surject, {}};
    IntMatrix I = to_int_matrix(inject), P = to_int_matrix(surject);
    AbHom fi(A.carrier(), B.carrier(), I);
    AbHom fp(B.carrier(), C.carrier(), P);
    AbHom zeroA(FgAbelianGroup::free(0), A.carrier(), IntMatrix(A.comps(), 0));
    AbHom zeroC(C.carrier(), FgAbelianGroup::free(0), IntMatrix(0, C.comps()));
    if (!homology_at(zeroA, fi).canonical().trivial())
        throw Error(ErrorKind::NotExact, "inject is not injective");
    bool middle = false;
    try {
        middle = homology_at(fi, fp).canonical().trivial();
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::CompositionNotZero)
            throw;
        throw Error(ErrorKind::NotExact, "surject o inject is not zero");
    }
    if (!middle)
        throw Error(ErrorKind::NotExact, "im(inject) != ker(surject)");
    if (!homology_at(fp, zeroC).canonical().trivial())
        throw Error(ErrorKind::NotExact, "surject is not surjective");
    const FiniteMonoid &M = A.monoid();
    for (Elem g = 0; g < M.size(); ++g) {
        for (size_t j = 0; j < A.comps(); ++j) {
            Vec64 e(A.comps(), 0);
            e[j] = 1;
            if (B.act(g, s.apply_inject(e)) != s.apply_inject(A.act(g, e)))
                throw Error(ErrorKind::NotEquivariant,
                            "inject at g=" + M.name(g) + ", generator " + std::to_string(j));
        }
        for (size_t j = 0; j < B.comps(); ++j) {
            Vec64 e(B.comps(), 0);
            e[j] = 1;
            if (C.act(g, s.apply_surject(e)) != s.apply_surject(B.act(g, e)))
                throw Error(ErrorKind::NotEquivariant,
                            "surject at g=" + M.name(g) + ", generator " + std::to_string(j));
        }
    }
    if (B.is_finite() && B.element_count() <= (1u << 20)) {
        std::map<Vec64, Vec64> table;
        for (size_t i = 0; i < B.element_count(); ++i) {
            Vec64 b = B.element(i);
            Vec64 c = s.apply_surject(b);
            if (!table.count(c))
                table[c] = b;
        }
        s.section = [table, C](const Vec64 &c) { return table.at(C.reduced(c)); };
    } else {
        // lift each generator once; combine on canonical representatives
        std::vector<Vec64> lifts;
        for (size_t j = 0; j < C.comps(); ++j) {
            std::vector<Integer> e(C.comps());
            e[j] = 1;
            IntMatrix aug = P.hcat(C.carrier().relations());
            std::vector<Integer> x;
            if (!integer_solve(aug, e, x))
                throw Error(ErrorKind::NotExact, "generator has no preimage");
            Vec64 l(B.comps());
            for (size_t i = 0; i < B.comps(); ++i)
                l[i] = to_ll(x[i]);
            lifts.push_back(B.reduced(l));
        }
        GModule Bc = B, Cc = C;
        s.section = [lifts, Bc, Cc](const Vec64 &c0) {
            Vec64 c = Cc.reduced(c0), b(Bc.comps(), 0);
            for (size_t j = 0; j < c.size(); ++j)
                Bc.add_scaled(lifts[j].data(), c[j], b.data());
            return b;
        };
    }
    return s;
}

// Finite commutative unital ring on elements 0..n-1 with a monoid action by ring endomorphisms.
struct FiniteRing {
    size_t n = 0;
    std::vector<size_t> add, mul; // n x n tables
    size_t zero = 0, one = 1;
    std::vector<std::vector<size_t>> action; // per monoid element

    static FiniteRing cyclic(size_t m, size_t monoid_size) {
        FiniteRing R;
        R.n = m;
        R.add.resize(m * m);
        R.mul.resize(m * m);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                R.add[a * m + b] = (a + b) % m;
                R.mul[a * m + b] = (a * b) % m;
            }
        R.one = 1 % m;
        std::vector<size_t> id(m);
        for (size_t a = 0; a < m; ++a)
            id[a] = a;
        R.action.assign(monoid_size, id);
        return R;
    }
    size_t plus(size_t a, size_t b) const { return add[a * n + b]; }
    size_t times(size_t a, size_t b) const { return mul[a * n + b]; }
};

// R-module structure on a finite module A: scalar(r, a) by element indices.
struct SemilinearModule {
    FiniteRing R;
    GModule A;
    std::vector<size_t> scalar; // |R| x |A| table of element indices

    size_t act_scalar(size_t r, size_t a) const { return scalar[r * A.element_count() + a]; }

    // g (r a) = (g r)(g a), bilinear, unital
    void verify() const {
        const size_t na = A.element_count();
        const FiniteMonoid &M = A.monoid();
        for (size_t r = 0; r < R.n; ++r)
            for (size_t a = 0; a < na; ++a) {
                for (size_t b = 0; b < na; ++b) {
                    Vec64 s = A.element(a);
                    A.add_scaled(A.element(b).data(), 1, s.data());
                    Vec64 lhs = A.element(act_scalar(r, A.element_index(s)));
                    Vec64 rhs = A.element(act_scalar(r, a));
                    A.add_scaled(A.element(act_scalar(r, b)).data(), 1, rhs.data());
                    if (lhs != rhs)
                        throw Error(ErrorKind::NotSemilinear, "scalar action not additive in A");
                }
                for (size_t r2 = 0; r2 < R.n; ++r2) {
                    Vec64 lhs = A.element(act_scalar(R.plus(r, r2), a));
                    Vec64 rhs = A.element(act_scalar(r, a));
                    A.add_scaled(A.element(act_scalar(r2, a)).data(), 1, rhs.data());
                    if (lhs != rhs)
                        throw Error(ErrorKind::NotSemilinear, "scalar action not additive in R");
                }
                for (Elem g = 0; g < M.size(); ++g) {
                    size_t lhs = A.element_index(A.act(g, A.element(act_scalar(r, a))));
                    size_t rhs = act_scalar(R.action[g][r], A.element_index(A.act(g, A.element(a))));
                    if (lhs != rhs)
                        throw Error(ErrorKind::NotSemilinear,
                                    "g(r a) != (g r)(g a) at g=" + M.name(g));
                }
            }
        for (size_t a = 0; a < na; ++a)
            if (act_scalar(R.one, a) != a)
                throw Error(ErrorKind::NotSemilinear, "1 does not act as the identity");
    }
};

// Z/m acting on a module of exponent dividing m by multiplication.
inline SemilinearModule cyclic_scalars(const GModule &A, size_t m) {
    SemilinearModule S{FiniteRing::cyclic(m, A.monoid().size()), A, {}};
    const size_t na = A.element_count();
    S.scalar.resize(m * na);
    for (size_t r = 0; r < m; ++r)
        for (size_t a = 0; a < na; ++a) {
            Vec64 x = A.element(a), y(A.comps(), 0);
            A.add_scaled(x.data(), static_cast<int64_t>(r), y.data());
            S.scalar[r * na + a] = A.element_index(y);
        }
    S.verify();
    return S;
}

} // namespace moncoh
