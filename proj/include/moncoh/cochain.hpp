#pragma once

#include "complex.hpp"
#include "gmodule.hpp"
#include "monoid.hpp"
#include "rng.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace moncoh {

inline constexpr Elem NO_ACT = static_cast<Elem>(-1);

inline size_t ipow(size_t b, size_t e) {
    size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Tuples in M^n, first slot most significant.
inline size_t encode_tuple(size_t m, const Elem *t, size_t n) {
    size_t idx = 0;
    for (size_t i = 0; i < n; ++i)
        idx = idx * m + t[i];
    return idx;
}
inline void decode_tuple(size_t m, size_t idx, Elem *t, size_t n) {
    for (size_t i = n; i-- > 0;) {
        t[i] = static_cast<Elem>(idx % m);
        idx /= m;
    }
}
inline std::vector<Elem> decode_tuple(size_t m, size_t idx, size_t n) {
    std::vector<Elem> t(n);
    decode_tuple(m, idx, t.data(), n);
    return t;
}

// A degree-n table M^n -> A (one coefficient vector per tuple).
struct Cochain {
    size_t degree = 0, msize = 0, comps = 0;
    Vec64 data;
    bool normalised = false;

    size_t tuples() const { return ipow(msize, degree); }
    const int64_t *at(size_t t) const { return data.data() + t * comps; }
    int64_t *at(size_t t) { return data.data() + t * comps; }
    const int64_t *at(const Elem *t) const { return at(encode_tuple(msize, t, degree)); }
    Vec64 value(size_t t) const { return Vec64(at(t), at(t) + comps); }
    bool is_zero() const {
        for (auto v : data)
            if (v)
                return false;
        return true;
    }
    bool operator==(const Cochain &o) const {
        return degree == o.degree && msize == o.msize && comps == o.comps && data == o.data;
    }
};

inline Cochain zero_cochain(const GModule &A, size_t n) {
    Cochain f;
    f.degree = n;
    f.msize = A.monoid().size();
    f.comps = A.comps();
    f.data.assign(f.tuples() * f.comps, 0);
    f.normalised = true;
    return f;
}

inline bool has_identity(const FiniteMonoid &M, const Elem *t, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (t[i] == M.identity())
            return true;
    return false;
}

inline bool is_normalised(const GModule &A, const Cochain &f) {
    std::vector<Elem> t(f.degree);
    for (size_t k = 0; k < f.tuples(); ++k) {
        decode_tuple(f.msize, k, t.data(), f.degree);
        if (has_identity(A.monoid(), t.data(), f.degree))
            for (size_t c = 0; c < f.comps; ++c)
                if (f.at(k)[c])
                    return false;
    }
    return true;
}

inline Vec64 random_element(const GModule &A, CounterRng &rng) {
    Vec64 x(A.comps());
    for (size_t i = 0; i < x.size(); ++i) {
        int64_t m = A.moduli()[i];
        x[i] = m ? static_cast<int64_t>(rng.below(m)) : static_cast<int64_t>(rng.below(7)) - 3;
    }
    return x;
}

inline Cochain random_cochain(const GModule &A, size_t n, bool normalised, CounterRng &rng) {
    Cochain f = zero_cochain(A, n);
    std::vector<Elem> t(n);
    for (size_t k = 0; k < f.tuples(); ++k) {
        decode_tuple(f.msize, k, t.data(), n);
        if (normalised && has_identity(A.monoid(), t.data(), n))
            continue;
        Vec64 v = random_element(A, rng);
        std::copy(v.begin(), v.end(), f.at(k));
    }
    f.normalised = normalised || is_normalised(A, f);
    return f;
}

inline Cochain tabulate(const GModule &A, size_t n, const std::function<Vec64(const Elem *)> &fn) {
    Cochain f = zero_cochain(A, n);
    std::vector<Elem> t(n);
    for (size_t k = 0; k < f.tuples(); ++k) {
        decode_tuple(f.msize, k, t.data(), n);
        Vec64 v = A.reduced(fn(t.data()));
        std::copy(v.begin(), v.end(), f.at(k));
    }
    f.normalised = is_normalised(A, f);
    return f;
}

inline Cochain cochain_sub(const GModule &A, const Cochain &a, const Cochain &b) {
    Cochain r = a;
    for (size_t k = 0; k < r.tuples(); ++k)
        A.add_scaled(b.at(k), -1, r.at(k));
    r.normalised = a.normalised && b.normalised;
    return r;
}
inline Cochain cochain_add(const GModule &A, const Cochain &a, const Cochain &b, int64_t s = 1) {
    Cochain r = a;
    for (size_t k = 0; k < r.tuples(); ++k)
        A.add_scaled(b.at(k), s, r.at(k));
    r.normalised = a.normalised && b.normalised;
    return r;
}

// Terms of the coboundary of a degree-n cochain at t in M^{n+1}:
// emit(act, sign, src) with act == NO_ACT for an unacted term.
template <class Emit>
void coboundary_terms(const FiniteMonoid &M, size_t n, const Elem *t, Elem *buf, Emit &&emit) {
    for (size_t i = 0; i < n; ++i)
        buf[i] = t[i + 1];
    emit(t[0], 1, static_cast<const Elem *>(buf));
    for (size_t i = 1; i <= n; ++i) {
        size_t w = 0;
        for (size_t k = 0; k + 1 < i; ++k)
            buf[w++] = t[k];
        buf[w++] = M.mul(t[i - 1], t[i]);
        for (size_t k = i + 1; k <= n; ++k)
            buf[w++] = t[k];
        emit(NO_ACT, (i % 2) ? -1 : 1, static_cast<const Elem *>(buf));
    }
    for (size_t i = 0; i < n; ++i)
        buf[i] = t[i];
    emit(NO_ACT, ((n + 1) % 2) ? -1 : 1, static_cast<const Elem *>(buf));
}

// accumulate sign * (act . v) into out
inline void accumulate(const GModule &A, Elem act, int64_t sign, const int64_t *v, int64_t *out) {
    if (act == NO_ACT)
        A.add_scaled(v, sign, out);
    else
        A.add_act(act, v, sign, out);
}

inline Cochain coboundary(const GModule &A, const Cochain &f) {
    const FiniteMonoid &M = A.monoid();
    const size_t n = f.degree;
    Cochain g = zero_cochain(A, n + 1);
    std::vector<Elem> t(n + 1), buf(n + 1);
    for (size_t k = 0; k < g.tuples(); ++k) {
        decode_tuple(g.msize, k, t.data(), n + 1);
        int64_t *out = g.at(k);
        coboundary_terms(M, n, t.data(), buf.data(), [&](Elem act, int sign, const Elem *src) {
            accumulate(A, act, sign, f.at(src), out);
        });
    }
    g.normalised = f.normalised;
    return g;
}

// Largest j <= n such that the last j arguments are invariant under right translation by N.
inline size_t filtration_level(const GModule &A, const Cochain &f, const QuotientData &Q) {
    const size_t n = f.degree;
    const FiniteMonoid &M = A.monoid();
    if (M.size() != Q.ambient.size())
        throw Error(ErrorKind::InvalidInput, "quotient data is for a different monoid");
    std::vector<Elem> t(n), u(n);
    size_t level = 0;
    for (size_t k = n; k-- > 0;) {
        bool inv = true;
        for (size_t idx = 0; idx < f.tuples() && inv; ++idx) {
            decode_tuple(f.msize, idx, t.data(), n);
            for (Elem s : Q.normal) {
                u = t;
                u[k] = M.mul(t[k], s);
                size_t j = encode_tuple(f.msize, u.data(), n);
                if (!std::equal(f.at(idx), f.at(idx) + f.comps, f.at(j))) {
                    inv = false;
                    break;
                }
            }
        }
        if (!inv)
            break;
        ++level;
    }
    return level;
}

enum class Variant { Full, Normalised };

// Basis of cochain coordinates: all tuples, or tuples avoiding the identity.
struct TupleBasis {
    size_t m = 0, n = 0;
    Elem id = 0;
    bool normalised = false;

    size_t base() const { return normalised ? m - 1 : m; }
    size_t count() const { return ipow(base(), n); }
    // tuple -> basis index, or npos when the tuple contains the identity (normalised)
    size_t index(const Elem *t) const {
        size_t idx = 0;
        for (size_t i = 0; i < n; ++i) {
            Elem e = t[i];
            if (normalised) {
                if (e == id)
                    return static_cast<size_t>(-1);
                if (e > id)
                    --e;
            }
            idx = idx * base() + e;
        }
        return idx;
    }
    void decode(size_t idx, Elem *t) const {
        for (size_t i = n; i-- > 0;) {
            Elem e = static_cast<Elem>(idx % base());
            idx /= base();
            if (normalised && e >= id)
                ++e;
            t[i] = e;
        }
    }
};

inline TupleBasis tuple_basis(const FiniteMonoid &M, size_t n, Variant v) {
    return {M.size(), n, M.identity(), v == Variant::Normalised};
}

// Rows of a map whose value at each target tuple is a signed sum of (acted) source values.
// terms(target_tuple, cb) calls cb(act, sign, src_basis_index) (src index npos: skipped).
template <class Terms>
SparseMap build_term_map(const GModule &A, size_t src_count, size_t dst_count, Terms &&terms) {
    const size_t c = A.comps();
    SparseMap m(src_count * c, dst_count * c);
    for (size_t t = 0; t < dst_count; ++t) {
        terms(t, [&](Elem act, int64_t sign, size_t src) {
            if (src == static_cast<size_t>(-1) || sign == 0)
                return;
            for (size_t i = 0; i < c; ++i) {
                auto &row = m.rows[t * c + i];
                if (act == NO_ACT) {
                    row.push_back({static_cast<uint32_t>(src * c + i), sign});
                } else {
                    const Mat64 &a = A.action(act);
                    for (size_t j = 0; j < c; ++j)
                        if (a[i][j])
                            row.push_back({static_cast<uint32_t>(src * c + j), sign * a[i][j]});
                }
            }
        });
    }
    m.normalise();
    return m;
}

inline std::vector<int64_t> coordinate_moduli(const GModule &A, size_t count) {
    std::vector<int64_t> out;
    out.reserve(count * A.comps());
    for (size_t k = 0; k < count; ++k)
        out.insert(out.end(), A.moduli().begin(), A.moduli().end());
    return out;
}

inline SparseMap coboundary_map(const GModule &A, size_t n, Variant v) {
    const FiniteMonoid &M = A.monoid();
    TupleBasis src = tuple_basis(M, n, v), dst = tuple_basis(M, n + 1, v);
    std::vector<Elem> t(n + 1), buf(n + 1);
    return build_term_map(A, src.count(), dst.count(), [&](size_t ti, auto &&cb) {
        dst.decode(ti, t.data());
        coboundary_terms(M, n, t.data(), buf.data(), [&](Elem act, int sign, const Elem *s) {
            cb(act, sign, src.index(s));
        });
    });
}

// X^0 -> ... -> X^{top} (or the normalised C^•)
inline LinComplex cochain_complex(const GModule &A, size_t top, Variant v) {
    LinComplex cx;
    cx.ring_modulus = A.ring_modulus();
    for (size_t n = 0; n <= top; ++n)
        cx.moduli.push_back(coordinate_moduli(A, tuple_basis(A.monoid(), n, v).count()));
    for (size_t n = 0; n < top; ++n)
        cx.d.push_back(coboundary_map(A, n, v));
    return cx;
}

// complex coordinates <-> tables
inline Vec64 to_vector(const GModule &A, const Cochain &f, Variant v) {
    TupleBasis b = tuple_basis(A.monoid(), f.degree, v);
    Vec64 x(b.count() * f.comps);
    std::vector<Elem> t(f.degree);
    for (size_t k = 0; k < b.count(); ++k) {
        b.decode(k, t.data());
        const int64_t *val = f.at(t.data());
        std::copy(val, val + f.comps, x.begin() + k * f.comps);
    }
    return x;
}
inline Cochain from_vector(const GModule &A, size_t n, const Vec64 &x, Variant v) {
    TupleBasis b = tuple_basis(A.monoid(), n, v);
    Cochain f = zero_cochain(A, n);
    std::vector<Elem> t(n);
    for (size_t k = 0; k < b.count(); ++k) {
        b.decode(k, t.data());
        int64_t *out = f.at(encode_tuple(f.msize, t.data(), n));
        for (size_t c = 0; c < f.comps; ++c)
            out[c] = x[k * f.comps + c];
        A.reduce(out);
    }
    f.normalised = v == Variant::Normalised || is_normalised(A, f);
    return f;
}

inline std::vector<CanonicalForm> cohomology_groups(const GModule &A, size_t n_max, Variant v) {
    LinComplex cx = cochain_complex(A, n_max + 1, v);
    std::vector<CanonicalForm> out;
    for (size_t n = 0; n <= n_max; ++n)
        out.push_back(Homology::compute(cx, n, false).canonical());
    std::vector<Elem> all;
    for (Elem g = 0; g < A.monoid().size(); ++g)
        all.push_back(g);
    if (!(invariants_of(A, all).group.canonical() == out[0]))
        throw Error(ErrorKind::InvalidInput, "H^0 disagrees with the invariants");
    return out;
}

// Cohomology with classes, for membership tests.
struct CohomologyData {
    GModule A;
    Variant variant;
    LinComplex cx;
    std::vector<Homology> H;

    CohomologyData(GModule M, size_t n_max, Variant v = Variant::Normalised)
        : A(std::move(M)), variant(v), cx(cochain_complex(A, n_max + 1, v)) {
        for (size_t n = 0; n <= n_max; ++n)
            H.push_back(Homology::compute(cx, n, true));
    }
    std::optional<std::vector<Integer>> class_of(const Cochain &f) const {
        return H.at(f.degree).coordinates(to_vector(A, f, variant));
    }
    bool is_coboundary(const Cochain &f) const { return H.at(f.degree).is_boundary(to_vector(A, f, variant)); }
    bool cohomologous(const Cochain &a, const Cochain &b) const {
        return is_coboundary(cochain_sub(A, a, b));
    }
    bool is_cocycle(const Cochain &f) const { return coboundary(A, f).is_zero(); }
    Cochain representative(size_t n, size_t k) const {
        return from_vector(A, n, H.at(n).representatives().at(k), variant);
    }
};

// Apply a module map (c_T x c_S matrix) pointwise to a cochain.
inline Cochain map_values(const GModule &T, const Mat64 &m, const Cochain &f) {
    Cochain g = zero_cochain(T, f.degree);
    for (size_t k = 0; k < f.tuples(); ++k) {
        int64_t *out = g.at(k);
        const int64_t *in = f.at(k);
        for (size_t i = 0; i < T.comps(); ++i)
            for (size_t j = 0; j < f.comps; ++j)
                out[i] = checked_add(out[i], checked_mul(m[i][j], in[j]));
        T.reduce(out);
    }
    g.normalised = f.normalised;
    return g;
}

// Preimages under the injection of a short exact sequence.
class InjectInverter {
  public:
    explicit InjectInverter(const ModuleSES &s) : s_(s) {
        if (s.A.is_finite() && s.A.element_count() <= (1u << 20))
            for (size_t i = 0; i < s.A.element_count(); ++i) {
                Vec64 a = s.A.element(i);
                table_[s.apply_inject(a)] = a;
            }
    }
    std::optional<Vec64> operator()(const Vec64 &b0) const {
        Vec64 b = s_.B.reduced(b0);
        if (!table_.empty()) {
            auto it = table_.find(b);
            if (it == table_.end())
                return std::nullopt;
            return it->second;
        }
        IntMatrix aug = to_int_matrix(s_.inject).hcat(s_.B.carrier().relations());
        std::vector<Integer> rhs(b.begin(), b.end()), x;
        if (!integer_solve(aug, rhs, x))
            return std::nullopt;
        Vec64 a(s_.A.comps());
        for (size_t i = 0; i < a.size(); ++i)
            a[i] = to_ll(x[i]);
        return s_.A.reduced(a);
    }

  private:
    const ModuleSES &s_;
    std::map<Vec64, Vec64> table_;
};

// Lift z through the set-section, apply the coboundary, pull back through the injection.
inline Cochain connecting_delta(const ModuleSES &s, const Cochain &z) {
    if (!coboundary(s.C, z).is_zero())
        throw Error(ErrorKind::NotCocycle, "connecting map needs a cocycle");
    Cochain b = zero_cochain(s.B, z.degree);
    for (size_t k = 0; k < z.tuples(); ++k) {
        Vec64 v = s.section(z.value(k));
        std::copy(v.begin(), v.end(), b.at(k));
    }
    b.normalised = z.normalised;
    Cochain db = coboundary(s.B, b);
    InjectInverter inv(s);
    Cochain a = zero_cochain(s.A, z.degree + 1);
    for (size_t k = 0; k < db.tuples(); ++k) {
        auto pre = inv(db.value(k));
        if (!pre)
            throw Error(ErrorKind::NotExact, "coboundary of the lift leaves the image of A");
        std::copy(pre->begin(), pre->end(), a.at(k));
    }
    a.normalised = z.normalised;
    return a;
}

struct ExactnessSpot {
    std::string name;
    bool exact = false;
    bool delta_nonzero = false; // meaningful at connecting spots
    bool delta_forced = false;
};

// Long exact sequence of a short exact sequence, checked at every spot through degree n_max.
inline std::vector<ExactnessSpot> les_report(const ModuleSES &s, size_t n_max) {
    CohomologyData HA(s.A, n_max + 1), HB(s.B, n_max + 1), HC(s.C, n_max);
    const Variant v = Variant::Normalised;
    auto group = [](const Homology &h) { return h.group(); };
    std::vector<ExactnessSpot> out;
    auto check = [&](const std::string &nm, const Homology &X, const Homology &Y, const Homology &Z,
                     const IntMatrix &f, const IntMatrix &g) {
        AbHom F(group(X), group(Y), f), Gm(group(Y), group(Z), g);
        ExactnessSpot sp;
        sp.name = nm;
        sp.exact = homology_at(F, Gm).canonical().trivial();
        out.push_back(sp);
    };
    std::vector<IntMatrix> I, P, D;
    for (size_t n = 0; n <= n_max + 1; ++n) {
        I.push_back(induced_matrix(HA.H[n], HB.H[n], [&](const Vec64 &x) {
            return to_vector(s.B, map_values(s.B, s.inject, from_vector(s.A, n, x, v)), v);
        }));
    }
    for (size_t n = 0; n <= n_max; ++n) {
        P.push_back(induced_matrix(HB.H[n], HC.H[n], [&](const Vec64 &x) {
            return to_vector(s.C, map_values(s.C, s.surject, from_vector(s.B, n, x, v)), v);
        }));
        D.push_back(induced_matrix(HC.H[n], HA.H[n + 1], [&](const Vec64 &x) {
            return to_vector(s.A, connecting_delta(s, from_vector(s.C, n, x, v)), v);
        }));
    }
    // 0 -> H^0(A)
    {
        AbHom Z0(FgAbelianGroup::free(0), HA.H[0].group(), IntMatrix(HA.H[0].orders().size(), 0));
        AbHom F(HA.H[0].group(), HB.H[0].group(), I[0]);
        ExactnessSpot sp;
        sp.name = "H0(A)";
        sp.exact = homology_at(Z0, F).canonical().trivial();
        out.push_back(sp);
    }
    for (size_t n = 0; n <= n_max; ++n) {
        std::string k = std::to_string(n);
        check("H" + k + "(B)", HA.H[n], HB.H[n], HC.H[n], I[n], P[n]);
        check("H" + k + "(C)", HB.H[n], HC.H[n], HA.H[n + 1], P[n], D[n]);
        check("H" + std::to_string(n + 1) + "(A)", HC.H[n], HA.H[n + 1], HB.H[n + 1], D[n], I[n + 1]);
        // delta is forced to be nonzero exactly when H^n(B) -> H^n(C) is not onto
        AbHom Pn(HB.H[n].group(), HC.H[n].group(), P[n]);
        AbHom Zc(HC.H[n].group(), FgAbelianGroup::free(0), IntMatrix(0, HC.H[n].orders().size()));
        bool onto = homology_at(Pn, Zc).canonical().trivial();
        bool nz = false;
        for (size_t i = 0; i < D[n].rows(); ++i)
            for (size_t j = 0; j < D[n].cols(); ++j)
                if (HA.H[n + 1].orders()[i] == 0 ? D[n](i, j) != 0
                                                 : Integer(D[n](i, j) % HA.H[n + 1].orders()[i]) != 0)
                    nz = true;
        out[out.size() - 2].delta_nonzero = nz;
        out[out.size() - 2].delta_forced = !onto;
    }
    return out;
}

// ---- homogeneous cochains (groups) ----

inline void require_group(const FiniteMonoid &M) {
    if (!M.is_group())
        throw Error(ErrorKind::MonoidPartPresent, "homogeneous comparison needs a group");
}

// phi(f)(x0..xn) = x0 . f(x0^{-1} x1, ..., x_{n-1}^{-1} x_n)
inline Cochain homogeneous_phi(const GModule &A, const Cochain &f) {
    const FiniteMonoid &M = A.monoid();
    require_group(M);
    const size_t n = f.degree;
    std::vector<Elem> a(n);
    return tabulate(A, n + 1, [&](const Elem *x) {
        for (size_t i = 0; i < n; ++i)
            a[i] = M.mul(M.inv(x[i]), x[i + 1]);
        return A.act(x[0], f.value(encode_tuple(M.size(), a.data(), n)));
    });
}

// inverse: f(g1..gn) = F(1, g1, g1 g2, ...)
inline Cochain homogeneous_phi_inverse(const GModule &A, const Cochain &F) {
    const FiniteMonoid &M = A.monoid();
    require_group(M);
    const size_t n = F.degree - 1;
    std::vector<Elem> x(n + 1);
    Cochain f = tabulate(A, n, [&](const Elem *g) {
        x[0] = M.identity();
        for (size_t i = 0; i < n; ++i)
            x[i + 1] = M.mul(x[i], g[i]);
        return F.value(encode_tuple(M.size(), x.data(), n + 1));
    });
    return f;
}

// (d F)(x0..x_{n+1}) = sum (-1)^i F(x0..^xi..)
inline Cochain homogeneous_differential(const GModule &A, const Cochain &F) {
    const size_t n1 = F.degree; // F on M^{n1}
    std::vector<Elem> b(n1);
    return tabulate(A, n1 + 1, [&](const Elem *x) {
        Vec64 acc(A.comps(), 0);
        for (size_t i = 0; i <= n1; ++i) {
            size_t w = 0;
            for (size_t k = 0; k <= n1; ++k)
                if (k != i)
                    b[w++] = x[k];
            A.add_scaled(F.at(b.data()), (i % 2) ? -1 : 1, acc.data());
        }
        return acc;
    });
}

// F(m x0, ..., m xn) = m . F(x0..xn) for all m
inline bool is_equivariant(const GModule &A, const Cochain &F) {
    const FiniteMonoid &M = A.monoid();
    std::vector<Elem> x(F.degree), y(F.degree);
    for (size_t k = 0; k < F.tuples(); ++k) {
        decode_tuple(M.size(), k, x.data(), F.degree);
        for (Elem m = 0; m < M.size(); ++m) {
            for (size_t i = 0; i < F.degree; ++i)
                y[i] = M.mul(m, x[i]);
            if (F.value(encode_tuple(M.size(), y.data(), F.degree)) != A.act(m, F.value(k)))
                return false;
        }
    }
    return true;
}

namespace detail {

template <class R>
CanonicalForm homogeneous_cohomology_ring(const R &ring, const GModule &A, size_t n) {
    using S = typename R::S;
    const FiniteMonoid &M = A.monoid();
    const size_t m = M.size(), c = A.comps();
    auto moduli_of = [&](size_t deg) { return coordinate_moduli(A, ipow(m, deg + 1)); };
    // equivariant functions on M^{deg+1}: rows F(m x) - m F(x) = 0
    auto equivariant = [&](size_t deg) {
        const size_t cnt = ipow(m, deg + 1);
        SparseMap eq(cnt * c, cnt * m * c);
        std::vector<Elem> x(deg + 1), y(deg + 1);
        for (size_t k = 0; k < cnt; ++k) {
            decode_tuple(m, k, x.data(), deg + 1);
            for (Elem g = 0; g < m; ++g) {
                for (size_t i = 0; i <= deg; ++i)
                    y[i] = M.mul(g, x[i]);
                size_t ky = encode_tuple(m, y.data(), deg + 1);
                for (size_t i = 0; i < c; ++i) {
                    auto &row = eq.rows[(k * m + g) * c + i];
                    row.push_back({static_cast<uint32_t>(ky * c + i), 1});
                    for (size_t j = 0; j < c; ++j)
                        if (A.action(g)[i][j])
                            row.push_back({static_cast<uint32_t>(k * c + j), -A.action(g)[i][j]});
                }
            }
        }
        eq.normalise();
        std::vector<int64_t> mods;
        for (size_t k = 0; k < cnt * m; ++k)
            mods.insert(mods.end(), A.moduli().begin(), A.moduli().end());
        return lin::kernel(ring, cnt * c, map_rows(ring, eq, mods));
    };
    auto diff = [&](size_t deg) {
        const size_t src = ipow(m, deg + 1), dst = ipow(m, deg + 2);
        std::vector<Elem> x(deg + 2), b(deg + 1);
        return build_term_map(A, src, dst, [&](size_t t, auto &&cb) {
            decode_tuple(m, t, x.data(), deg + 2);
            for (size_t i = 0; i <= deg + 1; ++i) {
                size_t w = 0;
                for (size_t k = 0; k <= deg + 1; ++k)
                    if (k != i)
                        b[w++] = x[k];
                cb(NO_ACT, (i % 2) ? -1 : 1, encode_tuple(m, b.data(), deg + 1));
            }
        });
    };
    auto En = equivariant(n);
    SparseMap dn = diff(n);
    auto Zn = lin::kernel_within(ring, ipow(m, n + 1) * c, En, map_rows(ring, dn, moduli_of(n + 1)));
    std::vector<lin::SVec<S>> Bn;
    if (n > 0) {
        auto Em = equivariant(n - 1);
        SparseMap dm = diff(n - 1);
        for (auto &e : Em) {
            Vec64 x = from_svec(ring, e, dm.src_dim);
            Bn.push_back(to_svec(ring, dm.apply(x)));
        }
    }
    lin::Ambient amb;
    amb.dim = ipow(m, n + 1) * c;
    for (auto v : moduli_of(n))
        amb.moduli.push_back(v);
    lin::Subquotient<R> sq(ring, amb, Zn, Bn);
    return sq.canonical();
}

} // namespace detail

// Cohomology of the equivariant homogeneous complex (an observation for monoids).
inline CanonicalForm homogeneous_cohomology(const GModule &A, size_t n) {
    if (A.ring_modulus() == 0)
        return detail::homogeneous_cohomology_ring(lin::ZRing{}, A, n);
    return detail::homogeneous_cohomology_ring(lin::ModRing(A.ring_modulus()), A, n);
}

// ---- projectivity witness for F'_1 = Z[M^2], M = (Z/2, .) ----

struct DualBasisReport {
    bool linear = false;     // A1, A2, A3 are Z[M]-linear
    bool identity = false;   // x = (1,1)A1(x) + (1,0)A2(x) + (0,1)A3(x)
    bool not_cyclic = false; // no e in the coefficient box generates F'_1
    size_t box = 0;
    size_t candidates = 0;
    std::vector<std::string> failures;
};

inline DualBasisReport dual_basis_witness(int box = 2) {
    // Z[M] basis: (0), (1); F'_1 basis: (a,b) -> index 2a + b
    auto mulM = [](int a, int b) { return a * b; };
    auto zm_times = [&](int m, const std::vector<Integer> &x) { // m . x in Z[M] (x over (0),(1))
        std::vector<Integer> y(2);
        for (int e = 0; e < 2; ++e)
            y[mulM(m, e)] += x[e];
        return y;
    };
    auto f_times = [&](int m, const std::vector<Integer> &x) { // m . x in F'_1, diagonal
        std::vector<Integer> y(4);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                y[2 * mulM(m, a) + mulM(m, b)] += x[2 * a + b];
        return y;
    };
    IntMatrix A1(2, 4), A2(2, 4), A3(2, 4);
    A1(1, 3) = 1;                  // (1,1) -> (1); (0,1),(1,0),(0,0) -> (0)
    A1(0, 0) = 1, A1(0, 1) = 1, A1(0, 2) = 1;
    A2(1, 2) = 1, A2(0, 2) = -1;   // (1,0) -> (1) - (0)
    A3(1, 1) = 1, A3(0, 1) = -1;   // (0,1) -> (1) - (0)
    DualBasisReport r;
    r.box = static_cast<size_t>(box);
    r.linear = true;
    const IntMatrix *maps[3] = {&A1, &A2, &A3};
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 2; ++m)
            for (int b = 0; b < 4; ++b) {
                std::vector<Integer> e(4);
                e[b] = 1;
                auto lhs = (*maps[k]) * f_times(m, e);
                auto rhs = zm_times(m, (*maps[k]) * e);
                if (lhs != rhs) {
                    r.linear = false;
                    r.failures.push_back("A" + std::to_string(k + 1) + " at m=" + std::to_string(m) +
                                         ", basis " + std::to_string(b));
                }
            }
    // (sum_m c_m m) . e for c in Z[M], e in F'_1
    auto act = [&](const std::vector<Integer> &c, const std::vector<Integer> &e) {
        std::vector<Integer> y(4);
        for (int m = 0; m < 2; ++m) {
            auto me = f_times(m, e);
            for (int i = 0; i < 4; ++i)
                y[i] += c[m] * me[i];
        }
        return y;
    };
    const int gens[3] = {3, 2, 1}; // (1,1), (1,0), (0,1)
    r.identity = true;
    for (int b = 0; b < 4; ++b) {
        std::vector<Integer> x(4), sum(4);
        x[b] = 1;
        for (int k = 0; k < 3; ++k) {
            std::vector<Integer> e(4);
            e[gens[k]] = 1;
            auto y = act((*maps[k]) * x, e);
            for (int i = 0; i < 4; ++i)
                sum[i] += y[i];
        }
        if (sum != x) {
            r.identity = false;
            r.failures.push_back("dual basis identity at basis " + std::to_string(b));
        }
    }
    // Z[M] e = span_Z{(1) e, (0) e}; cyclic iff every basis vector is in that span
    r.not_cyclic = true;
    std::vector<Integer> e(4);
    std::function<void(int)> rec = [&](int i) {
        if (i == 4) {
            ++r.candidates;
            IntMatrix S(4, 2);
            auto e1 = f_times(1, e), e0 = f_times(0, e);
            for (int k = 0; k < 4; ++k)
                S(k, 0) = e1[k], S(k, 1) = e0[k];
            bool all = true;
            for (int b = 0; b < 4 && all; ++b) {
                std::vector<Integer> t(4), sol;
                t[b] = 1;
                all = integer_solve(S, t, sol);
            }
            if (all) {
                r.not_cyclic = false;
                r.failures.push_back("cyclic generator found");
            }
            return;
        }
        for (int v = -box; v <= box; ++v) {
            e[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return r;
}

} // namespace moncoh
