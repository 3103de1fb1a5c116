#pragma once

#include "error.hpp"
#include "int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace moncoh {

struct CanonicalForm {
    size_t free_rank = 0;
    std::vector<Integer> invariant_factors; // each >= 2, d_i | d_{i+1}

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    // 0 when infinite
    Integer order() const {
        if (free_rank)
            return 0;
        Integer o = 1;
        for (auto &d : invariant_factors)
            o *= d;
        return o;
    }
    std::string str() const {
        if (trivial())
            return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank) {
            os << "Z";
            if (free_rank > 1)
                os << "^" << free_rank;
            first = false;
        }
        for (size_t i = 0; i < invariant_factors.size();) {
            size_t j = i;
            while (j < invariant_factors.size() &&
                   invariant_factors[j] == invariant_factors[i])
                ++j;
            os << (first ? "" : " + ") << "Z/" << invariant_factors[i];
            if (j - i > 1)
                os << "^" << (j - i);
            first = false;
            i = j;
        }
        return os.str();
    }
    friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
        return a.free_rank == b.free_rank &&
               a.invariant_factors == b.invariant_factors;
    }
    friend bool operator!=(const CanonicalForm &a, const CanonicalForm &b) {
        return !(a == b);
    }
};

// Canonical form of a direct sum of cyclic groups Z/d (d = 0 meaning Z).
inline CanonicalForm canonical_of_cyclics(const std::vector<Integer> &ds) {
    // primary decomposition, then regroup into invariant factors
    CanonicalForm cf;
    std::vector<std::pair<Integer, std::vector<Integer>>> primes;
    auto add_power = [&](const Integer &p, const Integer &pk) {
        for (auto &e : primes)
            if (e.first == p) {
                e.second.push_back(pk);
                return;
            }
        primes.push_back({p, {pk}});
    };
    for (Integer d : ds) {
        if (d < 0)
            d = -d;
        if (d == 0) {
            ++cf.free_rank;
            continue;
        }
        for (Integer p = 2; p * p <= d; ++p) {
            if (d % p)
                continue;
            Integer pk = 1;
            while (d % p == 0) {
                d /= p;
                pk *= p;
            }
            add_power(p, pk);
        }
        if (d > 1)
            add_power(d, d);
    }
    size_t len = 0;
    for (auto &e : primes) {
        std::sort(e.second.begin(), e.second.end());
        len = std::max(len, e.second.size());
    }
    std::vector<Integer> inv(len, 1);
    for (auto &e : primes) {
        size_t off = len - e.second.size();
        for (size_t i = 0; i < e.second.size(); ++i)
            inv[off + i] *= e.second[i];
    }
    for (auto &d : inv)
        if (d > 1)
            cf.invariant_factors.push_back(d);
    return cf;
}

inline CanonicalForm direct_sum(const CanonicalForm &a, const CanonicalForm &b) {
    std::vector<Integer> ds = a.invariant_factors;
    ds.insert(ds.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    for (size_t i = 0; i < a.free_rank + b.free_rank; ++i)
        ds.push_back(0);
    return canonical_of_cyclics(ds);
}

inline CanonicalForm power(const CanonicalForm &a, size_t k) {
    CanonicalForm r;
    for (size_t i = 0; i < k; ++i)
        r = direct_sum(r, a);
    return r;
}

class FgAbelianGroup {
  public:
    FgAbelianGroup() = default;
    // relations: generators x m, columns are relations
    FgAbelianGroup(size_t generators, IntMatrix relations)
        : generators_(generators), relations_(std::move(relations)) {
        if (relations_.cols() == 0)
            relations_ = IntMatrix(generators_, 0);
        if (relations_.rows() != generators_)
            throw Error(ErrorKind::InvalidInput,
                        "relation matrix row count must equal generator count");
        canonical_ = compute_canonical();
    }
    static FgAbelianGroup free(size_t r) { return FgAbelianGroup(r, IntMatrix(r, 0)); }
    // Z/d_1 + ... ; d = 0 gives a free summand
    static FgAbelianGroup cyclic_sum(const std::vector<Integer> &ds) {
        IntMatrix rel(ds.size(), 0);
        std::vector<std::vector<Integer>> cols;
        for (size_t i = 0; i < ds.size(); ++i)
            if (ds[i] != 0) {
                std::vector<Integer> c(ds.size());
                c[i] = ds[i];
                cols.push_back(c);
            }
        if (!cols.empty())
            rel = IntMatrix::from_columns(ds.size(), cols);
        return FgAbelianGroup(ds.size(), rel);
    }

    size_t generators() const { return generators_; }
    const IntMatrix &relations() const { return relations_; }
    const CanonicalForm &canonical() const { return canonical_; }

    // v lies in the relation lattice (v == 0 in the group)
    bool is_zero(const std::vector<Integer> &v) const {
        bool all0 = std::all_of(v.begin(), v.end(), [](auto &x) { return x == 0; });
        if (all0)
            return true;
        if (relations_.cols() == 0)
            return false;
        std::vector<Integer> x;
        return integer_solve(relations_, v, x);
    }

  private:
    CanonicalForm compute_canonical() const {
        CanonicalForm cf;
        auto d = relations_.cols() ? elementary_divisors(relations_)
                                   : std::vector<Integer>{};
        size_t nz = 0;
        for (auto &x : d)
            if (x != 0) {
                ++nz;
                if (x > 1)
                    cf.invariant_factors.push_back(x);
            }
        cf.free_rank = generators_ - nz;
        return cf;
    }

    size_t generators_ = 0;
    IntMatrix relations_;
    CanonicalForm canonical_;
};

inline std::pair<size_t, std::vector<Integer>> canonicalize(const FgAbelianGroup &G) {
    return {G.canonical().free_rank, G.canonical().invariant_factors};
}

struct AbHom {
    FgAbelianGroup source, target;
    IntMatrix matrix; // target.generators x source.generators

    AbHom() = default;
    AbHom(FgAbelianGroup s, FgAbelianGroup t, IntMatrix m)
        : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
        if (matrix.rows() == 0 && matrix.cols() == 0)
            matrix = IntMatrix(target.generators(), source.generators());
        if (matrix.rows() != target.generators() ||
            matrix.cols() != source.generators())
            throw Error(ErrorKind::InvalidInput, "homomorphism matrix shape");
        for (size_t j = 0; j < source.relations().cols(); ++j)
            if (!target.is_zero(matrix * source.relations().column(j)))
                throw Error(ErrorKind::InvalidInput,
                            "matrix does not respect source relations");
    }
};

// Section data for a dense subquotient: class coordinates and lifts.
class DenseSubquotient {
  public:
    FgAbelianGroup group;                       // diagonal presentation
    std::vector<Integer> orders;                // per canonical generator, 0 = free
    std::vector<std::vector<Integer>> lifts;    // ambient representatives

    // coordinates of x (which must lie in the numerator lattice)
    std::vector<Integer> coordinates(const std::vector<Integer> &x) const {
        std::vector<Integer> sol;
        if (!integer_solve(gens_, x, sol))
            throw Error(ErrorKind::NotContained, "element outside numerator");
        std::vector<Integer> c(sol.begin(), sol.begin() + num_count_);
        std::vector<Integer> uc = U_ * c;
        std::vector<Integer> out;
        for (size_t k = 0; k < kept_.size(); ++k)
            out.push_back(mod_floor(uc[kept_[k]], orders[k]));
        return out;
    }

    std::vector<Integer> lift(const std::vector<Integer> &coords) const {
        std::vector<Integer> v(ambient_dim_);
        for (size_t k = 0; k < coords.size(); ++k)
            for (size_t i = 0; i < ambient_dim_; ++i)
                v[i] += coords[k] * lifts[k][i];
        return v;
    }

  private:
    friend DenseSubquotient dense_subquotient(const FgAbelianGroup &,
                                              const IntMatrix &, const IntMatrix &);
    IntMatrix gens_; // [sub | quot | amb relations]
    IntMatrix U_;
    std::vector<size_t> kept_;
    size_t num_count_ = 0, ambient_dim_ = 0;
};

// (span sub + L_amb) / (span quot + L_amb)
inline DenseSubquotient dense_subquotient(const FgAbelianGroup &amb,
                                          const IntMatrix &sub_gens,
                                          const IntMatrix &quot_gens) {
    const size_t n = amb.generators();
    IntMatrix sub = sub_gens.cols() ? sub_gens : IntMatrix(n, 0);
    IntMatrix quot = quot_gens.cols() ? quot_gens : IntMatrix(n, 0);
    if (sub.rows() != n || quot.rows() != n)
        throw Error(ErrorKind::InvalidInput, "generator rows must match ambient");
    IntMatrix den = quot.hcat(amb.relations());
    IntMatrix all = sub.hcat(den);
    // containment of the denominator in the numerator
    for (size_t j = 0; j < quot.cols(); ++j) {
        std::vector<Integer> x;
        IntMatrix num = sub.hcat(amb.relations());
        if (!integer_solve(num, quot.column(j), x))
            throw Error(ErrorKind::NotContained,
                        "quotient generator " + std::to_string(j) +
                            " not in the numerator lattice");
    }
    // relations among sub generators modulo den: kernel of [sub | den], projected
    const size_t k = sub.cols();
    IntMatrix K = integer_kernel(all);
    IntMatrix rel(k, K.cols());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < K.cols(); ++j)
            rel(i, j) = K(i, j);
    DenseSubquotient out;
    out.gens_ = all;
    out.num_count_ = k;
    out.ambient_dim_ = n;
    SmithForm f = smith_normal_form(rel);
    out.U_ = f.U;
    IntMatrix Uinv = unimodular_inverse(f.U);
    std::vector<Integer> ds;
    for (size_t i = 0; i < k; ++i) {
        Integer d = i < std::min(rel.rows(), rel.cols()) ? f.S(i, i) : Integer(0);
        if (d == 1)
            continue;
        out.kept_.push_back(i);
        out.orders.push_back(d);
        ds.push_back(d);
        // lift: sub * Uinv e_i
        std::vector<Integer> e(k);
        for (size_t r = 0; r < k; ++r)
            e[r] = Uinv(r, i);
        out.lifts.push_back(sub * e);
    }
    out.group = FgAbelianGroup::cyclic_sum(ds);
    return out;
}

inline FgAbelianGroup subquotient(const FgAbelianGroup &amb, const IntMatrix &sub_gens,
                                  const IntMatrix &quot_gens) {
    return dense_subquotient(amb, sub_gens, quot_gens).group;
}

// ker(g) / im(f) for A -f-> B -g-> C
inline DenseSubquotient homology_at_with_sections(const AbHom &f, const AbHom &g) {
    const FgAbelianGroup &B = f.target;
    if (B.generators() != g.source.generators())
        throw Error(ErrorKind::InvalidInput, "maps are not composable");
    IntMatrix gf = g.matrix * f.matrix;
    for (size_t j = 0; j < gf.cols(); ++j)
        if (!g.target.is_zero(gf.column(j)))
            throw Error(ErrorKind::CompositionNotZero,
                        "g∘f nonzero on generator " + std::to_string(j));
    // ker g = projection of ker [G | R_C]
    const size_t b = B.generators();
    IntMatrix aug = g.matrix.hcat(g.target.relations());
    if (aug.rows() == 0) // C = 0: everything is a cycle
        aug = IntMatrix(0, b + g.target.relations().cols());
    IntMatrix ker;
    if (aug.rows() == 0) {
        ker = IntMatrix::identity(b);
    } else {
        IntMatrix K = integer_kernel(aug);
        ker = IntMatrix(b, K.cols());
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < K.cols(); ++j)
                ker(i, j) = K(i, j);
    }
    return dense_subquotient(B, ker, f.matrix);
}

inline FgAbelianGroup homology_at(const AbHom &f, const AbHom &g) {
    return homology_at_with_sections(f, g).group;
}

} // namespace moncoh
