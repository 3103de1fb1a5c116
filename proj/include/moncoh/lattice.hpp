#pragma once

#include "abelian.hpp"
#include "kernel.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace moncoh::lin {

// Row echelon basis of a submodule of R^n with the Howell closure: for every
// column c, the elements vanishing before c are spanned by rows with pivot >= c.
template <class R> class Echelon {
  public:
    using S = typename R::S;

    Echelon(const R &ring, size_t n) : ring_(ring), rows_(n), has_(n, 0) {}

    void insert(SVec<S> v) {
        std::vector<SVec<S>> stack{std::move(v)};
        while (!stack.empty()) {
            SVec<S> x = std::move(stack.back());
            stack.pop_back();
            while (!x.empty()) {
                uint32_t c = x.idx[0];
                if (!has_[c]) {
                    rows_[c] = std::move(x);
                    has_[c] = 1;
                    ++count_;
                    close(c, stack);
                    break;
                }
                S a = x.val[0];
                S b = rows_[c].val[0];
                S q;
                if (ring_.divides(b, a, zero_mod(), q)) {
                    x = svec_combine(ring_, ring_.one(), x, ring_.neg(q), rows_[c]);
                    continue;
                }
                S s, t, u, w, g;
                ring_.bezout(b, a, zero_mod(), s, t, u, w, g);
                SVec<S> np = svec_combine(ring_, s, rows_[c], t, x);
                SVec<S> nx = svec_combine(ring_, w, x, u, rows_[c]);
                rows_[c] = std::move(np);
                close(c, stack);
                x = std::move(nx);
            }
        }
    }

    // remainder of v after reduction (empty iff v lies in the span)
    SVec<S> reduce(SVec<S> v) const {
        size_t k = 0;
        SVec<S> rest;
        while (!v.empty()) {
            uint32_t c = v.idx[0];
            S q;
            if (has_[c] && ring_.divides(rows_[c].val[0], v.val[0], zero_mod(), q)) {
                v = svec_combine(ring_, ring_.one(), v, ring_.neg(q), rows_[c]);
                continue;
            }
            // stuck at c: move the entry to the remainder
            rest.push(c, v.val[0]);
            v.idx.erase(v.idx.begin());
            v.val.erase(v.val.begin());
            ++k;
        }
        return rest;
    }
    bool contains(const SVec<S> &v) const { return reduce(v).empty(); }

    size_t dim() const { return rows_.size(); }
    size_t pivots() const { return count_; }
    bool has_pivot(size_t c) const { return has_[c]; }
    const SVec<S> &row(size_t c) const { return rows_[c]; }
    bool unit_pivot(size_t c) const {
        return has_[c] && ring_.weight(rows_[c].val[0], zero_mod()) == 1;
    }

  private:
    auto zero_mod() const { return ring_.modulus_of(Integer(0)); }
    void close(uint32_t c, std::vector<SVec<S>> &stack) {
        Integer m = ring_.characteristic();
        if (m == 0)
            return;
        Integer h = gcd(ring_.to_integer(rows_[c].val[0]), m);
        S mu = ring_.from_integer(m / h);
        if (ring_.is_zero(mu))
            return;
        SVec<S> y = svec_scale(ring_, mu, rows_[c]);
        if (!y.empty())
            stack.push_back(std::move(y));
    }

    R ring_;
    std::vector<SVec<S>> rows_;
    std::vector<char> has_;
    size_t count_ = 0;
};

// Coordinates of R^n / span(rows) after eliminating unit pivots:
// the quotient is R^Q / (reduced non-unit rows) with Q the remaining columns.
template <class R> class QuotientPresentation {
  public:
    using S = typename R::S;

    QuotientPresentation(const R &ring, Echelon<R> ech) : ring_(ring), ech_(std::move(ech)) {
        const size_t n = ech_.dim();
        qpos_.assign(n, -1);
        for (size_t c = 0; c < n; ++c)
            if (!ech_.unit_pivot(c)) {
                qpos_[c] = static_cast<long>(qcols_.size());
                qcols_.push_back(c);
            }
        const size_t q = qcols_.size();
        std::vector<std::vector<Integer>> rels;
        for (size_t c = 0; c < n; ++c)
            if (ech_.has_pivot(c) && !ech_.unit_pivot(c))
                rels.push_back(project(eliminate(ech_.row(c))));
        Integer m = ring_.characteristic();
        if (m != 0)
            for (size_t i = 0; i < q; ++i) {
                std::vector<Integer> r(q);
                r[i] = m;
                rels.push_back(r);
            }
        IntMatrix rel = rels.empty() ? IntMatrix(q, 0) : IntMatrix::from_columns(q, rels);
        SmithForm f = smith_normal_form(rel);
        U_ = f.U;
        IntMatrix Uinv = unimodular_inverse(f.U);
        std::vector<Integer> ds;
        for (size_t i = 0; i < q; ++i) {
            Integer d = i < std::min(rel.rows(), rel.cols()) ? f.S(i, i) : Integer(0);
            if (d == 1)
                continue;
            kept_.push_back(i);
            orders_.push_back(d);
            ds.push_back(d);
            SVec<S> g;
            for (size_t r = 0; r < q; ++r) {
                S v = ring_.from_integer(Uinv(r, i));
                if (!ring_.is_zero(v))
                    g.push(static_cast<uint32_t>(qcols_[r]), v);
            }
            gen_coeffs_.push_back(std::move(g));
        }
        canonical_ = canonical_of_cyclics(ds);
    }

    const CanonicalForm &canonical() const { return canonical_; }
    const std::vector<Integer> &orders() const { return orders_; }
    // coefficient vectors (over R^n) of the canonical generators
    const std::vector<SVec<S>> &generator_coefficients() const { return gen_coeffs_; }

    std::vector<Integer> coordinates(const SVec<S> &y) const {
        std::vector<Integer> yq = project(eliminate(y));
        std::vector<Integer> u = U_ * yq;
        std::vector<Integer> out;
        for (size_t k = 0; k < kept_.size(); ++k)
            out.push_back(mod_floor(u[kept_[k]], orders_[k]));
        return out;
    }

  private:
    // substitute unit-pivot columns away (ascending)
    SVec<S> eliminate(SVec<S> v) const {
        SVec<S> out;
        while (!v.empty()) {
            uint32_t c = v.idx[0];
            if (ech_.unit_pivot(c)) {
                S q;
                ring_.divides(ech_.row(c).val[0], v.val[0], ring_.modulus_of(Integer(0)), q);
                v = svec_combine(ring_, ring_.one(), v, ring_.neg(q), ech_.row(c));
                continue;
            }
            out.push(c, v.val[0]);
            v.idx.erase(v.idx.begin());
            v.val.erase(v.val.begin());
        }
        return out;
    }
    std::vector<Integer> project(const SVec<S> &v) const {
        std::vector<Integer> r(qcols_.size());
        for (size_t k = 0; k < v.nnz(); ++k)
            r[qpos_[v.idx[k]]] = ring_.to_integer(v.val[k]);
        return r;
    }

    R ring_;
    Echelon<R> ech_;
    std::vector<long> qpos_;
    std::vector<size_t> qcols_;
    IntMatrix U_;
    std::vector<size_t> kept_;
    std::vector<Integer> orders_;
    std::vector<SVec<S>> gen_coeffs_;
    CanonicalForm canonical_;
};

// Ambient coordinate module R^dim / (moduli_i e_i).
struct Ambient {
    size_t dim = 0;
    std::vector<Integer> moduli; // per coordinate; 0 = no relation
};

// (span num + span den + Rel) / (span den + Rel) inside an ambient module.
template <class R> class Subquotient {
  public:
    using S = typename R::S;

    Subquotient(const R &ring, Ambient amb, std::vector<SVec<S>> num, std::vector<SVec<S>> den)
        : ring_(ring), amb_(std::move(amb)), num_(std::move(num)), den_(std::move(den)) {
        auto K = relation_kernel({});
        Echelon<R> ech(ring_, num_.size());
        for (auto &k : K) {
            SVec<S> y;
            for (size_t t = 0; t < k.nnz() && k.idx[t] < num_.size(); ++t)
                y.push(k.idx[t], k.val[t]);
            if (!y.empty())
                ech.insert(std::move(y));
        }
        pres_.emplace(ring_, std::move(ech));
    }

    const CanonicalForm &canonical() const { return pres_->canonical(); }
    const std::vector<Integer> &orders() const { return pres_->orders(); }
    size_t generator_count() const { return pres_->orders().size(); }
    const Ambient &ambient() const { return amb_; }
    const std::vector<SVec<S>> &numerator() const { return num_; }
    const std::vector<SVec<S>> &denominator() const { return den_; }

    // canonical generator k as a combination of numerator generators
    const std::vector<SVec<S>> &generator_coefficients() const { return pres_->generator_coefficients(); }

    // ambient representatives of the canonical generators
    std::vector<SVec<S>> representatives() const {
        std::vector<SVec<S>> out;
        for (auto &g : pres_->generator_coefficients())
            out.push_back(combine_num(g));
        return out;
    }
    SVec<S> combine_num(const SVec<S> &coeffs) const {
        std::vector<std::pair<uint32_t, S>> acc;
        for (size_t k = 0; k < coeffs.nnz(); ++k) {
            const auto &v = num_[coeffs.idx[k]];
            for (size_t t = 0; t < v.nnz(); ++t)
                acc.push_back({v.idx[t], ring_.mul(coeffs.val[k], v.val[t])});
        }
        return reduce_ambient(svec_from_pairs(ring_, std::move(acc)));
    }
    SVec<S> lift(const std::vector<Integer> &coords) const {
        SVec<S> c;
        std::vector<std::pair<uint32_t, S>> acc;
        const auto &gc = pres_->generator_coefficients();
        for (size_t k = 0; k < coords.size(); ++k)
            for (size_t t = 0; t < gc[k].nnz(); ++t)
                acc.push_back({gc[k].idx[t],
                               ring_.mul(ring_.from_integer(coords[k]), gc[k].val[t])});
        return combine_num(svec_from_pairs(ring_, std::move(acc)));
    }

    // Canonical coordinates of each x (which must lie in the numerator span).
    // Returns std::nullopt for elements outside it.
    std::vector<std::optional<std::vector<Integer>>>
    coordinates(const std::vector<SVec<S>> &xs) const {
        const size_t nx = xs.size(), nn = num_.size();
        std::vector<std::optional<std::vector<Integer>>> out(nx);
        if (nx == 0)
            return out;
        auto K = relation_kernel(xs);
        Echelon<R> ech(ring_, nx + nn);
        for (auto &k : K) {
            SVec<S> y;
            for (size_t t = 0; t < k.nnz() && k.idx[t] < nx + nn; ++t)
                y.push(k.idx[t], k.val[t]);
            if (!y.empty())
                ech.insert(std::move(y));
        }
        for (size_t i = 0; i < nx; ++i) {
            if (xs[i].empty()) {
                out[i] = std::vector<Integer>(generator_count(), 0);
                continue;
            }
            SVec<S> e;
            e.push(static_cast<uint32_t>(i), ring_.one());
            SVec<S> r = ech.reduce(std::move(e));
            if (!r.empty() && r.idx[0] < nx)
                continue;
            SVec<S> y;
            for (size_t t = 0; t < r.nnz(); ++t)
                y.push(static_cast<uint32_t>(r.idx[t] - nx), r.val[t]);
            out[i] = pres_->coordinates(y);
        }
        return out;
    }
    std::optional<std::vector<Integer>> coordinates(const SVec<S> &x) const {
        return coordinates(std::vector<SVec<S>>{x})[0];
    }
    bool in_denominator(const SVec<S> &x) const {
        auto c = coordinates(x);
        if (!c)
            return false;
        for (auto &v : *c)
            if (v != 0)
                return false;
        return true;
    }

  private:
    SVec<S> reduce_ambient(SVec<S> v) const {
        SVec<S> out;
        for (size_t k = 0; k < v.nnz(); ++k) {
            const Integer &d = amb_.moduli.empty() ? Integer(0) : amb_.moduli[v.idx[k]];
            S s = d == 0 ? v.val[k] : ring_.from_integer(mod_floor(ring_.to_integer(v.val[k]), d));
            if (!ring_.is_zero(s))
                out.push(v.idx[k], s);
        }
        return out;
    }
    // kernel of [extra | num | den] against the ambient coordinates
    std::vector<SVec<S>> relation_kernel(const std::vector<SVec<S>> &extra) const {
        std::vector<const SVec<S> *> cols;
        for (auto &v : extra)
            cols.push_back(&v);
        for (auto &v : num_)
            cols.push_back(&v);
        for (auto &v : den_)
            cols.push_back(&v);
        auto rows = rows_of_columns(ring_, amb_.dim, cols, amb_.moduli);
        return kernel(ring_, cols.size(), rows);
    }

    R ring_;
    Ambient amb_;
    std::vector<SVec<S>> num_, den_;
    std::optional<QuotientPresentation<R>> pres_;
};

} // namespace moncoh::lin
