#pragma once

#include "abelian.hpp"
#include "error.hpp"
#include "lattice.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace moncoh {

using Vec64 = std::vector<int64_t>;

// Sparse integer map R^src -> R^dst, stored by rows.
struct SparseMap {
    size_t src_dim = 0, dst_dim = 0;
    std::vector<std::vector<std::pair<uint32_t, int64_t>>> rows;

    SparseMap() = default;
    SparseMap(size_t src, size_t dst) : src_dim(src), dst_dim(dst), rows(dst) {}

    Vec64 apply(const Vec64 &x) const {
        Vec64 y(dst_dim, 0);
        for (size_t i = 0; i < dst_dim; ++i)
            for (auto &[j, v] : rows[i])
                if (x[j])
                    y[i] = checked_add(y[i], checked_mul(v, x[j]));
        return y;
    }
    // sort and merge duplicate column entries, drop zeros
    void normalise() {
        for (auto &r : rows) {
            std::sort(r.begin(), r.end());
            size_t w = 0;
            for (size_t k = 0; k < r.size();) {
                uint32_t c = r[k].first;
                int64_t acc = 0;
                while (k < r.size() && r[k].first == c)
                    acc = checked_add(acc, r[k++].second);
                if (acc)
                    r[w++] = {c, acc};
            }
            r.resize(w);
        }
    }
    std::vector<std::vector<std::pair<uint32_t, int64_t>>> columns() const {
        std::vector<std::vector<std::pair<uint32_t, int64_t>>> c(src_dim);
        for (size_t i = 0; i < dst_dim; ++i)
            for (auto &[j, v] : rows[i])
                c[j].push_back({static_cast<uint32_t>(i), v});
        return c;
    }
};

// A cochain complex of finite-rank coordinate modules R^dim / (moduli).
struct LinComplex {
    int64_t ring_modulus = 0;           // 0: Z
    std::vector<std::vector<int64_t>> moduli; // per degree, per coordinate (0 = free)
    std::vector<SparseMap> d;           // d[n]: degree n -> n+1

    size_t top() const { return moduli.empty() ? 0 : moduli.size() - 1; }
    size_t dim(size_t n) const { return moduli[n].size(); }
    lin::Ambient ambient(size_t n) const {
        lin::Ambient a;
        a.dim = dim(n);
        for (auto m : moduli[n])
            a.moduli.push_back(m);
        return a;
    }
    void reduce(size_t n, Vec64 &x) const {
        for (size_t i = 0; i < x.size(); ++i)
            if (moduli[n][i])
                x[i] = mod64(x[i], moduli[n][i]);
    }
    bool is_zero(size_t n, const Vec64 &x) const {
        for (size_t i = 0; i < x.size(); ++i) {
            int64_t v = moduli[n][i] ? mod64(x[i], moduli[n][i]) : x[i];
            if (v)
                return false;
        }
        return true;
    }
    Vec64 differential(size_t n, const Vec64 &x) const {
        Vec64 y = d[n].apply(x);
        reduce(n + 1, y);
        return y;
    }
    bool is_field() const {
        if (ring_modulus < 2 || !lin::ModRing(ring_modulus).is_field())
            return false;
        for (auto &ms : moduli)
            for (auto m : ms)
                if (m != ring_modulus)
                    return false;
        return true;
    }
};

namespace detail {

template <class R>
std::vector<lin::Row<R>> map_rows(const R &ring, const SparseMap &m,
                                  const std::vector<int64_t> &dst_moduli) {
    std::vector<lin::Row<R>> rows(m.dst_dim);
    for (size_t i = 0; i < m.dst_dim; ++i) {
        for (auto &[j, v] : m.rows[i]) {
            auto s = ring.from_ll(v);
            if (!ring.is_zero(s))
                rows[i].coeffs.push(j, s);
        }
        rows[i].modulus = dst_moduli[i];
    }
    return rows;
}

template <class R>
std::vector<lin::SVec<typename R::S>> map_columns(const R &ring, const SparseMap &m) {
    std::vector<lin::SVec<typename R::S>> cols(m.src_dim);
    for (size_t i = 0; i < m.dst_dim; ++i)
        for (auto &[j, v] : m.rows[i]) {
            auto s = ring.from_ll(v);
            if (!ring.is_zero(s))
                cols[j].push(static_cast<uint32_t>(i), s);
        }
    return cols;
}

template <class R> lin::SVec<typename R::S> to_svec(const R &ring, const Vec64 &x) {
    lin::SVec<typename R::S> v;
    for (size_t i = 0; i < x.size(); ++i) {
        auto s = ring.from_ll(x[i]);
        if (!ring.is_zero(s))
            v.push(static_cast<uint32_t>(i), s);
    }
    return v;
}

template <class R> Vec64 from_svec(const R &ring, const lin::SVec<typename R::S> &v, size_t n) {
    Vec64 x(n, 0);
    for (size_t k = 0; k < v.nnz(); ++k)
        x[v.idx[k]] = to_ll(ring.to_integer(v.val[k]));
    return x;
}

} // namespace detail

// Kernel dimension of d[n] over a prime field.
inline size_t field_kernel_dim(const LinComplex &cx, size_t n) {
    lin::ModRing F(cx.ring_modulus);
    if (n >= cx.d.size())
        return cx.dim(n);
    auto rows = detail::map_rows(F, cx.d[n], cx.moduli[n + 1]);
    return lin::kernel(F, cx.dim(n), rows).size();
}

// H^n of a LinComplex, with class coordinates when materialised.
class Homology {
  public:
    // classes == false allows a dimension-only computation over prime fields
    static Homology compute(const LinComplex &cx, size_t n, bool classes = true) {
        Homology h;
        h.n_ = n;
        h.dim_ = cx.dim(n);
        if (!classes && cx.is_field()) {
            size_t kn = field_kernel_dim(cx, n);
            size_t rk = 0;
            if (n > 0)
                rk = cx.dim(n - 1) - field_kernel_dim(cx, n - 1);
            std::vector<Integer> ds(kn - rk, cx.ring_modulus);
            h.canonical_ = canonical_of_cyclics(ds);
            h.orders_ = ds;
            return h;
        }
        if (cx.ring_modulus == 0)
            h.build(lin::ZRing{}, cx, n);
        else
            h.build(lin::ModRing(cx.ring_modulus), cx, n);
        return h;
    }

    size_t degree() const { return n_; }
    const CanonicalForm &canonical() const { return canonical_; }
    const std::vector<Integer> &orders() const { return orders_; }
    bool materialised() const { return sq_.index() != 0; }

    std::vector<Vec64> representatives() const {
        return std::visit(
            [&](auto &s) -> std::vector<Vec64> {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, std::monostate>) {
                    throw Error(ErrorKind::InvalidInput, "homology not materialised");
                } else {
                    std::vector<Vec64> out;
                    for (auto &r : s.representatives())
                        out.push_back(detail::from_svec(ring_of(s), r, dim_));
                    return out;
                }
            },
            sq_);
    }
    // canonical coordinates; nullopt when x is not a cocycle
    std::vector<std::optional<std::vector<Integer>>> coordinates(const std::vector<Vec64> &xs) const {
        return std::visit(
            [&](auto &s) -> std::vector<std::optional<std::vector<Integer>>> {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, std::monostate>) {
                    throw Error(ErrorKind::InvalidInput, "homology not materialised");
                } else {
                    std::vector<lin::SVec<typename decltype(ring_of(s))::S>> v;
                    for (auto &x : xs)
                        v.push_back(detail::to_svec(ring_of(s), x));
                    return s.coordinates(v);
                }
            },
            sq_);
    }
    std::optional<std::vector<Integer>> coordinates(const Vec64 &x) const {
        return coordinates(std::vector<Vec64>{x})[0];
    }
    bool is_boundary(const Vec64 &x) const {
        auto c = coordinates(x);
        if (!c)
            return false;
        for (auto &v : *c)
            if (v != 0)
                return false;
        return true;
    }
    FgAbelianGroup group() const { return FgAbelianGroup::cyclic_sum(orders_); }

  private:
    static lin::ZRing ring_of(const lin::Subquotient<lin::ZRing> &) { return {}; }
    lin::ModRing ring_of(const lin::Subquotient<lin::ModRing> &) const { return lin::ModRing(mod_); }

    template <class R> void build(const R &ring, const LinComplex &cx, size_t n) {
        using S = typename R::S;
        std::vector<lin::SVec<S>> num;
        if (n < cx.d.size())
            num = lin::kernel(ring, cx.dim(n), detail::map_rows(ring, cx.d[n], cx.moduli[n + 1]));
        else
            num = lin::unit_vectors(ring, cx.dim(n));
        std::vector<lin::SVec<S>> den;
        if (n > 0)
            for (auto &c : detail::map_columns(ring, cx.d[n - 1]))
                if (!c.empty())
                    den.push_back(std::move(c));
        lin::Subquotient<R> s(ring, cx.ambient(n), std::move(num), std::move(den));
        canonical_ = s.canonical();
        orders_ = s.orders();
        if constexpr (std::is_same_v<R, lin::ModRing>)
            mod_ = ring.m;
        sq_ = std::move(s);
    }

    size_t n_ = 0, dim_ = 0;
    int64_t mod_ = 0;
    CanonicalForm canonical_;
    std::vector<Integer> orders_;
    std::variant<std::monostate, lin::Subquotient<lin::ModRing>, lin::Subquotient<lin::ZRing>> sq_;
};

// Integer matrix of the map induced on homology by a chain-level map (given on cocycles).
template <class F>
IntMatrix induced_matrix(const Homology &src, const Homology &dst, F &&chain_map) {
    auto reps = src.representatives();
    std::vector<Vec64> imgs;
    for (auto &r : reps)
        imgs.push_back(chain_map(r));
    auto co = dst.coordinates(imgs);
    IntMatrix M(dst.orders().size(), reps.size());
    for (size_t j = 0; j < reps.size(); ++j) {
        if (!co[j])
            throw Error(ErrorKind::NotCocycle, "chain map does not send cocycles to cocycles");
        for (size_t i = 0; i < co[j]->size(); ++i)
            M(i, j) = (*co[j])[i];
    }
    return M;
}

} // namespace moncoh
