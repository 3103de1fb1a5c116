#pragma once

#include "ring.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace moncoh::lin {

template <class S> struct SVec {
    std::vector<uint32_t> idx; // strictly increasing
    std::vector<S> val;        // nonzero

    size_t nnz() const { return idx.size(); }
    bool empty() const { return idx.empty(); }
    void push(uint32_t i, S v) {
        idx.push_back(i);
        val.push_back(std::move(v));
    }
    const S *find(uint32_t i) const {
        auto it = std::lower_bound(idx.begin(), idx.end(), i);
        if (it == idx.end() || *it != i)
            return nullptr;
        return &val[it - idx.begin()];
    }
};

template <class R>
SVec<typename R::S> svec_from_pairs(const R &ring,
                                    std::vector<std::pair<uint32_t, typename R::S>> p) {
    std::sort(p.begin(), p.end(),
              [](auto &a, auto &b) { return a.first < b.first; });
    SVec<typename R::S> out;
    for (size_t i = 0; i < p.size();) {
        typename R::S acc = p[i].second;
        size_t j = i + 1;
        while (j < p.size() && p[j].first == p[i].first)
            acc = ring.add(acc, p[j++].second);
        if (!ring.is_zero(acc))
            out.push(p[i].first, acc);
        i = j;
    }
    return out;
}

template <class R>
SVec<typename R::S> svec_from_dense(const R &ring, const std::vector<Integer> &v) {
    SVec<typename R::S> out;
    for (size_t i = 0; i < v.size(); ++i) {
        auto s = ring.from_integer(v[i]);
        if (!ring.is_zero(s))
            out.push(static_cast<uint32_t>(i), s);
    }
    return out;
}

template <class R>
std::vector<Integer> svec_to_dense(const R &ring, const SVec<typename R::S> &v, size_t n) {
    std::vector<Integer> out(n);
    for (size_t k = 0; k < v.nnz(); ++k)
        out[v.idx[k]] = ring.to_integer(v.val[k]);
    return out;
}

// a*x + b*y; new_coords receives indices present in the result but not in x
template <class R>
SVec<typename R::S> svec_combine(const R &ring, const typename R::S &a,
                                 const SVec<typename R::S> &x,
                                 const typename R::S &b,
                                 const SVec<typename R::S> &y,
                                 std::vector<uint32_t> *new_coords = nullptr) {
    SVec<typename R::S> out;
    out.idx.reserve(x.nnz() + y.nnz());
    out.val.reserve(x.nnz() + y.nnz());
    size_t i = 0, j = 0;
    const bool a_one = a == ring.one();
    while (i < x.nnz() || j < y.nnz()) {
        if (j == y.nnz() || (i < x.nnz() && x.idx[i] < y.idx[j])) {
            auto v = a_one ? x.val[i] : ring.mul(a, x.val[i]);
            if (!ring.is_zero(v))
                out.push(x.idx[i], v);
            ++i;
        } else if (i == x.nnz() || y.idx[j] < x.idx[i]) {
            auto v = ring.mul(b, y.val[j]);
            if (!ring.is_zero(v)) {
                out.push(y.idx[j], v);
                if (new_coords)
                    new_coords->push_back(y.idx[j]);
            }
            ++j;
        } else {
            auto v = ring.add(a_one ? x.val[i] : ring.mul(a, x.val[i]),
                              ring.mul(b, y.val[j]));
            if (!ring.is_zero(v))
                out.push(x.idx[i], v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class R>
SVec<typename R::S> svec_scale(const R &ring, const typename R::S &a,
                               const SVec<typename R::S> &x) {
    SVec<typename R::S> out;
    for (size_t k = 0; k < x.nnz(); ++k) {
        auto v = ring.mul(a, x.val[k]);
        if (!ring.is_zero(v))
            out.push(x.idx[k], v);
    }
    return out;
}

template <class R>
typename R::S svec_dot(const R &ring, const SVec<typename R::S> &x,
                       const SVec<typename R::S> &y) {
    typename R::S acc = ring.zero();
    size_t i = 0, j = 0;
    while (i < x.nnz() && j < y.nnz()) {
        if (x.idx[i] < y.idx[j])
            ++i;
        else if (y.idx[j] < x.idx[i])
            ++j;
        else
            acc = ring.add(acc, ring.mul(x.val[i++], y.val[j++]));
    }
    return acc;
}

// A linear condition on coefficient vectors: row . x == 0 modulo `modulus`.
template <class R> struct Row {
    SVec<typename R::S> coeffs;
    Integer modulus = 0; // 0: the ring itself
};

} // namespace moncoh::lin
