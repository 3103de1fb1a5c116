#pragma once

#include "sparse.hpp"

#include <cstdint>
#include <vector>

namespace moncoh::lin {

// Generators of {x in span(gens) : row . x == 0 (mod row.modulus) for all rows}.
//
// Rows are consumed one at a time. Each row restricts the current generating
// set by unimodular column operations that concentrate the row's values on a
// single pivot generator, which is then dropped or replaced by the smallest
// multiple that satisfies the row.
template <class R>
std::vector<SVec<typename R::S>>
kernel_within(const R &ring, size_t ncols, std::vector<SVec<typename R::S>> gens,
              const std::vector<Row<R>> &rows) {
    using S = typename R::S;
    using Mod = decltype(ring.modulus_of(Integer(0)));
    const size_t ng = gens.size();
    std::vector<char> alive(ng, 1);
    std::vector<std::vector<uint32_t>> occ(ncols);
    for (size_t j = 0; j < ng; ++j) {
        if (gens[j].empty())
            alive[j] = 0;
        for (uint32_t c : gens[j].idx)
            occ[c].push_back(static_cast<uint32_t>(j));
    }
    std::vector<uint32_t> stamp(ng, 0);
    uint32_t tick = 0;
    std::vector<uint32_t> cand;
    std::vector<S> vals;
    std::vector<uint32_t> fresh;

    auto note_fresh = [&](uint32_t j) {
        for (uint32_t c : fresh)
            occ[c].push_back(j);
        fresh.clear();
    };

    for (const Row<R> &row : rows) {
        if (row.coeffs.empty())
            continue;
        Mod d = ring.modulus_of(row.modulus);
        ++tick;
        cand.clear();
        vals.clear();
        for (uint32_t c : row.coeffs.idx) {
            auto &list = occ[c];
            size_t w = 0;
            for (size_t r = 0; r < list.size(); ++r) {
                uint32_t j = list[r];
                if (!alive[j] || !gens[j].find(c))
                    continue;
                list[w++] = j;
                if (stamp[j] == tick)
                    continue;
                stamp[j] = tick;
                S v = ring.reduce(svec_dot(ring, row.coeffs, gens[j]), d);
                if (!ring.is_zero(v)) {
                    cand.push_back(j);
                    vals.push_back(v);
                }
            }
            list.resize(w);
        }
        if (cand.empty())
            continue;
        size_t best = 0;
        Integer bw = ring.weight(vals[0], d);
        for (size_t k = 1; k < cand.size(); ++k) {
            Integer w = ring.weight(vals[k], d);
            if (w < bw || (w == bw && gens[cand[k]].nnz() < gens[cand[best]].nnz())) {
                best = k;
                bw = w;
            }
        }
        uint32_t p = cand[best];
        S vp = vals[best];
        for (size_t k = 0; k < cand.size(); ++k) {
            if (k == best)
                continue;
            uint32_t j = cand[k];
            S q;
            if (ring.divides(vp, vals[k], d, q)) {
                gens[j] = svec_combine(ring, ring.one(), gens[j], ring.neg(q), gens[p], &fresh);
                note_fresh(j);
            } else {
                S s, t, u, w, g;
                ring.bezout(vp, vals[k], d, s, t, u, w, g);
                SVec<S> np = svec_combine(ring, s, gens[p], t, gens[j], &fresh);
                note_fresh(p);
                SVec<S> nj = svec_combine(ring, w, gens[j], u, gens[p], &fresh);
                note_fresh(j);
                gens[p] = std::move(np);
                gens[j] = std::move(nj);
                vp = g;
            }
            if (gens[j].empty())
                alive[j] = 0;
        }
        S mu;
        if (!ring.annihilator(vp, d, mu)) {
            alive[p] = 0;
        } else {
            gens[p] = svec_scale(ring, mu, gens[p]);
            if (gens[p].empty())
                alive[p] = 0;
        }
    }
    std::vector<SVec<S>> out;
    for (size_t j = 0; j < ng; ++j)
        if (alive[j] && !gens[j].empty())
            out.push_back(std::move(gens[j]));
    return out;
}

template <class R>
std::vector<SVec<typename R::S>> unit_vectors(const R &ring, size_t n) {
    std::vector<SVec<typename R::S>> g(n);
    for (size_t j = 0; j < n; ++j)
        g[j].push(static_cast<uint32_t>(j), ring.one());
    return g;
}

template <class R>
std::vector<SVec<typename R::S>> kernel(const R &ring, size_t ncols,
                                        const std::vector<Row<R>> &rows) {
    return kernel_within(ring, ncols, unit_vectors(ring, ncols), rows);
}

// Transpose a list of column vectors (length `dim`) into rows.
template <class R>
std::vector<Row<R>> rows_of_columns(const R &ring, size_t dim,
                                    const std::vector<const SVec<typename R::S> *> &cols,
                                    const std::vector<Integer> &moduli) {
    (void)ring;
    std::vector<Row<R>> rows(dim);
    for (size_t j = 0; j < cols.size(); ++j) {
        const auto &c = *cols[j];
        for (size_t k = 0; k < c.nnz(); ++k)
            rows[c.idx[k]].coeffs.push(static_cast<uint32_t>(j), c.val[k]);
    }
    for (size_t i = 0; i < dim && i < moduli.size(); ++i)
        rows[i].modulus = moduli[i];
    return rows;
}

} // namespace moncoh::lin
