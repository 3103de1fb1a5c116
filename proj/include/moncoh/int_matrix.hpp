#pragma once

#include "integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace moncoh {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (auto &r : init) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long long v : r)
                entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Integer &operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Integer &operator()(size_t i, size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Integer> &entries() const { return entries_; }

    bool is_zero() const {
        for (auto &e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    std::vector<Integer> column(size_t j) const {
        std::vector<Integer> c(rows_);
        for (size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b)
            return;
        for (size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b)
            return;
        for (size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += q * row b
    void add_row(size_t a, size_t b, const Integer &q) {
        if (q == 0)
            return;
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(b, j) != 0)
                (*this)(a, j) += q * (*this)(b, j);
    }
    // col a += q * col b
    void add_col(size_t a, size_t b, const Integer &q) {
        if (q == 0)
            return;
        for (size_t i = 0; i < rows_; ++i)
            if ((*this)(i, b) != 0)
                (*this)(i, a) += q * (*this)(i, b);
    }
    void negate_row(size_t a) {
        for (size_t j = 0; j < cols_; ++j)
            (*this)(a, j) = -(*this)(a, j);
    }

    // append columns of other (same row count)
    IntMatrix hcat(const IntMatrix &o) const {
        size_t r = rows_ ? rows_ : o.rows_;
        IntMatrix m(r, cols_ + o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(i, j);
        for (size_t i = 0; i < o.rows_; ++i)
            for (size_t j = 0; j < o.cols_; ++j)
                m(i, cols_ + j) = o(i, j);
        return m;
    }

    static IntMatrix from_columns(size_t rows,
                                  const std::vector<std::vector<Integer>> &cs) {
        IntMatrix m(rows, cs.size());
        for (size_t j = 0; j < cs.size(); ++j)
            for (size_t i = 0; i < rows; ++i)
                m(i, j) = cs[j][i];
        return m;
    }

    friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> entries_;
};

inline IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Integer &aik = a(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

inline std::vector<Integer> operator*(const IntMatrix &a,
                                      const std::vector<Integer> &x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Integer> y(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0)
                y[i] += a(i, j) * x[j];
    return y;
}

inline std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    os << '[';
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// Bareiss fraction-free elimination
inline Integer determinant(IntMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SmithForm {
    IntMatrix U, S, V; // U * M * V == S
    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
            d.push_back(S(i, i));
        return d;
    }
    size_t rank() const {
        size_t r = 0;
        for (auto &d : diagonal())
            r += d != 0;
        return r;
    }
};

namespace detail {

// Shared driver; transforms tracked only when want_uv.
inline void smith_reduce(IntMatrix &S, IntMatrix *U, IntMatrix *V) {
    const size_t r = S.rows(), c = S.cols();
    for (size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // pivot: smallest |entry|, ties by lowest (row, col)
            bool found = false;
            size_t pi = 0, pj = 0;
            Integer best;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j) {
                    const Integer &e = S(i, j);
                    if (e == 0)
                        continue;
                    Integer a = e < 0 ? Integer(-e) : e;
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                return;
            S.swap_rows(t, pi);
            if (U)
                U->swap_rows(t, pi);
            S.swap_cols(t, pj);
            if (V)
                V->swap_cols(t, pj);

            bool dirty = false;
            for (size_t i = t + 1; i < r; ++i) {
                if (S(i, t) == 0)
                    continue;
                Integer q = S(i, t) / S(t, t);
                S.add_row(i, t, -q);
                if (U)
                    U->add_row(i, t, -q);
                if (S(i, t) != 0)
                    dirty = true;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (S(t, j) == 0)
                    continue;
                Integer q = S(t, j) / S(t, t);
                S.add_col(j, t, -q);
                if (V)
                    V->add_col(j, t, -q);
                if (S(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;
            // divisibility: fold an offending row into row t
            bool fixed = false;
            for (size_t i = t + 1; i < r && !fixed; ++i)
                for (size_t j = t + 1; j < c; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.add_row(t, i, 1);
                        if (U)
                            U->add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            if (U)
                U->negate_row(t);
        }
    }
}

} // namespace detail

inline SmithForm smith_normal_form(const IntMatrix &M) {
    SmithForm f{IntMatrix::identity(M.rows()), M,
                IntMatrix::identity(M.cols())};
    detail::smith_reduce(f.S, &f.U, &f.V);
    return f;
}

// diagonal only (no transforms)
inline std::vector<Integer> elementary_divisors(const IntMatrix &M) {
    IntMatrix S = M;
    detail::smith_reduce(S, nullptr, nullptr);
    std::vector<Integer> d;
    for (size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        d.push_back(S(i, i));
    return d;
}

// Inverse of a unimodular matrix via its own Smith form.
inline IntMatrix unimodular_inverse(const IntMatrix &U) {
    SmithForm f = smith_normal_form(U);
    // f.U * U * f.V = I  =>  U^{-1} = f.V * f.U
    for (size_t i = 0; i < f.S.rows(); ++i)
        if (f.S(i, i) != 1)
            throw std::invalid_argument("matrix is not unimodular");
    return f.V * f.U;
}

// Integer kernel basis (columns) of M: from M V = U^{-1} S.
inline IntMatrix integer_kernel(const IntMatrix &M) {
    SmithForm f = smith_normal_form(M);
    size_t rk = f.rank();
    IntMatrix K(M.cols(), M.cols() - rk);
    for (size_t j = rk; j < M.cols(); ++j)
        for (size_t i = 0; i < M.cols(); ++i)
            K(i, j - rk) = f.V(i, j);
    return K;
}

// Solve M x = b over Z; returns false when no integer solution exists.
inline bool integer_solve(const IntMatrix &M, const std::vector<Integer> &b,
                          std::vector<Integer> &x) {
    SmithForm f = smith_normal_form(M);
    std::vector<Integer> ub = f.U * b;
    std::vector<Integer> y(M.cols());
    size_t n = std::min(M.rows(), M.cols());
    for (size_t i = 0; i < M.rows(); ++i) {
        Integer d = i < n ? f.S(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0)
                return false;
            continue;
        }
        if (ub[i] % d != 0)
            return false;
        y[i] = ub[i] / d;
    }
    x = f.V * y;
    return true;
}

} // namespace moncoh
