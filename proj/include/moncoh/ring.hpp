#pragma once

#include "integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace moncoh::lin {

// Coefficient rings for the sparse engine. A "modulus" d passed to the
// value-level helpers means: work in Z/d, where d divides the ring
// characteristic; d == 0 always means the ring itself.

// Z/m with m >= 2 fitting in 31 bits.
struct ModRing {
    using S = int64_t;
    int64_t m;

    explicit ModRing(int64_t mod) : m(mod) {}
    Integer characteristic() const { return m; }
    bool is_field() const {
        if (m < 2)
            return false;
        for (int64_t p = 2; p * p <= m; ++p)
            if (m % p == 0)
                return false;
        return true;
    }

    S zero() const { return 0; }
    S one() const { return 1 % m; }
    S from_integer(const Integer &a) const { return static_cast<S>(mod_floor(a, m)); }
    S from_ll(long long a) const { return mod64(a, m); }
    Integer to_integer(S a) const { return a; }
    bool is_zero(S a) const { return a == 0; }
    S add(S a, S b) const { S r = a + b; return r >= m ? r - m : r; }
    S sub(S a, S b) const { S r = a - b; return r < 0 ? r + m : r; }
    S neg(S a) const { return a ? m - a : 0; }
    S mul(S a, S b) const { return mulmod64(a, b, m); }

    int64_t eff(int64_t d) const { return d == 0 ? m : d; }
    S reduce(S a, int64_t d) const { return a % eff(d); }
    int64_t modulus_of(const Integer &d) const { return static_cast<int64_t>(d == 0 ? Integer(m) : d); }

    // q with q*a == b (mod d), if a | b there
    bool divides(S a, S b, int64_t d, S &q) const {
        d = eff(d);
        a %= d;
        b %= d;
        if (b == 0) {
            q = 0;
            return true;
        }
        if (a == 0)
            return false;
        int64_t s, t;
        int64_t g = xgcd64(a, d, s, t); // s*a == g (mod d)
        if (b % g)
            return false;
        q = mulmod64(mod64(s, d), b / g, d);
        return true;
    }
    // a "size" for pivot choice: smaller is closer to a unit
    Integer weight(S a, int64_t d) const { return gcd64(a, eff(d)); }
    // unimodular [[s,t],[u,w]]: s*a + t*b = g, u*a + w*b == 0 (mod d)
    void bezout(S a, S b, int64_t d, S &s, S &t, S &u, S &w, S &g) const {
        int64_t ss, tt;
        int64_t gg = xgcd64(a, b, ss, tt);
        s = mod64(ss, m);
        t = mod64(tt, m);
        u = mod64(b / gg, m);
        w = mod64(-(a / gg), m);
        g = gg % eff(d);
        (void)d;
    }
    // multiplier mu with {c : c*g == 0 mod d} = mu*R; returns false if mu*x == 0 always
    bool annihilator(S g, int64_t d, S &mu) const {
        d = eff(d);
        int64_t mu0 = d / gcd64(g % d, d);
        mu = mu0 % m;
        return mu != 0;
    }
};

// The integers.
struct ZRing {
    using S = Integer;

    Integer characteristic() const { return 0; }
    bool is_field() const { return false; }
    S zero() const { return 0; }
    S one() const { return 1; }
    S from_integer(const Integer &a) const { return a; }
    S from_ll(long long a) const { return a; }
    Integer to_integer(const S &a) const { return a; }
    bool is_zero(const S &a) const { return a == 0; }
    S add(const S &a, const S &b) const { return a + b; }
    S sub(const S &a, const S &b) const { return a - b; }
    S neg(const S &a) const { return -a; }
    S mul(const S &a, const S &b) const { return a * b; }

    Integer modulus_of(const Integer &d) const { return d; }
    S reduce(const S &a, const Integer &d) const { return d == 0 ? a : mod_floor(a, d); }

    bool divides(const S &a0, const S &b0, const Integer &d, S &q) const {
        S a = reduce(a0, d), b = reduce(b0, d);
        if (b == 0) {
            q = 0;
            return true;
        }
        if (a == 0)
            return false;
        if (d == 0) {
            if (b % a != 0)
                return false;
            q = b / a;
            return true;
        }
        Xgcd x = xgcd(a, d);
        if (b % x.g != 0)
            return false;
        q = mod_floor(x.s * (b / x.g), d);
        return true;
    }
    Integer weight(const S &a, const Integer &d) const {
        if (d == 0)
            return a < 0 ? Integer(-a) : a;
        return gcd(a, d);
    }
    void bezout(const S &a, const S &b, const Integer &d, S &s, S &t, S &u, S &w,
                S &g) const {
        Xgcd x = xgcd(a, b);
        s = x.s;
        t = x.t;
        u = b / x.g;
        w = -(a / x.g);
        g = reduce(x.g, d);
    }
    bool annihilator(const S &g, const Integer &d, S &mu) const {
        if (d == 0)
            return false;
        mu = d / gcd(reduce(g, d), d);
        return true;
    }
};

} // namespace moncoh::lin
