#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moncoh {

using Integer = boost::multiprecision::cpp_int;

struct Xgcd {
    Integer g, s, t; // s*a + t*b = g >= 0
};

inline Xgcd xgcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer r = a - q * b;
        a = b;
        b = r;
        Integer s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

inline Integer gcd(const Integer &a, const Integer &b) {
    return xgcd(a, b).g;
}

inline Integer lcm(const Integer &a, const Integer &b) {
    if (a == 0 || b == 0)
        return 0;
    Integer g = gcd(a, b);
    Integer r = a / g * b;
    return r < 0 ? Integer(-r) : r;
}

// representative in [0, |m|); m == 0 leaves a unchanged
inline Integer mod_floor(const Integer &a, const Integer &m) {
    if (m == 0)
        return a;
    Integer mm = m < 0 ? Integer(-m) : m;
    Integer r = a % mm;
    if (r < 0)
        r += mm;
    return r;
}

inline long long to_ll(const Integer &a) {
    if (a > Integer(INT64_MAX) || a < Integer(INT64_MIN))
        throw std::overflow_error("integer does not fit into 64 bits");
    return static_cast<long long>(a);
}

inline std::string to_string(const Integer &a) { return a.str(); }

// 64-bit helpers for the modular engine

inline int64_t mod64(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t mulmod64(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

inline int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b) {
        int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// s*a + t*b = g >= 0
inline int64_t xgcd64(int64_t a, int64_t b, int64_t &s, int64_t &t) {
    int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        int64_t q = a / b;
        int64_t r = a - q * b;
        a = b;
        b = r;
        int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cochain value overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cochain value overflow");
    return r;
}

} // namespace moncoh
