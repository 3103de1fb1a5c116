#pragma once
// Small helpers shared by the unit tests.
#include "catch_amalgamated.hpp"

#include "moncoh/moncoh.hpp"

#include <functional>
#include <numeric>

namespace moncoh::testing {

inline ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidInput;
}

inline Elem by_name(const FiniteMonoid &M, const std::string &n) {
    auto e = M.find(n);
    REQUIRE(e);
    return *e;
}

inline std::vector<Elem> all_elements(const FiniteMonoid &M) {
    std::vector<Elem> v(M.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// even permutations of a symmetric group
inline std::vector<Elem> alternating(const FiniteMonoid &S) {
    std::vector<Elem> v;
    for (Elem g = 0; g < S.size(); ++g)
        if (permutation_sign(S, g) == 1)
            v.push_back(g);
    return v;
}

} // namespace moncoh::testing
