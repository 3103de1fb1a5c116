#include "catch_amalgamated.hpp"

#include "moncoh/abelian.hpp"
#include "moncoh/complex.hpp"
#include "moncoh/rng.hpp"

using namespace moncoh;

namespace {

IntMatrix random_matrix(CounterRng &rng, size_t r, size_t c, int lo, int hi) {
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m(i, j) = lo + static_cast<int>(rng.below(hi - lo + 1));
    return m;
}

void check_smith(const IntMatrix &M) {
    SmithForm f = smith_normal_form(M);
    REQUIRE(f.U * M * f.V == f.S);
    REQUIRE(abs(determinant(f.U)) == 1);
    REQUIRE(abs(determinant(f.V)) == 1);
    for (size_t i = 0; i < f.S.rows(); ++i)
        for (size_t j = 0; j < f.S.cols(); ++j)
            if (i != j)
                REQUIRE(f.S(i, j) == 0);
    auto d = f.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        REQUIRE(d[i] >= 0);
        if (d[i] == 0)
            REQUIRE(d[i + 1] == 0);
        else
            REQUIRE(d[i + 1] % d[i] == 0);
    }
}

AbHom zmap(const std::vector<Integer> &src, const std::vector<Integer> &dst, IntMatrix m) {
    return AbHom(FgAbelianGroup::cyclic_sum(src), FgAbelianGroup::cyclic_sum(dst), std::move(m));
}

} // namespace

TEST_CASE("smith form of the zero and identity matrices") {
    SmithForm z = smith_normal_form(IntMatrix{{0}});
    CHECK(z.S == IntMatrix{{0}});
    CHECK(z.U == IntMatrix{{1}});
    CHECK(z.V == IntMatrix{{1}});
    for (size_t n : {1, 3, 5})
        CHECK(smith_normal_form(IntMatrix::identity(n)).S == IntMatrix::identity(n));
}

TEST_CASE("smith form of [[2,4],[6,8]] is diag(2,4)") {
    IntMatrix M{{2, 4}, {6, 8}};
    SmithForm f = smith_normal_form(M);
    CHECK(f.S == IntMatrix{{2, 0}, {0, 4}});
    check_smith(M);
}

TEST_CASE("smith form on random rectangular matrices") {
    CounterRng rng(11);
    for (int t = 0; t < 60; ++t) {
        size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        check_smith(random_matrix(rng, r, c, -9, 9));
    }
    // entries that overflow 64 bits
    IntMatrix big(2, 2);
    big(0, 0) = Integer("123456789012345678901234567890");
    big(0, 1) = Integer("987654321098765432109876543210");
    big(1, 0) = 17;
    big(1, 1) = Integer("-44444444444444444444444444");
    check_smith(big);
}

TEST_CASE("canonical forms of small presentations") {
    CHECK(FgAbelianGroup::free(2).canonical().free_rank == 2);
    CHECK(FgAbelianGroup::free(2).canonical().invariant_factors.empty());
    auto z2 = FgAbelianGroup(1, IntMatrix{{2}}).canonical();
    CHECK(z2.free_rank == 0);
    CHECK(z2.invariant_factors == std::vector<Integer>{2});
    auto g = FgAbelianGroup(2, IntMatrix{{2, 0}, {0, 4}}).canonical();
    CHECK(g.invariant_factors == std::vector<Integer>{2, 4});
    // Z/2 + Z/3 = Z/6
    CHECK(FgAbelianGroup(2, IntMatrix{{2, 0}, {0, 3}}).canonical().str() == "Z/6");
    CHECK(canonicalize(FgAbelianGroup(2, IntMatrix{{2, 0}, {0, 4}})).second == std::vector<Integer>{2, 4});
}

TEST_CASE("canonical form ignores generator order and redundant relations") {
    CounterRng rng(5);
    for (int t = 0; t < 30; ++t) {
        size_t n = 1 + rng.below(4), m = rng.below(5);
        IntMatrix R = random_matrix(rng, n, m, -6, 6);
        CanonicalForm c = FgAbelianGroup(n, R).canonical();
        // reverse generator order
        IntMatrix P(n, m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j)
                P(n - 1 - i, j) = R(i, j);
        CHECK(FgAbelianGroup(n, P).canonical() == c);
        // append a combination of existing relations
        if (m > 0) {
            std::vector<Integer> w(m);
            for (auto &x : w)
                x = static_cast<int>(rng.below(7)) - 3;
            IntMatrix extra = IntMatrix::from_columns(n, {R * w});
            CHECK(FgAbelianGroup(n, R.hcat(extra)).canonical() == c);
        }
    }
}

TEST_CASE("homology of short complexes") {
    // Z -2-> Z -> 0
    auto h = homology_at(zmap({0}, {0}, IntMatrix{{2}}), zmap({0}, {}, IntMatrix(0, 1)));
    CHECK(h.canonical().str() == "Z/2");
    // 0 -> Z -> 0
    auto z = homology_at(zmap({}, {0}, IntMatrix(1, 0)), zmap({0}, {}, IntMatrix(0, 1)));
    CHECK(z.canonical().str() == "Z");
    // both maps zero: the middle group
    auto mid = homology_at(zmap({0}, {0, 6}, IntMatrix(2, 1)), zmap({0, 6}, {3}, IntMatrix(1, 2)));
    CHECK(mid.canonical() == FgAbelianGroup::cyclic_sum({0, 6}).canonical());
    CHECK_THROWS_AS(homology_at(zmap({0}, {0}, IntMatrix{{1}}), zmap({0}, {0}, IntMatrix{{1}})), Error);
    try {
        homology_at(zmap({0}, {0}, IntMatrix{{1}}), zmap({0}, {0}, IntMatrix{{1}}));
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::CompositionNotZero);
    }
}

TEST_CASE("bar complex of C2 with trivial Z has H^2 = Z/2") {
    // brute-force inhomogeneous complex over Z[C2]: C^n = Z^{2^n}
    auto mul = [](int a, int b) { return (a + b) % 2; };
    auto d = [&](size_t n) {
        const size_t src = 1u << n, dst = 1u << (n + 1);
        IntMatrix m(dst, src);
        for (size_t t = 0; t < dst; ++t) {
            std::vector<int> g(n + 1);
            for (size_t i = 0; i <= n; ++i)
                g[i] = (t >> (n - i)) & 1;
            auto idx = [&](const std::vector<int> &v) {
                size_t k = 0;
                for (int x : v)
                    k = 2 * k + x;
                return k;
            };
            std::vector<int> s(g.begin() + 1, g.end());
            m(t, idx(s)) += 1;
            for (size_t i = 1; i <= n; ++i) {
                std::vector<int> u;
                for (size_t k = 0; k + 1 < i; ++k)
                    u.push_back(g[k]);
                u.push_back(mul(g[i - 1], g[i]));
                for (size_t k = i + 1; k <= n; ++k)
                    u.push_back(g[k]);
                m(t, idx(u)) += (i % 2) ? -1 : 1;
            }
            std::vector<int> l(g.begin(), g.end() - 1);
            m(t, idx(l)) += ((n + 1) % 2) ? -1 : 1;
        }
        return m;
    };
    auto Zn = [](size_t n) { return FgAbelianGroup::free(1u << n); };
    CHECK(homology_at(AbHom(Zn(1), Zn(2), d(1)), AbHom(Zn(2), Zn(3), d(2))).canonical().str() == "Z/2");
    CHECK(homology_at(AbHom(Zn(0), Zn(1), d(0)), AbHom(Zn(1), Zn(2), d(1))).canonical().trivial());
    CHECK(homology_at(AbHom(Zn(2), Zn(3), d(2)), AbHom(Zn(3), Zn(4), d(3))).canonical().trivial());
}

TEST_CASE("subquotients of lattices") {
    FgAbelianGroup Z = FgAbelianGroup::free(1);
    CHECK(subquotient(Z, IntMatrix{{2}}, IntMatrix{{4}}).canonical().str() == "Z/2");
    CHECK(subquotient(Z, IntMatrix{{3}}, IntMatrix{{3}}).canonical().trivial());
    try {
        subquotient(Z, IntMatrix{{4}}, IntMatrix{{2}});
        FAIL("expected NotContained");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotContained);
    }
    CounterRng rng(17);
    FgAbelianGroup Z3 = FgAbelianGroup::free(3);
    int done = 0;
    while (done < 25) {
        IntMatrix A = random_matrix(rng, 3, 3, -4, 4), B = random_matrix(rng, 3, 3, -3, 3);
        Integer da = determinant(A), db = determinant(B);
        if (da == 0 || db == 0)
            continue;
        ++done;
        // span(A B) inside span(A): index |det B|
        auto sq = dense_subquotient(Z3, A, A * B);
        CHECK(sq.group.canonical().order() == abs(db));
        // lifts land in the numerator and have the stated orders
        for (size_t k = 0; k < sq.lifts.size(); ++k) {
            auto c = sq.coordinates(sq.lifts[k]);
            for (size_t i = 0; i < c.size(); ++i)
                CHECK(c[i] == (i == k ? Integer(1) % sq.orders[i] : Integer(0)));
        }
    }
}

TEST_CASE("homology of a cochain complex agrees across the Z and field routes") {
    // Z^2 -[[1,1],[1,1]]-> Z^2 -[[1,-1]]-> Z
    for (int64_t ring : {0, 2, 3}) {
        LinComplex cx;
        cx.ring_modulus = ring;
        cx.moduli = {std::vector<int64_t>(2, ring), std::vector<int64_t>(2, ring), std::vector<int64_t>(1, ring)};
        SparseMap d0(2, 2), d1(2, 1);
        d0.rows = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
        d1.rows = {{{0, 1}, {1, -1}}};
        cx.d = {d0, d1};
        Homology h = Homology::compute(cx, 1, true);
        CHECK(h.canonical().trivial());
        Homology h0 = Homology::compute(cx, 0, true);
        if (ring == 2)
            CHECK(h0.canonical().str() == "Z/2");
        else
            CHECK(h0.canonical().free_rank + h0.canonical().invariant_factors.size() == 1);
        if (ring)
            CHECK(Homology::compute(cx, 0, false).canonical() == h0.canonical());
        // H^2 = coker d1
        CHECK(Homology::compute(cx, 2, true).canonical().trivial());
    }
}
