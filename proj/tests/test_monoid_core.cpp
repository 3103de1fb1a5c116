#include "test_util.hpp"

using namespace moncoh;
using namespace moncoh::testing;

namespace {

std::vector<Elem> even_part(const SetupMonoid &G) {
    std::vector<Elem> U;
    for (Elem g = 0; g < G.size(); ++g) {
        bool in = permutation_sign(G.factor(0), G.component(g, 0)) == 1;
        for (size_t i = 1; i < G.factor_count(); ++i)
            in = in && G.component(g, i) == G.factor(i).identity();
        if (in)
            U.push_back(g);
    }
    return U;
}

void check_quotient_invariants(const QuotientData &Q) {
    const SetupMonoid &G = Q.ambient;
    const FiniteMonoid &M = G.product();
    REQUIRE(Q.section[Q.quotient.identity()] == M.identity());
    for (Elem a = 0; a < Q.quotient.size(); ++a)
        CHECK(Q.proj[Q.section[a]] == a);
    for (Elem x = 0; x < M.size(); ++x) {
        CHECK(Q.in_N(Q.nu[x]));
        CHECK(Q.star[Q.star[x]] == Q.star[x]);
        CHECK(Q.nu[Q.star[x]] == M.identity());
        if (G.in_group_part(x))
            CHECK(M.mul(Q.star[x], Q.nu[x]) == x);
        if (Q.in_N(x))
            CHECK(Q.nu[x] == x);
        for (Elem y = 0; y < M.size(); ++y)
            CHECK(Q.proj[M.mul(x, y)] == Q.quotient.mul(Q.proj[x], Q.proj[y]));
    }
}

} // namespace

TEST_CASE("build_monoid validates tables") {
    FiniteMonoid t = build_monoid({{0}}, 0);
    CHECK(t.size() == 1);
    CHECK(t.is_group());
    FiniteMonoid m = z2_multiplicative();
    CHECK(m.is_commutative());
    CHECK_FALSE(m.is_group());
    CHECK(m.name(m.identity()) == "1");
    CHECK(m.mul(by_name(m, "0"), by_name(m, "1")) == by_name(m, "0"));
    // corrupt one cell of C3: 1*1 -> 0 breaks associativity
    auto tab = cyclic_group(3).table();
    std::vector<std::vector<size_t>> bad(3, std::vector<size_t>(3));
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
            bad[a][b] = tab[a][b];
    bad[1][1] = 0;
    CHECK(kind_of([&] { build_monoid(bad, 0); }) == ErrorKind::NotAssociative);
    try {
        build_monoid(bad, 0);
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("witness") != std::string::npos);
    }
    CHECK(kind_of([&] { build_monoid({{0, 0}, {0, 1}}, 0); }) == ErrorKind::NotIdentity);
}

TEST_CASE("direct products") {
    SetupMonoid c2 = direct_product({cyclic_group(2)});
    CHECK(c2.size() == 2);
    CHECK(c2.monoid_parts().empty());
    SetupMonoid cm = direct_product({cyclic_group(2), z2_multiplicative()});
    CHECK(cm.size() == 4);
    CHECK_FALSE(cm.is_group());
    size_t invertible = 0;
    for (Elem x = 0; x < cm.size(); ++x)
        invertible += cm.product().inverse(x).has_value();
    CHECK(invertible == 2);
    SetupMonoid s3 = direct_product({symmetric_group(3), trivial_monoid()});
    CHECK(s3.size() == 6);
    FiniteMonoid S3 = symmetric_group(3);
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b)
            CHECK(s3.product().mul(a, b) == S3.mul(a, b));
    CHECK(kind_of([] { direct_product({z2_multiplicative()}); }) == ErrorKind::FirstFactorNotGroup);
    CHECK(kind_of([] { direct_product({cyclic_group(2), symmetric_group(3)}); }) == ErrorKind::FactorNotCommutative);
}

TEST_CASE("quotients and sections") {
    SetupMonoid S3 = as_setup(symmetric_group(3));
    std::vector<Elem> all(6);
    std::iota(all.begin(), all.end(), 0);
    QuotientData top = quotient_with_section(S3, all);
    CHECK(top.quotient.size() == 1);
    for (Elem x = 0; x < 6; ++x) {
        CHECK(top.star[x] == S3.identity());
        CHECK(top.nu[x] == x);
    }
    QuotientData bottom = quotient_with_section(S3, {S3.identity()});
    CHECK(bottom.quotient.size() == 6);
    for (Elem x = 0; x < 6; ++x)
        CHECK(bottom.nu[x] == S3.identity());
    auto A3 = even_part(S3);
    Elem t12 = by_name(S3.product(), "(12)");
    QuotientData q = quotient_with_section(S3, A3, {S3.identity(), t12});
    CHECK(q.quotient.size() == 2);
    CHECK(q.section[1 - q.quotient.identity()] == t12);
    for (auto *Q : {&top, &bottom, &q})
        check_quotient_invariants(*Q);
    // default policy: least index per coset
    QuotientData d = quotient_with_section(S3, A3);
    for (Elem a = 0; a < d.quotient.size(); ++a)
        for (Elem x = 0; x < 6; ++x)
            if (d.proj[x] == a)
                CHECK(d.section[a] <= x);
}

TEST_CASE("quotient errors") {
    SetupMonoid S3 = as_setup(symmetric_group(3));
    Elem t12 = by_name(S3.product(), "(12)");
    CHECK(kind_of([&] { quotient_with_section(S3, {S3.identity(), t12}); }) == ErrorKind::NotNormal);
    auto A3 = even_part(S3);
    Elem c = by_name(S3.product(), "(123)");
    // two representatives of one coset
    CHECK(kind_of([&] { quotient_with_section(S3, A3, {S3.identity(), c}); }) == ErrorKind::BadSection);
    // identity not chosen
    Elem t13 = by_name(S3.product(), "(13)");
    CHECK(kind_of([&] { quotient_with_section(S3, A3, {c, t13}); }) == ErrorKind::BadSection);
}

TEST_CASE("quotients with monoid parts") {
    SetupMonoid G({symmetric_group(3)}, {z2_multiplicative()});
    auto U = even_part(G);
    QuotientData Q = quotient_with_section(G, U);
    CHECK(Q.quotient.size() == 4);
    check_quotient_invariants(Q);
    // nu is constant 1 on the monoid factor outside N
    for (Elem x = 0; x < G.size(); ++x)
        CHECK(G.component(Q.nu[x], 1) == G.factor(1).identity());
    // N = A3 x (Z/2,.)
    std::vector<Elem> N;
    for (Elem x = 0; x < G.size(); ++x)
        if (permutation_sign(G.factor(0), G.component(x, 0)) == 1)
            N.push_back(x);
    QuotientData Q2 = quotient_with_section(G, N);
    CHECK(Q2.quotient.size() == 2);
    check_quotient_invariants(Q2);
    for (Elem x = 0; x < G.size(); ++x)
        CHECK(G.component(Q2.nu[x], 1) == G.component(x, 1));
}

TEST_CASE("coset representative maps") {
    FiniteMonoid S3 = symmetric_group(3);
    std::vector<Elem> all(6);
    std::iota(all.begin(), all.end(), 0);
    CosetRepMap whole = coset_rep_map(S3, all);
    for (Elem g = 0; g < 6; ++g)
        CHECK(whole.rep[g] == g);
    CosetRepMap one = coset_rep_map(S3, {S3.identity()});
    for (Elem g = 0; g < 6; ++g)
        CHECK(one.rep[g] == S3.identity());
    std::vector<Elem> A3;
    for (Elem g = 0; g < 6; ++g)
        if (permutation_sign(S3, g) == 1)
            A3.push_back(g);
    CosetRepMap C = coset_rep_map(S3, A3);
    CHECK(C.index() == 2);
    size_t pairs = 0;
    for (Elem g = 0; g < 6; ++g) {
        CHECK(C.in_sub[C.rep[g]]);
        CHECK(C.rep[g] == S3.mul(g, S3.inv(C.transversal[C.coset[g]])));
        for (Elem h : A3) {
            CHECK(C.rep[S3.mul(h, g)] == S3.mul(h, C.rep[g]));
            ++pairs;
        }
    }
    CHECK(pairs == 18);
    CHECK(kind_of([&] { coset_rep_map(S3, {S3.identity(), by_name(S3, "(12)"), by_name(S3, "(13)")}); }) ==
          ErrorKind::NotSubgroup);
}

TEST_CASE("conjugation convention") {
    SetupMonoid G({symmetric_group(3)}, {z2_multiplicative()});
    const FiniteMonoid &M = G.product();
    for (Elem y = 0; y < M.size(); ++y)
        CHECK(conjugate_by(G, M.identity(), y) == y);
    Elem x = by_name(M, "((12),0)"), y = by_name(M, "((123),0)");
    CHECK(M.name(conjugate_by(G, x, y)) == "((132),0)");
    // x need not be invertible; monoid parts are untouched and the map is an endomorphism
    for (Elem a = 0; a < M.size(); ++a)
        for (Elem b = 0; b < M.size(); ++b) {
            CHECK(G.component(conjugate_by(G, a, b), 1) == G.component(b, 1));
            for (Elem c = 0; c < M.size(); ++c)
                CHECK(conjugate_by(G, a, M.mul(b, c)) == M.mul(conjugate_by(G, a, b), conjugate_by(G, a, c)));
        }
    // central y in C2 x (Z/2,.)
    SetupMonoid H({cyclic_group(2)}, {z2_multiplicative()});
    for (Elem a = 0; a < H.size(); ++a)
        for (Elem b = 0; b < H.size(); ++b)
            CHECK(conjugate_by(H, a, b) == b);
}
