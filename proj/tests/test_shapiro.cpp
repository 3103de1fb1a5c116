#include "test_util.hpp"

using namespace moncoh;
using namespace moncoh::testing;

namespace {

ShapiroContext s3_over_a3() {
    FiniteMonoid S3 = symmetric_group(3);
    auto A3 = alternating(S3);
    SubgroupMonoid sub = subgroup_monoid(S3, A3);
    // A3 acts on Z/3^2 unipotently through a generator
    GModule A = GModule::from_function(sub.H, {3, 3}, [&](Elem h) {
        int k = 0;
        for (Elem p = sub.H.identity(); p != h; p = sub.H.mul(p, 1))
            ++k;
        return Mat64{{1, k}, {0, 1}};
    });
    return shapiro_context(S3, A3, A);
}

// _H(x) found by searching H, independent of the stored map
Elem h_part(const ShapiroContext &S, Elem x) {
    const FiniteMonoid &G = S.G;
    for (Elem s : S.I.reps.transversal)
        for (Elem h : S.I.sub.embed)
            if (G.mul(h, s) == x)
                return h;
    FAIL("no coset");
    return 0;
}

Cochain lhs_homotopy(const ShapiroContext &S, const Cochain &f) {
    const GModule &I = S.ind();
    Cochain k = shapiro_kappa(S, coboundary(I, f));
    if (f.degree > 0)
        k = cochain_add(I, k, coboundary(I, shapiro_kappa(S, f)));
    return k;
}

} // namespace

TEST_CASE("alpha evaluates at the identity") {
    ShapiroContext S = s3_over_a3();
    CounterRng rng(2);
    Cochain F = random_cochain(S.ind(), 0, true, rng);
    Cochain a = shapiro_alpha(S, F);
    CHECK(a.value(0) == S.I.value_at(F.at(size_t(0)), S.G.identity()));
    CHECK(shapiro_alpha(S, zero_cochain(S.ind(), 2)).is_zero());
    // C2 over the trivial subgroup
    FiniteMonoid C2 = cyclic_group(2);
    ShapiroContext T = shapiro_context(C2, {C2.identity()}, GModule::trivial(trivial_monoid(), {5}));
    for (size_t n = 0; n <= 2; ++n) {
        Cochain f = random_cochain(T.ind(), n, false, rng);
        Cochain af = shapiro_alpha(T, f);
        std::vector<Elem> ones(n, C2.identity());
        // identity coset sits in the first block
        CHECK(af.value(0) == Vec64{f.at(ones.data())[0]});
    }
}

TEST_CASE("beta against a direct transcription") {
    ShapiroContext S = s3_over_a3();
    const FiniteMonoid &G = S.G;
    CounterRng rng(8);
    CHECK(shapiro_beta(S, zero_cochain(S.A(), 2)).is_zero());
    for (int t = 0; t < 4; ++t) {
        Cochain f = random_cochain(S.A(), 1, true, rng);
        Cochain b = shapiro_beta(S, f);
        size_t pairs = 0;
        for (Elem g = 0; g < 6; ++g)
            for (Elem x = 0; x < 6; ++x) {
                Elem hx = h_part(S, x), hxg = h_part(S, G.mul(x, g));
                Elem arg = S.to_H(G.mul(G.inv(hx), hxg));
                Vec64 want = S.A().act(S.to_H(hx), f.value(arg));
                CHECK(S.I.value_at(b.at(size_t(g)), x) == want);
                ++pairs;
            }
        CHECK(pairs == 36);
    }
}

TEST_CASE("Shapiro maps are chain maps and alpha beta = id") {
    ShapiroContext S = s3_over_a3();
    CounterRng rng(13);
    for (size_t n = 0; n <= 2; ++n)
        for (int t = 0; t < 3; ++t) {
            Cochain f = random_cochain(S.ind(), n, true, rng);
            CHECK(coboundary(S.A(), shapiro_alpha(S, f)) == shapiro_alpha(S, coboundary(S.ind(), f)));
            Cochain u = random_cochain(S.A(), n, true, rng);
            Cochain bu = shapiro_beta(S, u);
            CHECK(is_normalised(S.ind(), bu));
            CHECK(coboundary(S.ind(), bu) == shapiro_beta(S, coboundary(S.A(), u)));
            CHECK(shapiro_alpha(S, bu) == u);
        }
}

TEST_CASE("kappa in degree one vanishes on H") {
    ShapiroContext S = s3_over_a3();
    CounterRng rng(6);
    for (int t = 0; t < 5; ++t) {
        Cochain f = random_cochain(S.ind(), 1, true, rng);
        Cochain k = shapiro_kappa(S, f);
        for (Elem h : S.I.sub.embed)
            CHECK(S.I.value_at(k.at(size_t(0)), h) == Vec64{0, 0});
    }
    CHECK(shapiro_kappa(S, zero_cochain(S.ind(), 2)).is_zero());
}

TEST_CASE("kappa is a homotopy between beta alpha and the identity") {
    std::vector<ShapiroContext> cases = {s3_over_a3()};
    FiniteMonoid S3 = symmetric_group(3);
    Elem t = by_name(S3, "(12)");
    SubgroupMonoid sub = subgroup_monoid(S3, {S3.identity(), t});
    cases.push_back(shapiro_context(S3, {S3.identity(), t}, GModule::from_function(sub.H, {0}, [&](Elem h) {
                                        return Mat64{{h == sub.H.identity() ? 1 : -1}};
                                    })));
    CounterRng rng(31);
    for (auto &S : cases)
        for (size_t n = 0; n <= 2; ++n)
            for (int k = 0; k < 3; ++k) {
                Cochain f = random_cochain(S.ind(), n, true, rng);
                Cochain want = cochain_sub(S.ind(), shapiro_beta(S, shapiro_alpha(S, f)), f);
                CHECK(lhs_homotopy(S, f) == want);
            }
}

TEST_CASE("cohomology of the induced module") {
    ShapiroContext S = s3_over_a3();
    ShapiroIsoReport r = shapiro_iso_report(S, 3);
    CHECK(r.agree);
    CHECK(r.alpha_iso);
    FiniteMonoid C2 = cyclic_group(2);
    ShapiroContext T = shapiro_context(C2, {C2.identity()}, GModule::trivial(trivial_monoid(), {0}));
    ShapiroIsoReport q = shapiro_iso_report(T, 3);
    CHECK(q.agree);
    CHECK(q.ind_side[0].str() == "Z");
    for (size_t n = 1; n <= 3; ++n)
        CHECK(q.ind_side[n].trivial());
    CHECK(kind_of([] { shapiro_context(z2_multiplicative(), {1}, GModule::trivial(trivial_monoid(), {2})); }) ==
          ErrorKind::MonoidPartPresent);
}
