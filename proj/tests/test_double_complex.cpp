#include "test_util.hpp"

using namespace moncoh;
using namespace moncoh::testing;

namespace {

// module over D x G pulled back from a module over G along the projection
GModule from_g(const ProductSetup &P, const GModule &B) { return B.pullback(P.M(), P.projG); }

std::vector<CanonicalForm> tot_groups(const DoubleComplex &X) {
    std::vector<CanonicalForm> out;
    for (size_t n = 0; n <= X.n_max; ++n)
        out.push_back(Homology::compute(X.tot, n, true).canonical());
    return out;
}

bool all_zero(const Cochain &f) { return f.is_zero(); }

} // namespace

TEST_CASE("product setup embeddings and projections") {
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(symmetric_group(3)));
    const FiniteMonoid &M = P.M();
    CHECK(M.size() == 12);
    for (Elem d = 0; d < P.D.size(); ++d)
        for (Elem g = 0; g < P.G.size(); ++g) {
            Elem z = M.mul(P.embD[d], P.embG[g]);
            CHECK(P.projD[z] == d);
            CHECK(P.projG[z] == g);
            CHECK(M.mul(P.embG[g], P.embD[d]) == z);
            CHECK(P.star(z) == P.embD[d]);
            CHECK(P.part_G(z) == P.embG[g]);
        }
}

TEST_CASE("total complex with a trivial factor") {
    FiniteMonoid S3 = symmetric_group(3);
    GModule sg = GModule::from_function(S3, {0}, [&](Elem g) { return Mat64{{permutation_sign(S3, g)}}; });
    // D trivial: tot is the complex of G
    ProductSetup P = product_setup(trivial_monoid(), as_setup(S3));
    DoubleComplex X = build_double(trivial_monoid(), as_setup(S3), from_g(P, sg), 3);
    CHECK(tot_groups(X) == cohomology_groups(sg, 3, Variant::Normalised));
    for (size_t n = 0; n <= 3; ++n)
        CHECK(X.tot.dim(n) == ipow(5, n));
    // G trivial: tot is the complex of D
    FiniteMonoid D = z2_multiplicative();
    ProductSetup Q = product_setup(D, as_setup(trivial_monoid()));
    GModule AD = GModule::trivial(Q.M(), {0});
    DoubleComplex Y = build_double(D, as_setup(trivial_monoid()), AD, 3);
    CHECK(tot_groups(Y) == cohomology_groups(GModule::trivial(D, {0}), 3, Variant::Normalised));
    for (size_t n = 0; n <= 3; ++n)
        CHECK(Y.tot.dim(n) == 1);
}

TEST_CASE("total differential squares to zero") {
    FiniteMonoid C2 = cyclic_group(2);
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(C2));
    DoubleComplex X = build_double(z2_multiplicative(), as_setup(C2), GModule::trivial(P.M(), {2}), 3);
    CounterRng rng(31);
    for (size_t n = 0; n + 2 <= 4; ++n)
        for (int t = 0; t < 6; ++t) {
            TotalElement x = random_total(X, n, rng);
            CHECK(total_differential(X, total_differential(X, x)) == total_zero(X, n + 2));
        }
    // a nontrivial module with D acting: (Z/2,.) kills Z/4 through 2 times, C2 by -1
    GModule B = GModule::from_function(P.M(), {4}, [&](Elem z) {
        int64_t s = P.projG[z] == C2.identity() ? 1 : -1;
        int64_t d = P.projD[z] == P.D.identity() ? 1 : 0;
        return Mat64{{s * d}};
    });
    DoubleComplex Y = build_double(z2_multiplicative(), as_setup(C2), B, 3);
    for (size_t n = 0; n + 2 <= 4; ++n)
        for (int t = 0; t < 6; ++t) {
            TotalElement x = random_total(Y, n, rng);
            CHECK(total_differential(Y, total_differential(Y, x)) == total_zero(Y, n + 2));
            CHECK(total_to_vector(Y, total_differential(Y, x)) == Y.tot.differential(n, total_to_vector(Y, x)));
            CHECK(total_from_vector(Y, n, total_to_vector(Y, x)) == x);
        }
}

TEST_CASE("alpha and the sharp section") {
    FiniteMonoid C2 = cyclic_group(2);
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(C2));
    GModule A = GModule::from_function(P.M(), {0}, [&](Elem z) {
        return Mat64{{P.projG[z] == C2.identity() ? 1 : -1}};
    });
    DoubleComplex X = build_double(z2_multiplicative(), as_setup(C2), A, 3);
    CounterRng rng(8);
    // degree 0: the identity
    Cochain c = random_cochain(A, 0, true, rng);
    TotalElement a0 = alpha_total(X, c);
    REQUIRE(a0.blocks.size() == 1);
    CHECK(a0.blocks[0].inner[0].value(0) == c.value(0));
    for (size_t n = 0; n <= 2; ++n)
        for (size_t p = 0; p <= n; ++p) {
            Block u = random_block(X, p, n - p, rng);
            Cochain s = sharp(X, u);
            CHECK(is_normalised(A, s));
            // r_p(u#) = u and the other blocks vanish
            CHECK(restrict_double(X, s, p) == u);
            TotalElement e = total_zero(X, n);
            e.blocks[p] = u;
            CHECK(alpha_total(X, s) == e);
            CHECK(sharp_total(X, e) == s);
            // Delta alpha = alpha d
            Cochain f = random_cochain(A, n, true, rng);
            CHECK(total_differential(X, alpha_total(X, f)) == alpha_total(X, coboundary(A, f)));
        }
}

TEST_CASE("extension along zero") {
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(cyclic_group(3)));
    GModule A = GModule::trivial(P.M(), {3});
    DoubleComplex X = build_double(z2_multiplicative(), as_setup(cyclic_group(3)), A, 3);
    CounterRng rng(14);
    for (size_t n = 0; n <= 2; ++n)
        for (size_t p = 0; p <= n; ++p) {
            const size_t q = n - p;
            CHECK(all_zero(extend_zero(X, block_zero(X, p, q))));
            Block u = random_block(X, p, q, rng);
            Cochain g = extend_zero(X, u);
            CHECK(g == extend_zero_recursive(X, u));
            // a D-element among the first q arguments gives zero
            std::vector<Elem> z(n);
            for (size_t k = 0; k < g.tuples(); ++k) {
                decode_tuple(g.msize, k, z.data(), n);
                for (size_t i = 0; i < q; ++i)
                    if (P.part_G(z[i]) == P.M().identity())
                        CHECK(std::all_of(g.at(k), g.at(k) + g.comps, [](int64_t v) { return v == 0; }));
            }
            TotalElement e = total_zero(X, n);
            e.blocks[p] = u;
            CHECK(alpha_total(X, g) == e);
            // the coboundary splits along the two differentials
            Cochain lhs = coboundary(A, g);
            TotalElement de = total_differential(X, e);
            CHECK(lhs == extend_zero_total(X, de));
        }
    ResidualReport r = residual_report(X, 12, 5);
    CHECK(r.samples == 12);
    CHECK(r.residual_zero);
    CHECK(r.pairs_cancel);
    CHECK(r.sum_matches);
    CHECK(r.witness.empty());
}

TEST_CASE("pointwise identities of the double complex") {
    FiniteMonoid C2 = cyclic_group(2);
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(C2));
    DoubleComplex X = build_double(z2_multiplicative(), as_setup(C2), GModule::trivial(P.M(), {2}), 3);
    DoubleIdentityReport r = double_identity_report(X, 9, 2);
    CHECK(r.delta_squared);
    CHECK(r.partial_squared);
    CHECK(r.commute);
    CHECK(r.matrix_agrees);
    CHECK(r.section_identity);
    CHECK(r.alpha_chain_map);
    CHECK(r.extend_closed_form);
    CHECK(r.extend_vanishes_on_D);
    CHECK(r.extend_alpha);
    CHECK(r.witness.empty());
    // flipping one face of delta is detected once signs matter
    ProductSetup Q = product_setup(z2_multiplicative(), as_setup(C2));
    DoubleComplex Y = build_double(z2_multiplicative(), as_setup(C2), GModule::trivial(Q.M(), {3}), 3);
    CHECK(double_identity_report(Y, 9, 2).witness.empty());
    DoubleIdentityReport bad = double_identity_report(Y, 9, 2, 0);
    CHECK_FALSE(bad.witness.empty());
    CHECK_FALSE((bad.delta_squared && bad.matrix_agrees));
}

TEST_CASE("alpha is a quasi-isomorphism") {
    FiniteMonoid C2 = cyclic_group(2);
    ProductSetup P = product_setup(z2_multiplicative(), as_setup(C2));
    DoubleComplex X = build_double(z2_multiplicative(), as_setup(C2), GModule::trivial(P.M(), {2}), 3);
    QuasiIsoReport r = quasi_iso_report(X);
    CHECK(r.agree);
    CHECK(r.alpha_iso);
    CHECK(r.extension_preimages);
    CHECK(r.product_side == r.total_side);
    ProductSetup Q = product_setup(C2, as_setup(C2));
    DoubleComplex Y = build_double(C2, as_setup(C2), GModule::trivial(Q.M(), {4}), 3);
    QuasiIsoReport s = quasi_iso_report(Y);
    CHECK(s.agree);
    CHECK(s.alpha_iso);
    CHECK(s.extension_preimages);
    // H^1(C2 x C2, Z/4) = Hom(C2^2, Z/4)
    CHECK(s.product_side[1].str() == "Z/2^2");
}

TEST_CASE("mapping fiber") {
    FiniteMonoid C2 = cyclic_group(2);
    GModule Z = GModule::trivial(C2, {0});
    LinComplex C = cochain_complex(Z, 4, Variant::Normalised);
    LinComplex F = mapping_fiber(C, identity_maps(C));
    for (size_t n = 0; n <= 3; ++n) {
        CanonicalForm e = Homology::compute(C, n, false).canonical();
        if (n > 0)
            e = direct_sum(e, Homology::compute(C, n - 1, false).canonical());
        CHECK(Homology::compute(F, n, false).canonical() == e);
    }
    for (size_t r : {1, 2}) {
        FiberReport rep = mapping_fiber_report(GModule::trivial(C2, {2}), r, 3);
        CHECK(rep.agree);
        CHECK(rep.fiber == rep.expected);
    }
    // zero in degree 0, identity above: not a chain map since d0 != 0 mod the check
    GModule Z3 = GModule::trivial(cyclic_group(3), {3});
    LinComplex D = cochain_complex(Z3, 3, Variant::Full);
    auto phi = identity_maps(D);
    phi[0] = SparseMap(D.dim(0), D.dim(0));
    bool d0_nonzero = false;
    for (auto &row : D.d[0].rows)
        for (auto &e : row)
            d0_nonzero = d0_nonzero || e.second % 3 != 0;
    if (d0_nonzero)
        CHECK(kind_of([&] { mapping_fiber(D, phi); }) == ErrorKind::NotChainMap);
    // Z with sign on C2 has d0 = multiplication by -2 on the generator
    GModule sg = GModule::from_function(C2, {0}, [&](Elem g) { return Mat64{{g == C2.identity() ? 1 : -1}}; });
    LinComplex S = cochain_complex(sg, 3, Variant::Normalised);
    auto psi = identity_maps(S);
    psi[0] = SparseMap(S.dim(0), S.dim(0));
    CHECK(kind_of([&] { mapping_fiber(S, psi); }) == ErrorKind::NotChainMap);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
}

TEST_CASE("splitting for finite D acting trivially") {
    FiniteMonoid C2 = cyclic_group(2), C3 = cyclic_group(3);
    ProductSetup P = product_setup(C2, as_setup(C2));
    DoubleComplex X = build_double(C2, as_setup(C2), GModule::trivial(P.M(), {2}), 3);
    SplittingReport r = splitting_report(X);
    CHECK(r.agree);
    CHECK(r.tensor_commutes);
    ProductSetup Q = product_setup(C2, as_setup(C3));
    DoubleComplex Y = build_double(C2, as_setup(C3), GModule::trivial(Q.M(), {3}), 3);
    SplittingReport s = splitting_report(Y);
    CHECK(s.agree);
    CHECK(s.tensor_commutes);
    CHECK(s.product_side == s.split_side);
    // D acting by -1 on Z/3
    GModule B = GModule::from_function(Q.M(), {3}, [&](Elem z) {
        return Mat64{{Q.projD[z] == C2.identity() ? 1 : -1}};
    });
    DoubleComplex Z = build_double(C2, as_setup(C3), B, 2);
    CHECK(kind_of([&] { splitting_report(Z); }) == ErrorKind::ActionNotTrivial);
}

TEST_CASE("Shapiro for products with a monoid factor") {
    FiniteMonoid D = z2_multiplicative(), S3 = symmetric_group(3);
    std::vector<Elem> A3 = alternating(S3);
    SubgroupMonoid sub = subgroup_monoid(S3, A3);
    ProductSetup PH = product_setup(D, as_setup(sub.H));
    GModule A = GModule::trivial(PH.M(), {3});
    GModule Ind = induced_product_module(D, S3, A3, A);
    CHECK(Ind.comps() == 2);
    MonoidShapiroReport r = monoid_shapiro_report(D, S3, A3, A, 2, 7);
    CHECK(r.agree);
    CHECK(r.alpha_chain_maps);
    CHECK(r.ind_product == r.sub_product);
    CHECK(kind_of([&] { monoid_shapiro_report(D, z2_multiplicative(), {1}, GModule::trivial(D, {2}), 1, 1); }) ==
          ErrorKind::MonoidPartPresent);
    CHECK(kind_of([&] { induced_product_module(D, S3, A3, GModule::trivial(cyclic_group(4), {3})); }) ==
          ErrorKind::InvalidInput);
}
