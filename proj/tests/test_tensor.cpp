#include <catch_amalgamated.hpp>

#include "liedual/catalog.hpp"
#include "liedual/wedge.hpp"
#include "support/dense_oracle.hpp"
#include "support/random_gen.hpp"

using namespace liedual;
using testsupport::Rng;

namespace {

Bivector wedge(const LieAlgebra& g, std::initializer_list<std::tuple<const char*, const char*, std::string>> terms)
{
    Bivector b(g.dim(), g.context());
    for (const auto& [x, y, coeff] : terms)
        b.add_term(*g.basis().index_of(x), *g.basis().index_of(y), parse_scalar(coeff, g.context()));
    return b;
}

Bivector random_bivector(const LieAlgebra& g, Rng& rng, int terms = 4)
{
    Bivector b(g.dim(), g.context());
    for (int n = 0; n < terms; ++n) {
        size_t i = size_t(rng.int_in(0, long(g.dim()) - 1));
        size_t j = size_t(rng.int_in(0, long(g.dim()) - 1));
        if (i == j) continue;
        b.add_term(i, j, Scalar::constant(g.context(), rng.rational()));
    }
    return b;
}

} // namespace

TEST_CASE("bivector orientation and accumulation")
{
    auto g = lorentzian_2plus1().algebra;
    Bivector b(g.dim(), g.context());
    b.add_term(3, 0, Scalar::one(g.context()));
    CHECK(b.get(0, 3) == -Scalar::one(g.context()));
    CHECK(b.get(3, 0) == Scalar::one(g.context()));
    b.add_term(0, 3, Scalar::one(g.context()));
    CHECK(b.is_zero());
    b.add_term(2, 2, Scalar::one(g.context()));
    CHECK(b.is_zero());
}

TEST_CASE("ad_on_bivector on the 2+1 catalog")
{
    auto cat = lorentzian_2plus1();
    const LieAlgebra& g = cat.algebra;
    const Bivector& r = *cat.r;

    CHECK(ad_on_bivector(g, 0, Bivector(g.dim(), g.context())).is_zero());

    // delta(P1) = z (P1^P0 + Lambda K2^J)
    auto dP1 = ad_on_bivector(g, *g.basis().index_of("P1"), r);
    CHECK(dP1 == wedge(g, {{"P1", "P0", "z"}, {"K2", "J", "Lambda*z"}}));

    // delta(P0) = 0
    CHECK(ad_on_bivector(g, *g.basis().index_of("P0"), r).is_zero());
    CHECK(ad_on_bivector(g, *g.basis().index_of("J"), r).is_zero());
}

TEST_CASE("ad_on_bivector agrees with the dense formula and is a derivation")
{
    auto g = lorentzian_2plus1().algebra;
    Rng rng(5511);
    for (int n = 0; n < 40; ++n) {
        Bivector b = random_bivector(g, rng);
        size_t gen = size_t(rng.int_in(0, long(g.dim()) - 1));
        Bivector sparse = ad_on_bivector(g, gen, b);
        auto dense = testsupport::dense_coboundary(g, testsupport::dense_bivector(g, b), gen);
        for (size_t i = 0; i < g.dim(); ++i)
            for (size_t j = 0; j < g.dim(); ++j) REQUIRE(sparse.get(i, j) == dense[i][j]);

        // linearity
        Bivector c = random_bivector(g, rng);
        CHECK(ad_on_bivector(g, gen, b + c) == ad_on_bivector(g, gen, b) + ad_on_bivector(g, gen, c));
    }

    // derivation property on simple wedges x^y
    for (int n = 0; n < 40; ++n) {
        size_t gen = size_t(rng.int_in(0, long(g.dim()) - 1));
        size_t x = size_t(rng.int_in(0, long(g.dim()) - 1));
        size_t y = size_t(rng.int_in(0, long(g.dim()) - 1));
        if (x == y) continue;
        Bivector w(g.dim(), g.context());
        w.add_term(x, y, Scalar::one(g.context()));
        Bivector lhs = ad_on_bivector(g, gen, w);
        Bivector rhs(g.dim(), g.context());
        for (const auto& [k, c] : g.bracket_basis(gen, x)) rhs.add_term(k, y, c);
        for (const auto& [k, c] : g.bracket_basis(gen, y)) rhs.add_term(x, k, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("block profile")
{
    auto cat = lorentzian_2plus1();
    const LieAlgebra& g = cat.algebra;
    const auto& s = cat.splitting;

    CHECK(block_profile(wedge(g, {{"K1", "P1", "z"}}), s) == BlockProfile{false, true, false});
    CHECK(block_profile(wedge(g, {{"K1", "K2", "1"}}), s) == BlockProfile{true, false, false});
    CHECK(block_profile(Bivector(g.dim(), g.context()), s) == BlockProfile{});
    CHECK(block_profile(wedge(g, {{"P0", "P1", "1"}, {"K1", "J", "z"}}), s) ==
          BlockProfile{true, false, true});

    // cancellation across summands leaves no phantom flags
    Bivector a = wedge(g, {{"P0", "P1", "z"}, {"K1", "P1", "1"}});
    Bivector b = wedge(g, {{"P1", "P0", "z"}});
    CHECK(block_profile(a + b, s) == BlockProfile{false, true, false});
}

TEST_CASE("schouten square of the 2+1 deformation r-matrix")
{
    auto cat = lorentzian_2plus1();
    const LieAlgebra& g = cat.algebra;
    Trivector t = schouten_square(g, *cat.r);

    // Frozen from the dense triple-tensor oracle:
    //   [[r,r]] = -z^2 (P0^P1^K1 + P0^P2^K2 + P1^P2^J) + z^2 Lambda K1^K2^J
    auto zz = parse_scalar("z^2", g.context());
    REQUIRE(t.components().size() == 4);
    CHECK(t.get(0, 1, 3) == -zz);
    CHECK(t.get(0, 2, 4) == -zz);
    CHECK(t.get(1, 2, 5) == -zz);
    CHECK(t.get(3, 4, 5) == parse_scalar("Lambda*z^2", g.context()));

    CHECK(testsupport::dense_matches_trivector(g, testsupport::dense_schouten(g, testsupport::dense_bivector(g, *cat.r)), t));
}

TEST_CASE("schouten square vanishes on commuting support")
{
    auto g = lorentzian_2plus1().algebra;
    CHECK(schouten_square(g, Bivector(g.dim(), g.context())).is_zero());

    // P1, P2, J span a subalgebra with [P1,P2]=Lambda J, [J,P1]=P2, ...
    // but an r supported on a single commuting pair gives zero:
    Bivector b(g.dim(), g.context());
    b.add_term(0, 5, Scalar::one(g.context())); // [P0, J] = 0
    CHECK(schouten_square(g, b).is_zero());
}

TEST_CASE("schouten square against dense oracle on random bivectors")
{
    Rng rng(160914);
    auto g2 = lorentzian_2plus1().algebra;
    for (int n = 0; n < 15; ++n) {
        Bivector r = random_bivector(g2, rng, 3);
        Trivector t = schouten_square(g2, r);
        REQUIRE(testsupport::dense_matches_trivector(g2, testsupport::dense_schouten(g2, testsupport::dense_bivector(g2, r)), t));
    }

    // small algebras, dim <= 4: su(2)-like and Heisenberg
    auto ctx = make_context({});
    LieAlgebra::Builder su2(Basis{{"E1", "E2", "E3"}}, ctx);
    su2.add("E1", "E2", "E3", Scalar::one(ctx));
    su2.add("E2", "E3", "E1", Scalar::one(ctx));
    su2.add("E3", "E1", "E2", Scalar::one(ctx));
    LieAlgebra a = su2.build();
    LieAlgebra::Builder h3(Basis{{"X", "Y", "Z", "W"}}, ctx);
    h3.add("X", "Y", "Z", Scalar::one(ctx));
    LieAlgebra b = h3.build();
    for (const LieAlgebra* g : {&a, &b}) {
        for (int n = 0; n < 15; ++n) {
            Bivector r = random_bivector(*g, rng, 3);
            Trivector t = schouten_square(*g, r);
            REQUIRE(testsupport::dense_matches_trivector(*g, testsupport::dense_schouten(*g, testsupport::dense_bivector(*g, r)), t));
        }
    }
}

TEST_CASE("catalog r-matrices satisfy the modified Yang-Baxter condition")
{
    auto cat2 = lorentzian_2plus1();
    Trivector t2 = schouten_square(cat2.algebra, *cat2.r);
    CHECK(ad_invariance_defect(cat2.algebra, t2).empty());
    CHECK(testsupport::dense_matches_trivector(
        cat2.algebra, testsupport::dense_schouten(cat2.algebra, testsupport::dense_bivector(cat2.algebra, *cat2.r)), t2));
    for (size_t gen = 0; gen < cat2.algebra.dim(); ++gen) {
        auto d = testsupport::dense_triple_ad(cat2.algebra, testsupport::trivector_to_dense(cat2.algebra, t2), gen);
        for (const auto& plane : d)
            for (const auto& row : plane)
                for (const auto& v : row) REQUIRE(v.is_zero());
    }

    auto cat3 = lorentzian_3plus1();
    Trivector t3 = schouten_square(cat3.algebra, *cat3.r);
    CHECK(ad_invariance_defect(cat3.algebra, t3).empty());
}

TEST_CASE("ad_invariance_defect flags non-invariant trivectors")
{
    auto g = lorentzian_2plus1().algebra;
    Trivector t(g.dim(), g.context());
    CHECK(ad_invariance_defect(g, t).empty());
    t.add_term(0, 1, 2, Scalar::one(g.context())); // P0^P1^P2 is not ad-invariant
    auto defect = ad_invariance_defect(g, t);
    CHECK(!defect.empty());
    for (const auto& [gen, d] : defect) {
        auto dense = testsupport::dense_triple_ad(g, testsupport::trivector_to_dense(g, t), gen);
        REQUIRE(testsupport::dense_matches_trivector(g, dense, d));
    }
}
