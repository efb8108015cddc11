#include <catch_amalgamated.hpp>

#include "liedual/expr.hpp"
#include "liedual/matrix.hpp"
#include "support/random_gen.hpp"

using namespace liedual;
using testsupport::Rng;

namespace {

ScalarMatrix from_rows(const ContextPtr& ctx, std::vector<std::vector<std::string>> rows)
{
    ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), ctx);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = parse_scalar(rows[r][c], ctx);
    return m;
}

} // namespace

TEST_CASE("row reduction over the rationals")
{
    auto ctx = make_context({});
    auto sys = row_reduce(from_rows(ctx, {{"1", "2", "3"}, {"2", "4", "7"}, {"0", "1", "1"}}));
    CHECK(sys.rank() == 3);
    CHECK(sys.genericity.empty());

    sys = row_reduce(from_rows(ctx, {{"1", "2", "3"}, {"2", "4", "6"}}));
    CHECK(sys.rank() == 1);
    CHECK(sys.pivot_cols == std::vector<size_t>{0});
    auto basis = nullspace_basis(sys);
    REQUIRE(basis.size() == 2);
    // each kernel vector annihilates the original rows
    for (const auto& v : basis) {
        Scalar acc = v[0] * parse_scalar("1", ctx) + v[1] * parse_scalar("2", ctx) +
                     v[2] * parse_scalar("3", ctx);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("row reduction records genericity divisors")
{
    auto ctx = make_context({"Lambda"});
    auto sys = row_reduce(from_rows(ctx, {{"Lambda", "1"}, {"1", "Lambda"}}));
    CHECK(sys.rank() == 2);
    // the constant pivot is preferred, so the only division is by 1 - Lambda^2,
    // recorded in primitive form with positive leading coefficient
    REQUIRE(sys.genericity.size() == 1);
    CHECK(Scalar::from_polynomial(sys.genericity[0]) == parse_scalar("Lambda^2 - 1", ctx));

    // rank collapses exactly where the recorded polynomial vanishes
    auto at1 = row_reduce(from_rows(make_context({}), {{"1", "1"}, {"1", "1"}}));
    CHECK(at1.rank() == 1);
}

TEST_CASE("nullspace of a parametric system")
{
    auto ctx = make_context({"z"});
    // x + z y = 0 has kernel (-z, 1)
    auto sys = row_reduce(from_rows(ctx, {{"1", "z"}}));
    auto basis = nullspace_basis(sys);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == parse_scalar("-z", ctx));
    CHECK(basis[0][1] == parse_scalar("1", ctx));
}

TEST_CASE("determinant")
{
    auto ctx = make_context({"z"});
    CHECK(determinant(from_rows(ctx, {{"1", "2"}, {"3", "4"}})) == parse_scalar("-2", ctx));
    CHECK(determinant(from_rows(ctx, {{"z", "1", "0"}, {"0", "z", "1"}, {"1", "0", "z"}})) ==
          parse_scalar("z^3 + 1", ctx));
    CHECK(determinant(from_rows(ctx, {{"z", "z"}, {"1", "1"}})).is_zero());
    CHECK(determinant(ScalarMatrix(0, 0, ctx)) == Scalar::one(ctx));
}

TEST_CASE("random reductions annihilate their kernels")
{
    auto ctx = make_context({"Lambda"});
    Rng rng(224);
    for (int n = 0; n < 25; ++n) {
        size_t rows = size_t(rng.int_in(1, 5)), cols = size_t(rng.int_in(1, 6));
        ScalarMatrix m(rows, cols, ctx);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                m.at(r, c) = rng.int_in(0, 3) ? Scalar::constant(ctx, rng.rational())
                                              : parse_scalar("Lambda", ctx) *
                                                    Scalar::constant(ctx, rng.rational());
        auto sys = row_reduce(m);
        auto basis = nullspace_basis(sys);
        CHECK(basis.size() + sys.rank() == cols);
        for (const auto& v : basis)
            for (size_t r = 0; r < rows; ++r) {
                Scalar acc = Scalar::zero(ctx);
                for (size_t c = 0; c < cols; ++c) acc += m.at(r, c) * v[c];
                REQUIRE(acc.is_zero());
            }
    }
}
