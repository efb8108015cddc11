#pragma once

#include <optional>

#include "liedual/expr.hpp"
#include "liedual/wedge.hpp"

namespace liedual {

/// Built-in algebra family with its standard r-matrix and isotropy
/// splitting. Builders are deterministic: two builds compare equal.
struct CatalogEntry {
    std::string id;
    std::string description;
    LieAlgebra algebra;
    std::optional<Bivector> r;
    SubalgebraSplitting splitting;
};

/// Lorentzian family in 2+1 dimensions: basis (P0, P1, P2, K1, K2, J)
/// over parameters {Lambda, z}, Lorentz splitting h = {K1, K2, J}, and
/// r = z (K1^P1 + K2^P2).
inline CatalogEntry lorentzian_2plus1()
{
    ContextPtr ctx = make_context({"Lambda", "z"});
    Basis basis{{"P0", "P1", "P2", "K1", "K2", "J"}};
    const Scalar one = Scalar::one(ctx);
    const Scalar lambda = Scalar::parameter(ctx, "Lambda");
    const Scalar z = Scalar::parameter(ctx, "z");

    LieAlgebra::Builder b(basis, ctx);
    // epsilon_12 = 1
    b.add("J", "P1", "P2", one);
    b.add("J", "P2", "P1", -one);
    b.add("J", "K1", "K2", one);
    b.add("J", "K2", "K1", -one);
    b.add("P1", "K1", "P0", -one);
    b.add("P2", "K2", "P0", -one);
    b.add("P0", "K1", "P1", -one);
    b.add("P0", "K2", "P2", -one);
    b.add("K1", "K2", "J", -one);
    b.add("P0", "P1", "K1", -lambda);
    b.add("P0", "P2", "K2", -lambda);
    b.add("P1", "P2", "J", lambda);
    LieAlgebra alg = b.build();

    Bivector r(alg.dim(), ctx);
    r.add_term(*basis.index_of("K1"), *basis.index_of("P1"), z);
    r.add_term(*basis.index_of("K2"), *basis.index_of("P2"), z);

    SubalgebraSplitting split = SubalgebraSplitting::make(alg.dim(), {3, 4, 5}, {0, 1, 2});
    return CatalogEntry{"lorentzian-2+1",
                        "(anti-)de Sitter / Poincare family in 2+1 dimensions with the "
                        "standard deformation r-matrix",
                        std::move(alg), std::move(r), std::move(split)};
}

/// Lorentzian family in 3+1 dimensions: basis (P0, P1..P3, K1..K3, J1..J3)
/// over parameters {eta, z}, with the cosmological constant represented as
/// Lambda = -eta^2 so everything stays polynomial. The r-matrix is
/// z (sum_a Ka^Pa + eta J1^J2).
inline CatalogEntry lorentzian_3plus1()
{
    ContextPtr ctx = make_context({"eta", "z"});
    Basis basis{{"P0", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"}};
    const Scalar one = Scalar::one(ctx);
    const Scalar eta = Scalar::parameter(ctx, "eta");
    const Scalar z = Scalar::parameter(ctx, "z");
    const Scalar lambda = -(eta * eta);

    auto P = [&](int a) { return std::string("P") + std::to_string(a); };
    auto K = [&](int a) { return std::string("K") + std::to_string(a); };
    auto Jn = [&](int a) { return std::string("J") + std::to_string(a); };
    // epsilon_123 = 1
    auto eps = [](int a, int b, int c) -> int {
        if (a == b || b == c || a == c) return 0;
        int sign = 1;
        if (a > b) { std::swap(a, b); sign = -sign; }
        if (b > c) { std::swap(b, c); sign = -sign; }
        if (a > b) { std::swap(a, b); sign = -sign; }
        return sign;
    };

    LieAlgebra::Builder b(basis, ctx);
    for (int a = 1; a <= 3; ++a) {
        for (int bb = 1; bb <= 3; ++bb) {
            for (int c = 1; c <= 3; ++c) {
                const int e = eps(a, bb, c);
                if (e == 0) continue;
                const Scalar s = Scalar::constant(ctx, Rational(e));
                b.add(Jn(a), P(bb), P(c), s);
                b.add(Jn(a), K(bb), K(c), s);
                if (a < bb) {
                    b.add(Jn(a), Jn(bb), Jn(c), s);
                    b.add(K(a), K(bb), Jn(c), -s);
                    b.add(P(a), P(bb), Jn(c), lambda * s);
                }
            }
        }
        b.add(K(a), "P0", P(a), one);
        b.add(K(a), P(a), "P0", one);
        b.add("P0", P(a), K(a), -lambda);
    }
    LieAlgebra alg = b.build();

    Bivector r(alg.dim(), ctx);
    for (int a = 1; a <= 3; ++a) r.add_term(*basis.index_of(K(a)), *basis.index_of(P(a)), z);
    r.add_term(*basis.index_of("J1"), *basis.index_of("J2"), z * eta);

    SubalgebraSplitting split =
        SubalgebraSplitting::make(alg.dim(), {4, 5, 6, 7, 8, 9}, {0, 1, 2, 3});
    return CatalogEntry{"lorentzian-3+1",
                        "(anti-)de Sitter / Poincare family in 3+1 dimensions with the "
                        "standard deformation r-matrix (Lambda represented as -eta^2)",
                        std::move(alg), std::move(r), std::move(split)};
}

inline std::vector<std::string> catalog_ids() { return {"lorentzian-2+1", "lorentzian-3+1"}; }

inline std::optional<CatalogEntry> find_catalog(std::string_view id)
{
    if (id == "lorentzian-2+1") return lorentzian_2plus1();
    if (id == "lorentzian-3+1") return lorentzian_3plus1();
    return std::nullopt;
}

} // namespace liedual
