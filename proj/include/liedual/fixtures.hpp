#pragma once

#include <functional>

#include "liedual/geometry.hpp"
#include "liedual/problem.hpp"

namespace liedual {

/// One machine-checkable expectation against the live pipeline, with a
/// provenance label naming the value it pins down.
struct Fixture {
    std::string name;
    std::string source;
    std::function<void()> run; // throws Error with detail on mismatch
};

struct FixtureResult {
    std::string name;
    std::string source;
    bool passed = false;
    std::string detail;
};

namespace fixture_detail {

struct WedgeSpec {
    const char* a;
    const char* b;
    const char* coeff;
};

inline Bivector bivector_of(const Basis& basis, const ContextPtr& ctx,
                            std::initializer_list<WedgeSpec> terms)
{
    Bivector out(basis.dim(), ctx);
    for (const auto& t : terms) {
        auto i = basis.index_of(t.a), j = basis.index_of(t.b);
        if (!i || !j) throw InternalError("fixture references unknown generator");
        out.add_term(*i, *j, parse_scalar(t.coeff, ctx));
    }
    return out;
}

inline SparseVec vec_of(const Basis& basis, const ContextPtr& ctx,
                        std::initializer_list<std::pair<const char*, const char*>> terms)
{
    SparseVec v;
    for (const auto& [name, coeff] : terms) {
        auto i = basis.index_of(name);
        if (!i) throw InternalError("fixture references unknown generator");
        sparse_add(v, *i, parse_scalar(coeff, ctx));
    }
    return v;
}

inline void expect(bool ok, const std::string& detail)
{
    if (!ok) throw Error(detail);
}

inline void expect_bivector(const Bivector& got, const Bivector& want, const Basis& basis)
{
    if (!(got == want))
        throw Error("expected " + want.to_string(basis) + ", got " + got.to_string(basis));
}

inline void expect_vec(const SparseVec& got, const SparseVec& want, const Basis& basis)
{
    if (!(got == want))
        throw Error("expected " + sparse_to_string(want, basis) + ", got " +
                    sparse_to_string(got, basis));
}

} // namespace fixture_detail

inline std::vector<Fixture> fixtures_2plus1()
{
    using namespace fixture_detail;
    std::vector<Fixture> out;
    auto add = [&](std::string name, std::string source, std::function<void()> run) {
        out.push_back({std::move(name), std::move(source), std::move(run)});
    };

    add("2+1 bracket table spot checks", "2+1 catalog bracket table", [] {
        auto cat = lorentzian_2plus1();
        const auto& g = cat.algebra;
        const auto& B = g.basis();
        auto ctx = g.context();
        expect_vec(g.bracket_basis(*B.index_of("P0"), *B.index_of("K1")),
                   vec_of(B, ctx, {{"P1", "-1"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("K1"), *B.index_of("K2")),
                   vec_of(B, ctx, {{"J", "-1"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("P1"), *B.index_of("K1")),
                   vec_of(B, ctx, {{"P0", "-1"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("P1"), *B.index_of("P2")),
                   vec_of(B, ctx, {{"J", "Lambda"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("J"), *B.index_of("P1")),
                   vec_of(B, ctx, {{"P2", "1"}}), B);
    });

    add("2+1 Jacobi identity", "2+1 catalog is a Lie algebra family", [] {
        expect(lorentzian_2plus1().algebra.jacobi_defect().empty(), "nonempty Jacobi defect");
    });

    add("2+1 cocommutator table", "2+1 deformation cocommutator from r = z(K1^P1 + K2^P2)", [] {
        auto cat = lorentzian_2plus1();
        const auto& g = cat.algebra;
        const auto& B = g.basis();
        auto ctx = g.context();
        Cocommutator d = coboundary_cocommutator(g, *cat.r);
        auto check = [&](const char* gen, std::initializer_list<WedgeSpec> terms) {
            expect_bivector(d.value(*B.index_of(gen)), bivector_of(B, ctx, terms), B);
        };
        check("P0", {});
        check("J", {});
        check("P1", {{"P1", "P0", "z"}, {"K2", "J", "Lambda*z"}});
        check("P2", {{"P2", "P0", "z"}, {"K1", "J", "-Lambda*z"}});
        check("K1", {{"K1", "P0", "z"}, {"P2", "J", "z"}});
        check("K2", {{"K2", "P0", "z"}, {"P1", "J", "-z"}});
    });

    add("2+1 dual bracket table", "dual algebra of the 2+1 deformation bialgebra", [] {
        auto cat = lorentzian_2plus1();
        LieAlgebra dual = dual_bracket(coboundary_cocommutator(cat.algebra, *cat.r));
        const auto& B = dual.basis();
        auto ctx = dual.context();
        auto check = [&](const char* x, const char* y,
                         std::initializer_list<std::pair<const char*, const char*>> terms) {
            expect_vec(dual.bracket_basis(*B.index_of(x), *B.index_of(y)), vec_of(B, ctx, terms),
                       B);
        };
        check("P0*", "P1*", {{"P1*", "-z"}});
        check("P0*", "P2*", {{"P2*", "-z"}});
        check("P1*", "P2*", {});
        check("P0*", "K1*", {{"K1*", "-z"}});
        check("P0*", "K2*", {{"K2*", "-z"}});
        check("K1*", "K2*", {});
        check("J*", "P2*", {{"K1*", "-z"}});
        check("J*", "K1*", {{"P2*", "Lambda*z"}});
        check("K1*", "P2*", {});
        check("J*", "P1*", {{"K2*", "z"}});
        check("J*", "K2*", {{"P1*", "-Lambda*z"}});
        check("K2*", "P1*", {});
        check("J*", "P0*", {});
        check("K1*", "P1*", {});
        check("K2*", "P2*", {});
    });

    add("2+1 dual cocommutator table", "transpose of the 2+1 bracket table", [] {
        auto cat = lorentzian_2plus1();
        Cocommutator ds = dual_cocommutator(cat.algebra);
        const Basis B = dual_basis(cat.algebra.basis());
        auto ctx = cat.algebra.context();
        auto check = [&](const char* gen, std::initializer_list<WedgeSpec> terms) {
            expect_bivector(ds.value(*B.index_of(gen)), bivector_of(B, ctx, terms), B);
        };
        check("P0*", {{"K1*", "P1*", "1"}, {"K2*", "P2*", "1"}});
        check("P1*", {{"J*", "P2*", "-1"}, {"K1*", "P0*", "1"}});
        check("P2*", {{"J*", "P1*", "1"}, {"K2*", "P0*", "1"}});
        check("J*", {{"P1*", "P2*", "Lambda"}, {"K1*", "K2*", "-1"}});
        check("K1*", {{"P0*", "P1*", "-Lambda"}, {"J*", "K2*", "-1"}});
        check("K2*", {{"P0*", "P2*", "-Lambda"}, {"J*", "K1*", "1"}});
    });

    add("2+1 verdicts", "2+1 deformation bialgebra is coisotropic, coreductive, cosymmetric", [] {
        auto cat = lorentzian_2plus1();
        auto out = classify(make_bialgebra(cat.algebra, coboundary_cocommutator(cat.algebra, *cat.r)),
                            cat.splitting);
        expect(out.verdict.coisotropic && out.verdict.coreductive && out.verdict.cosymmetric,
               "expected (true, true, true)");
    });

    add("2+1 Yang-Baxter ad-invariance", "r = z(K1^P1 + K2^P2) solves the modified equation", [] {
        auto cat = lorentzian_2plus1();
        Trivector t = schouten_square(cat.algebra, *cat.r);
        expect(!t.is_zero(), "Schouten square unexpectedly zero");
        expect(ad_invariance_defect(cat.algebra, t).empty(), "Schouten square not ad-invariant");
    });

    add("2+1 dual geometry", "canonical connection of the 2+1 dual space", [] {
        auto cat = lorentzian_2plus1();
        LieAlgebra dual = dual_bracket(coboundary_cocommutator(cat.algebra, *cat.r));
        auto ds = dual_splitting(cat.splitting);
        const auto& B = dual.basis();
        auto ctx = dual.context();

        expect(canonical_torsion(dual, ds).empty(), "torsion should vanish");
        CurvatureTensor r = canonical_curvature(dual, ds);
        const size_t xi1 = *B.index_of("K1*"), xi2 = *B.index_of("K2*"), th = *B.index_of("J*");
        expect_vec(curvature_value(r, xi1, th, th), vec_of(B, ctx, {{"K1*", "Lambda*z^2"}}), B);
        expect_vec(curvature_value(r, xi2, th, th), vec_of(B, ctx, {{"K2*", "Lambda*z^2"}}), B);
        size_t entries = 0;
        for (const auto& [key, v] : r) entries += v.size();
        expect(entries == 2, "unexpected extra curvature components");

        RicciTensor s = ricci(r, ds, ctx);
        expect(s.size() == 1 && s.count({th, th}) == 1, "unexpected Ricci support");
        expect(s.at({th, th}) == parse_scalar("2*Lambda*z^2", ctx),
               "S(J*, J*) != 2*Lambda*z^2");
    });

    add("2+1 dual metric obstruction", "no invariant nondegenerate form on the 2+1 dual", [] {
        auto cat = lorentzian_2plus1();
        LieAlgebra dual = dual_bracket(coboundary_cocommutator(cat.algebra, *cat.r));
        MetricSolutionSpace ms = invariant_metric_space(dual, dual_splitting(cat.splitting));
        expect(ms.verdict == MetricSolutionSpace::Nondegenerate::No,
               "expected the 'no' verdict");
        expect(ms.certificate && ms.certificate->is_zero(),
               "expected an identically zero determinant certificate");
    });

    add("2+1 generic r-matrix constraints", "coisotropy <=> t^t block vanishes; "
                                            "coreductivity <=> h^h block vanishes",
        [] {
            auto cat = lorentzian_2plus1();
            const auto& s = cat.splitting;
            auto full = support_pairs(s, cat.algebra.dim(), true, true, true);
            auto sys = generic_r_analysis(cat.algebra, s, full);
            std::vector<size_t> tt_cols;
            for (size_t k = 0; k < full.size(); ++k)
                if (block_of(s, full[k].first, full[k].second) == Block::TT) tt_cols.push_back(k);
            expect(sys.coisotropy.rank == 3 && sys.coisotropy.pivot_cols == tt_cols,
                   "coisotropy constraints are not exactly the t^t block");

            auto nott = support_pairs(s, cat.algebra.dim(), true, true, false);
            auto sys2 = generic_r_analysis(cat.algebra, s, nott);
            std::vector<size_t> hh_cols;
            for (size_t k = 0; k < nott.size(); ++k)
                if (block_of(s, nott[k].first, nott[k].second) == Block::HH) hh_cols.push_back(k);
            expect(sys2.coreductivity.rank == 3 && sys2.coreductivity.pivot_cols == hh_cols,
                   "coreductivity constraints are not exactly the h^h block");
        });

    add("2+1 file round trip", "serialized catalog re-parses to an equal value", [] {
        auto cat = lorentzian_2plus1();
        ProblemDocument doc = document_from_catalog(cat);
        ProblemDocument doc2 = parse_problem(serialize_problem(doc));
        expect(doc == doc2, "document round trip changed the value");
        ProblemInstance inst = instantiate(doc2);
        expect(inst.algebra == cat.algebra, "algebra changed across the round trip");
        expect(inst.r && *inst.r == *cat.r, "r-matrix changed across the round trip");
        expect(inst.splitting == cat.splitting, "splitting changed across the round trip");
    });

    return out;
}

inline std::vector<Fixture> fixtures_3plus1()
{
    using namespace fixture_detail;
    std::vector<Fixture> out;
    auto add = [&](std::string name, std::string source, std::function<void()> run) {
        out.push_back({std::move(name), std::move(source), std::move(run)});
    };

    add("3+1 bracket table spot checks", "3+1 catalog bracket table, Lambda = -eta^2", [] {
        auto cat = lorentzian_3plus1();
        const auto& g = cat.algebra;
        const auto& B = g.basis();
        auto ctx = g.context();
        expect_vec(g.bracket_basis(*B.index_of("K2"), *B.index_of("P2")),
                   vec_of(B, ctx, {{"P0", "1"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("K1"), *B.index_of("P2")), {}, B);
        expect_vec(g.bracket_basis(*B.index_of("P0"), *B.index_of("P1")),
                   vec_of(B, ctx, {{"K1", "eta^2"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("P1"), *B.index_of("P2")),
                   vec_of(B, ctx, {{"J3", "-eta^2"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("K1"), *B.index_of("P0")),
                   vec_of(B, ctx, {{"P1", "1"}}), B);
        expect_vec(g.bracket_basis(*B.index_of("J1"), *B.index_of("J2")),
                   vec_of(B, ctx, {{"J3", "1"}}), B);
    });

    add("3+1 Jacobi identity", "3+1 catalog is a Lie algebra family", [] {
        expect(lorentzian_3plus1().algebra.jacobi_defect().empty(), "nonempty Jacobi defect");
    });

    add("3+1 r-matrix form", "r = z(sum Ka^Pa + eta J1^J2)", [] {
        auto cat = lorentzian_3plus1();
        const auto& B = cat.algebra.basis();
        auto ctx = cat.algebra.context();
        expect_bivector(*cat.r,
                        bivector_of(B, ctx,
                                    {{"K1", "P1", "z"},
                                     {"K2", "P2", "z"},
                                     {"K3", "P3", "z"},
                                     {"J1", "J2", "eta*z"}}),
                        B);
    });

    add("3+1 cocommutator table", "3+1 deformation cocommutator, sqrt(-Lambda) written as eta", [] {
        auto cat = lorentzian_3plus1();
        const auto& g = cat.algebra;
        const auto& B = g.basis();
        auto ctx = g.context();
        Cocommutator d = coboundary_cocommutator(g, *cat.r);
        auto check = [&](const char* gen, std::initializer_list<WedgeSpec> terms) {
            expect_bivector(d.value(*B.index_of(gen)), bivector_of(B, ctx, terms), B);
        };
        check("P0", {});
        check("J3", {});
        check("J1", {{"J1", "J3", "eta*z"}});
        check("J2", {{"J2", "J3", "eta*z"}});
        check("P1", {{"P1", "P0", "z"},
                     {"J2", "K3", "-eta^2*z"},
                     {"J3", "K2", "eta^2*z"},
                     {"J1", "P3", "eta*z"}});
        check("P2", {{"P2", "P0", "z"},
                     {"J3", "K1", "-eta^2*z"},
                     {"J1", "K3", "eta^2*z"},
                     {"J2", "P3", "eta*z"}});
        check("P3", {{"P3", "P0", "z"},
                     {"J1", "K2", "-eta^2*z"},
                     {"J2", "K1", "eta^2*z"},
                     {"J1", "P1", "-eta*z"},
                     {"J2", "P2", "-eta*z"}});
        check("K1", {{"K1", "P0", "z"}, {"J2", "P3", "z"}, {"J3", "P2", "-z"}, {"J1", "K3", "eta*z"}});
        check("K2", {{"K2", "P0", "z"}, {"J3", "P1", "z"}, {"J1", "P3", "-z"}, {"J2", "K3", "eta*z"}});
        check("K3", {{"K3", "P0", "z"},
                     {"J1", "P2", "z"},
                     {"J2", "P1", "-z"},
                     {"J1", "K1", "-eta*z"},
                     {"J2", "K2", "-eta*z"}});
    });

    add("3+1 verdicts at symbolic eta", "coisotropic but neither coreductive nor cosymmetric", [] {
        auto cat = lorentzian_3plus1();
        auto out = classify(make_bialgebra(cat.algebra, coboundary_cocommutator(cat.algebra, *cat.r)),
                            cat.splitting);
        expect(out.verdict.coisotropic, "expected coisotropic");
        expect(!out.verdict.coreductive, "expected non-coreductive at symbolic eta");
        expect(!out.verdict.cosymmetric, "expected non-cosymmetric at symbolic eta");
    });

    add("3+1 verdicts at eta = 0", "all three conditions hold in the flat case", [] {
        auto cat = lorentzian_3plus1();
        LieAlgebra g0 = cat.algebra.substitute({{"eta", Rational(0)}});
        Bivector r0 = cat.r->substitute({{"eta", Rational(0)}});
        auto out = classify(make_bialgebra(g0, coboundary_cocommutator(g0, r0)), cat.splitting);
        expect(out.verdict.coisotropic && out.verdict.coreductive && out.verdict.cosymmetric,
               "expected (true, true, true)");
    });

    add("3+1 Yang-Baxter ad-invariance", "the 3+1 r-matrix solves the modified equation", [] {
        auto cat = lorentzian_3plus1();
        Trivector t = schouten_square(cat.algebra, *cat.r);
        expect(ad_invariance_defect(cat.algebra, t).empty(), "Schouten square not ad-invariant");
    });

    add("3+1 flat dual geometry", "curvature and Ricci vanish on the flat dual space", [] {
        auto cat = lorentzian_3plus1();
        LieAlgebra g0 = cat.algebra.substitute({{"eta", Rational(0)}});
        Bivector r0 = cat.r->substitute({{"eta", Rational(0)}});
        LieAlgebra dual = dual_bracket(coboundary_cocommutator(g0, r0));
        auto ds = dual_splitting(cat.splitting);
        CurvatureTensor r = canonical_curvature(dual, ds);
        expect(r.empty(), "curvature should vanish identically");
        expect(ricci(r, ds, dual.context()).empty(), "Ricci should vanish identically");
    });

    add("3+1 double dual identity", "dualizing twice returns the original algebra", [] {
        auto cat = lorentzian_3plus1();
        expect(dual_bracket(dual_cocommutator(cat.algebra)) == cat.algebra,
               "double dual differs from the original");
    });

    add("3+1 file round trip", "serialized catalog re-parses to an equal value", [] {
        auto cat = lorentzian_3plus1();
        ProblemDocument doc2 = parse_problem(serialize_problem(document_from_catalog(cat)));
        ProblemInstance inst = instantiate(doc2);
        expect(inst.algebra == cat.algebra, "algebra changed across the round trip");
        expect(inst.r && *inst.r == *cat.r, "r-matrix changed across the round trip");
    });

    return out;
}

inline std::vector<Fixture> fixtures(const CatalogEntry& cat)
{
    if (cat.id == "lorentzian-2+1") return fixtures_2plus1();
    if (cat.id == "lorentzian-3+1") return fixtures_3plus1();
    return {};
}

inline std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures)
{
    std::vector<FixtureResult> out;
    for (const auto& f : fixtures) {
        FixtureResult r{f.name, f.source, true, ""};
        try {
            f.run();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace liedual
