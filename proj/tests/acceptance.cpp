// Acceptance gate: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. The CLI binary path is expected as argv[1] (used by the
// command-line criteria).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "liedual/fixtures.hpp"
#include "liedual/run.hpp"
#include "support/builders.hpp"
#include "support/dense_oracle.hpp"
#include "support/random_gen.hpp"

using namespace liedual;
using testsupport::Rng;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<void()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << ms << " ms)\n";
    if (!ok) {
        std::cout << "      " << detail << "\n";
        ++failures;
    }
}

void expect(bool ok, const std::string& what)
{
    if (!ok) throw Error(what);
}

void run_named_fixture(const std::vector<Fixture>& fs, const std::string& name)
{
    for (const auto& f : fs) {
        if (f.name == name) {
            f.run();
            return;
        }
    }
    throw Error("fixture '" + name + "' not found");
}

std::string cli_path;

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1) cli_path = argv[1];

    const auto fx2 = fixtures_2plus1();
    const auto fx3 = fixtures_3plus1();

    criterion("01 2+1 cocommutator table reproduced exactly at symbolic Lambda, z", [&] {
        run_named_fixture(fx2, "2+1 cocommutator table");
    });

    criterion("02 2+1 dual bracket table reproduced exactly, including the zeros", [&] {
        run_named_fixture(fx2, "2+1 dual bracket table");
    });

    criterion("03 2+1 dual cocommutator reproduced exactly", [&] {
        run_named_fixture(fx2, "2+1 dual cocommutator table");
    });

    criterion("04 3+1 cocommutator table reproduced exactly under the eta convention", [&] {
        run_named_fixture(fx3, "3+1 cocommutator table");
    });

    criterion("05 2+1 verdicts (coisotropic, coreductive, cosymmetric) = (T, T, T)", [&] {
        auto cat = lorentzian_2plus1();
        auto out = classify(make_bialgebra(cat.algebra, coboundary_cocommutator(cat.algebra, *cat.r)),
                            cat.splitting);
        expect(out.verdict.coisotropic && out.verdict.coreductive && out.verdict.cosymmetric,
               "expected (true, true, true)");
    });

    criterion("06 3+1 verdicts: (T, F, F) at symbolic eta, (T, T, T) at eta = 0", [&] {
        auto cat = lorentzian_3plus1();
        auto out = classify(make_bialgebra(cat.algebra, coboundary_cocommutator(cat.algebra, *cat.r)),
                            cat.splitting);
        expect(out.verdict.coisotropic && !out.verdict.coreductive && !out.verdict.cosymmetric,
               "expected (true, false, false) at symbolic eta");
        LieAlgebra g0 = cat.algebra.substitute({{"eta", Rational(0)}});
        Bivector r0 = cat.r->substitute({{"eta", Rational(0)}});
        auto flat = classify(make_bialgebra(g0, coboundary_cocommutator(g0, r0)), cat.splitting);
        expect(flat.verdict.coisotropic && flat.verdict.coreductive && flat.verdict.cosymmetric,
               "expected (true, true, true) at eta = 0");
    });

    criterion("07 2+1 generic r-matrix: coisotropy <=> t^t block, coreductivity <=> h^h block", [&] {
        auto cat = lorentzian_2plus1();
        const LieAlgebra& g = cat.algebra;
        const auto& s = cat.splitting;

        auto oracle_check = [&](const std::vector<std::pair<size_t, size_t>>& support,
                                const GenericRSystem::ConditionReduction& red,
                                const std::vector<size_t>& gens, Block block) {
            // independent coefficient enumeration: dense coboundary of each
            // unit support wedge, one column per pair
            std::vector<std::vector<Scalar>> rows;
            std::vector<std::vector<testsupport::Dense2>> delta;
            for (const auto& [i, j] : support) {
                testsupport::Dense2 rr = testsupport::dense_zero2(g);
                rr[i][j] = Scalar::one(g.context());
                rr[j][i] = -Scalar::one(g.context());
                std::vector<testsupport::Dense2> per;
                for (size_t gen = 0; gen < g.dim(); ++gen)
                    per.push_back(testsupport::dense_coboundary(g, rr, gen));
                delta.push_back(std::move(per));
            }
            for (size_t gen : gens)
                for (size_t a = 0; a < g.dim(); ++a)
                    for (size_t b = a + 1; b < g.dim(); ++b) {
                        if (block_of(s, a, b) != block) continue;
                        std::vector<Scalar> row;
                        bool nz = false;
                        for (size_t k = 0; k < support.size(); ++k) {
                            row.push_back(delta[k][gen][a][b]);
                            nz |= !row.back().is_zero();
                        }
                        if (nz) rows.push_back(std::move(row));
                    }
            // the kernel of the production reduction annihilates the oracle rows
            for (const auto& v : red.solution_basis)
                for (const auto& row : rows) {
                    Scalar acc = Scalar::zero(g.context());
                    for (size_t c = 0; c < row.size(); ++c) acc += row[c] * v[c];
                    expect(acc.is_zero(), "oracle row not annihilated by the solution basis");
                }
            // and the oracle rank matches
            ScalarMatrix m(rows.size(), support.size(), g.context());
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < support.size(); ++c) m.at(r, c) = rows[r][c];
            expect(row_reduce(std::move(m)).rank() == red.rank, "oracle rank differs");
        };

        auto full = support_pairs(s, g.dim(), true, true, true);
        auto sys = generic_r_analysis(g, s, full);
        std::vector<size_t> tt_cols;
        for (size_t k = 0; k < full.size(); ++k)
            if (block_of(s, full[k].first, full[k].second) == Block::TT) tt_cols.push_back(k);
        expect(sys.coisotropy.rank == 3 && sys.coisotropy.pivot_cols == tt_cols,
               "coisotropy constraints are not exactly the t^t coefficient block");
        for (size_t r = 0; r < sys.coisotropy.rows.size(); ++r)
            for (size_t c = 0; c < full.size(); ++c)
                expect(sys.coisotropy.rows[r][c] ==
                           (c == tt_cols[r] ? Scalar::one(g.context()) : Scalar::zero(g.context())),
                       "coisotropy reduced rows are not the unit t^t rows");
        oracle_check(full, sys.coisotropy, s.h, Block::TT);

        auto nott = support_pairs(s, g.dim(), true, true, false);
        auto sys2 = generic_r_analysis(g, s, nott);
        std::vector<size_t> hh_cols;
        for (size_t k = 0; k < nott.size(); ++k)
            if (block_of(s, nott[k].first, nott[k].second) == Block::HH) hh_cols.push_back(k);
        expect(sys2.coreductivity.rank == 3 && sys2.coreductivity.pivot_cols == hh_cols,
               "coreductivity constraints are not exactly the h^h coefficient block");
        for (size_t r = 0; r < sys2.coreductivity.rows.size(); ++r)
            for (size_t c = 0; c < nott.size(); ++c)
                expect(sys2.coreductivity.rows[r][c] ==
                           (c == hh_cols[r] ? Scalar::one(g.context()) : Scalar::zero(g.context())),
                       "coreductivity reduced rows are not the unit h^h rows");
        oracle_check(nott, sys2.coreductivity, s.t, Block::HT);
    });

    criterion("08 Schouten squares of both catalog r-matrices are ad-invariant", [&] {
        for (auto cat : {lorentzian_2plus1(), lorentzian_3plus1()}) {
            Trivector t = schouten_square(cat.algebra, *cat.r);
            expect(ad_invariance_defect(cat.algebra, t).empty(),
                   cat.id + ": Schouten square is not ad-invariant");
        }
    });

    criterion("09 canonical geometry: 2+1 dual and flat 3+1 dual", [&] {
        run_named_fixture(fx2, "2+1 dual geometry");
        run_named_fixture(fx3, "3+1 flat dual geometry");
    });

    criterion("10 2+1 dual metric obstruction with sampled zero certificate", [&] {
        auto cat = lorentzian_2plus1();
        LieAlgebra dual = dual_bracket(coboundary_cocommutator(cat.algebra, *cat.r));
        MetricSolutionSpace ms = invariant_metric_space(dual, dual_splitting(cat.splitting));
        expect(ms.verdict == MetricSolutionSpace::Nondegenerate::No, "expected verdict 'no'");
        expect(ms.certificate && ms.certificate->is_zero(),
               "expected the identically zero determinant certificate");
        Rng rng(424243);
        for (int n = 0; n < 50; ++n) {
            auto point = rng.point(ms.certificate_context->size());
            expect(ms.certificate->evaluate(point) == 0, "certificate sample is nonzero");
        }
    });

    criterion("11 randomized property suites (>= 200 cases each)", [&] {
        Rng rng(5550123);
        auto cat2 = lorentzian_2plus1();
        auto cat3 = lorentzian_3plus1();

        // coboundaries satisfy the cocycle identity
        for (int n = 0; n < 150; ++n) {
            Bivector r = testsupport::random_bivector(cat2.algebra, rng, 4);
            expect(cocycle_defect(cat2.algebra, coboundary_cocommutator(cat2.algebra, r)).empty(),
                   "cocycle defect on a 2+1 coboundary");
        }
        for (int n = 0; n < 60; ++n) {
            Bivector r = testsupport::random_bivector(cat3.algebra, rng, 3);
            expect(cocycle_defect(cat3.algebra, coboundary_cocommutator(cat3.algebra, r)).empty(),
                   "cocycle defect on a 3+1 coboundary");
        }

        // double dualization is the identity
        for (int n = 0; n < 120; ++n) {
            LieAlgebra g = cat2.algebra.substitute(
                {{"Lambda", rng.rational()}, {"z", rng.nonzero_rational()}});
            expect(dual_bracket(dual_cocommutator(g)) == g, "double dual differs (2+1)");
        }
        for (int n = 0; n < 80; ++n) {
            LieAlgebra g = cat3.algebra.substitute(
                {{"eta", rng.rational()}, {"z", rng.nonzero_rational()}});
            expect(dual_bracket(dual_cocommutator(g)) == g, "double dual differs (3+1)");
        }

        // cosymmetry implies coisotropy; verdicts match dual inclusions
        auto ds2 = dual_splitting(cat2.splitting);
        auto closure = [](const LieAlgebra& dual, const std::vector<size_t>& a,
                          const std::vector<size_t>& b, const std::vector<size_t>& allowed) {
            std::vector<bool> ok(dual.dim(), false);
            for (size_t i : allowed) ok[i] = true;
            for (size_t i : a)
                for (size_t j : b)
                    for (const auto& [k, c] : dual.bracket_basis(i, j))
                        if (!ok[k]) return false;
            return true;
        };
        for (int n = 0; n < 200; ++n) {
            Bivector r = testsupport::random_bivector(cat2.algebra, rng, 3);
            Cocommutator d = coboundary_cocommutator(cat2.algebra, r);
            const bool coiso = coisotropy_check(cat2.algebra, d, cat2.splitting).ok;
            const bool cored = coreductivity_check(cat2.algebra, d, cat2.splitting).ok;
            const bool cosym = cosymmetry_check(cat2.algebra, d, cat2.splitting).ok;
            if (cosym) expect(coiso, "cosymmetric but not coisotropic");
            LieAlgebra dual = transpose_table(d);
            expect(coiso == closure(dual, ds2.h, ds2.h, ds2.h), "coisotropy vs dual closure");
            expect(cored == closure(dual, ds2.h, ds2.t, ds2.t), "coreductivity vs dual closure");
            expect(cosym == (closure(dual, ds2.t, ds2.t, ds2.h) && coiso),
                   "cosymmetry vs dual closure");
        }

        // cosymmetric coboundary bialgebras have torsion-free duals
        auto ht = support_pairs(cat2.splitting, cat2.algebra.dim(), false, true, false);
        int torsion_cases = 0;
        for (int n = 0; n < 120; ++n) {
            Bivector r = testsupport::random_bivector_on(cat2.algebra, rng, ht);
            Cocommutator d = coboundary_cocommutator(cat2.algebra, r);
            expect(cosymmetry_check(cat2.algebra, d, cat2.splitting).ok,
                   "h^t-supported coboundary is not cosymmetric");
            LieAlgebra dual = transpose_table(d);
            if (!dual.jacobi_defect().empty()) continue;
            expect(canonical_torsion(dual, ds2).empty(), "nonzero torsion");
            ++torsion_cases;
        }
        for (int n = 0; n < 200; ++n) {
            std::map<std::string, Rational> at{{"Lambda", rng.rational()},
                                               {"z", rng.nonzero_rational()}};
            LieAlgebra ga = cat2.algebra.substitute(at);
            Bivector ra =
                cat2.r->substitute(at) * Scalar::constant(ga.context(), rng.nonzero_rational());
            Cocommutator d = coboundary_cocommutator(ga, ra);
            LieAlgebra dual = dual_bracket(d);
            expect(canonical_torsion(dual, ds2).empty(), "nonzero torsion on a scaled kappa case");
            ++torsion_cases;
        }
        expect(torsion_cases >= 200, "not enough torsion cases");
    });

    criterion("12 file-format round trip and the fixtures command", [&] {
        for (const auto& id : catalog_ids()) {
            auto cat = find_catalog(id);
            ProblemDocument doc = document_from_catalog(*cat);
            ProblemDocument doc2 = parse_problem(serialize_problem(doc));
            expect(doc == doc2, id + ": document round trip changed the value");
            ProblemInstance inst = instantiate(doc2);
            expect(inst.algebra == cat->algebra, id + ": algebra changed across the round trip");
            expect(inst.r && *inst.r == *cat->r, id + ": r-matrix changed across the round trip");
            expect(inst.splitting == cat->splitting, id + ": splitting changed");
        }
        expect(!cli_path.empty(), "CLI path not supplied as argv[1]");
        const std::string cmd = "\"" + cli_path + "\" fixtures > /dev/null 2>&1";
        expect(std::system(cmd.c_str()) == 0, "fixtures subcommand exited nonzero");
    });

    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
