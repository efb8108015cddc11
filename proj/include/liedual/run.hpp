#pragma once

#include "liedual/report.hpp"

namespace liedual {

inline ProblemInstance instance_from_catalog(const CatalogEntry& cat,
                                             const std::map<std::string, Rational>& bindings = {})
{
    ProblemInstance inst{cat.algebra, cat.r, std::nullopt, cat.splitting, {}};
    if (!bindings.empty()) {
        inst.algebra = inst.algebra.substitute(bindings);
        if (inst.r) inst.r = inst.r->substitute(bindings);
    }
    return inst;
}

namespace run_detail {

inline Cocommutator delta_of(const ProblemInstance& inst)
{
    if (inst.delta) return *inst.delta;
    if (inst.r) return coboundary_cocommutator(inst.algebra, *inst.r);
    throw InputError("this command needs a cocommutator: provide an r-matrix or a delta table");
}

inline std::vector<Report::Term> terms_of(const SparseVec& v, const Basis& basis)
{
    std::vector<Report::Term> out;
    for (const auto& [k, c] : v) out.push_back({basis.names[k], c.to_string()});
    return out;
}

inline std::vector<std::string> names_of(const std::vector<size_t>& idx, const Basis& basis)
{
    std::vector<std::string> out;
    for (size_t i : idx) out.push_back(basis.names[i]);
    return out;
}

inline void fill_offending(Report::VerdictSection& section, const char* condition,
                           const std::vector<OffendingComponent>& offending, const Basis& basis)
{
    for (const auto& o : offending)
        section.offending.push_back({condition, basis.names[o.generator], block_name(o.block),
                                     basis.names[o.component.first],
                                     basis.names[o.component.second], o.value.to_string()});
}

inline Report::ScanReduction reduction_section(const GenericRSystem::ConditionReduction& r,
                                               const std::vector<std::string>& pair_names)
{
    Report::ScanReduction out;
    out.rank = r.rank;
    for (size_t c : r.pivot_cols) out.pivot_pairs.push_back(pair_names[c]);
    for (const auto& row : r.rows) {
        std::vector<std::string> s;
        for (const auto& v : row) s.push_back(v.to_string());
        out.rows.push_back(std::move(s));
    }
    for (const auto& row : r.solution_basis) {
        std::vector<std::string> s;
        for (const auto& v : row) s.push_back(v.to_string());
        out.solution_basis.push_back(std::move(s));
    }
    for (const auto& g : r.genericity) out.genericity.push_back(g.to_string());
    return out;
}

inline std::vector<std::vector<std::string>> matrix_strings(const ScalarMatrix& m)
{
    std::vector<std::vector<std::string>> out;
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace run_detail

inline Report run_check(const ProblemInstance& inst)
{
    Report rep;
    rep.command = "check";
    Cocommutator delta = run_detail::delta_of(inst);
    ClassifyOutcome out = classify(make_bialgebra(inst.algebra, delta), inst.splitting);
    Report::VerdictSection v;
    v.coisotropic = out.verdict.coisotropic;
    v.coreductive = out.verdict.coreductive;
    v.cosymmetric = out.verdict.cosymmetric;
    const Basis& basis = inst.algebra.basis();
    run_detail::fill_offending(v, "coisotropy", out.verdict.offending_coisotropy, basis);
    run_detail::fill_offending(v, "coreductivity", out.verdict.offending_coreductivity, basis);
    run_detail::fill_offending(v, "cosymmetry", out.verdict.offending_cosymmetry, basis);
    rep.verdicts = std::move(v);
    return rep;
}

inline Report run_dualize(const ProblemInstance& inst)
{
    Report rep;
    rep.command = "dualize";
    Cocommutator delta = run_detail::delta_of(inst);
    LieBialgebra b = make_bialgebra(inst.algebra, delta);
    const LieAlgebra& dual = b.dual_algebra();
    SubalgebraSplitting ds = dual_splitting(inst.splitting);

    Report::DualSection d;
    d.basis = dual.basis().names;
    d.h_perp = run_detail::names_of(ds.h, dual.basis());
    d.t_perp = run_detail::names_of(ds.t, dual.basis());
    for (const auto& [ij, vec] : dual.table())
        d.brackets.push_back({dual.basis().names[ij.first], dual.basis().names[ij.second],
                              run_detail::terms_of(vec, dual.basis())});
    Cocommutator dstar = dual_cocommutator(inst.algebra);
    for (size_t i = 0; i < dstar.dim(); ++i) {
        if (dstar.value(i).is_zero()) continue;
        Report::DeltaRow row;
        row.gen = dstar.basis().names[i];
        for (const auto& [ab, c] : dstar.value(i).components())
            row.terms.push_back({dstar.basis().names[ab.first], dstar.basis().names[ab.second],
                                 c.to_string()});
        d.dual_cocommutator.push_back(std::move(row));
    }
    rep.dual = std::move(d);
    return rep;
}

inline Report run_geometry(const ProblemInstance& inst)
{
    Report rep;
    rep.command = "geometry";
    Cocommutator delta = run_detail::delta_of(inst);
    LieBialgebra b = make_bialgebra(inst.algebra, delta);
    const LieAlgebra& dual = b.dual_algebra();
    SubalgebraSplitting ds = dual_splitting(inst.splitting);
    GeometryReport geo = canonical_geometry(dual, ds);

    Report::GeometrySection g;
    g.t_perp = run_detail::names_of(ds.t, dual.basis());
    for (const auto& [xy, v] : geo.torsion)
        g.torsion.push_back({dual.basis().names[xy.first], dual.basis().names[xy.second],
                             run_detail::terms_of(v, dual.basis())});
    for (const auto& [key, v] : geo.curvature)
        g.curvature.push_back({dual.basis().names[std::get<0>(key)],
                               dual.basis().names[std::get<1>(key)],
                               dual.basis().names[std::get<2>(key)],
                               run_detail::terms_of(v, dual.basis())});
    for (const auto& [yz, c] : geo.ricci_tensor)
        g.ricci.push_back(
            {dual.basis().names[yz.first], dual.basis().names[yz.second], c.to_string()});
    rep.geometry = std::move(g);
    return rep;
}

inline Report run_metric(const ProblemInstance& inst)
{
    Report rep;
    rep.command = "metric";
    Cocommutator delta = run_detail::delta_of(inst);
    LieBialgebra b = make_bialgebra(inst.algebra, delta);
    MetricSolutionSpace ms = invariant_metric_space(b.dual_algebra(), dual_splitting(inst.splitting));

    Report::MetricSection m;
    m.dimension = ms.tperp_dim;
    for (const auto& form : ms.basis) m.basis.push_back(run_detail::matrix_strings(form));
    switch (ms.verdict) {
        case MetricSolutionSpace::Nondegenerate::No: m.verdict = "no"; break;
        case MetricSolutionSpace::Nondegenerate::Yes: m.verdict = "yes"; break;
        case MetricSolutionSpace::Nondegenerate::Conditional: m.verdict = "conditional"; break;
    }
    for (const auto& c : ms.witness_coeffs) m.witness_coeffs.push_back(to_string(c));
    if (ms.witness_form) m.witness_form = run_detail::matrix_strings(*ms.witness_form);
    m.certificate = ms.certificate ? ms.certificate->to_string() : "0";
    for (const auto& g : ms.genericity) m.genericity.push_back(g.to_string());
    rep.metric = std::move(m);
    return rep;
}

inline Report run_scan(const ProblemInstance& inst, bool hh, bool ht, bool tt,
                       std::vector<std::map<std::string, Rational>> specials)
{
    Report rep;
    rep.command = "scan-r";
    std::vector<std::pair<size_t, size_t>> support = inst.scan_support;
    if (support.empty()) support = support_pairs(inst.splitting, inst.algebra.dim(), hh, ht, tt);
    GenericRSystem sys = generic_r_analysis(inst.algebra, inst.splitting, support, specials);

    Report::ScanSection s;
    std::vector<std::string> pair_names;
    for (const auto& [i, j] : sys.support)
        pair_names.push_back(inst.algebra.basis().names[i] + "^" + inst.algebra.basis().names[j]);
    s.support = pair_names;
    s.coisotropy = run_detail::reduction_section(sys.coisotropy, pair_names);
    s.coreductivity = run_detail::reduction_section(sys.coreductivity, pair_names);
    s.cosymmetry = run_detail::reduction_section(sys.cosymmetry, pair_names);
    for (const auto& sp : sys.specials) {
        Report::ScanSpecial spec;
        for (const auto& [k, v] : sp.bindings) spec.bindings.emplace_back(k, to_string(v));
        spec.coisotropy = run_detail::reduction_section(sp.coisotropy, pair_names);
        spec.coreductivity = run_detail::reduction_section(sp.coreductivity, pair_names);
        spec.cosymmetry = run_detail::reduction_section(sp.cosymmetry, pair_names);
        s.specials.push_back(std::move(spec));
    }
    rep.scan = std::move(s);
    return rep;
}

inline Report run_fixture_suite(const std::vector<std::string>& ids)
{
    Report rep;
    rep.command = "fixtures";
    Report::FixtureSection section;
    for (const auto& id : ids) {
        auto cat = find_catalog(id);
        if (!cat) throw InputError("unknown catalog entry '" + id + "'");
        for (auto& r : run_fixtures(fixtures(*cat))) {
            r.name = id + ": " + r.name;
            section.all_passed &= r.passed;
            section.results.push_back(std::move(r));
        }
    }
    rep.fixtures = std::move(section);
    return rep;
}

} // namespace liedual
