#pragma once

#include <iostream>

#include <json.hpp>

#include "liedual/fixtures.hpp"

namespace liedual {

/// Report payload shared by the text and JSON renderers. Every numeric
/// entry is an exact coefficient expression string; both renderings are
/// generated from this one value.
struct Report {
    struct Term {
        std::string gen, coeff;
    };
    struct WedgeTermR {
        std::string a, b, coeff;
    };
    struct BracketRow {
        std::string x, y;
        std::vector<Term> terms;
    };
    struct DeltaRow {
        std::string gen;
        std::vector<WedgeTermR> terms;
    };
    struct OffendingRow {
        std::string condition, generator, block, a, b, coeff;
    };
    struct VerdictSection {
        bool coisotropic = false, coreductive = false, cosymmetric = false;
        std::vector<OffendingRow> offending;
    };
    struct DualSection {
        std::vector<std::string> basis;
        std::vector<std::string> h_perp, t_perp;
        std::vector<BracketRow> brackets;
        std::vector<DeltaRow> dual_cocommutator;
    };
    struct CurvatureRow {
        std::string x, y, z;
        std::vector<Term> terms;
    };
    struct RicciRow {
        std::string y, z, coeff;
    };
    struct GeometrySection {
        std::vector<std::string> t_perp;
        std::vector<BracketRow> torsion; // x, y -> components
        std::vector<CurvatureRow> curvature;
        std::vector<RicciRow> ricci;
    };
    struct MetricSection {
        size_t dimension = 0;
        std::vector<std::vector<std::vector<std::string>>> basis; // list of matrices
        std::string verdict;                                      // "yes" | "no" | "conditional"
        std::vector<std::string> witness_coeffs;
        std::vector<std::vector<std::string>> witness_form;
        std::string certificate;
        std::vector<std::string> genericity;
    };
    struct ScanReduction {
        size_t rank = 0;
        std::vector<std::string> pivot_pairs;
        std::vector<std::vector<std::string>> rows;
        std::vector<std::vector<std::string>> solution_basis;
        std::vector<std::string> genericity;
    };
    struct ScanSpecial {
        std::vector<std::pair<std::string, std::string>> bindings;
        ScanReduction coisotropy, coreductivity, cosymmetry;
    };
    struct ScanSection {
        std::vector<std::string> support;
        ScanReduction coisotropy, coreductivity, cosymmetry;
        std::vector<ScanSpecial> specials;
    };
    struct FixtureSection {
        std::vector<FixtureResult> results;
        bool all_passed = true;
    };

    std::string command;
    std::string source;
    std::vector<std::pair<std::string, std::string>> substitutions;

    std::optional<VerdictSection> verdicts;
    std::optional<DualSection> dual;
    std::optional<GeometrySection> geometry;
    std::optional<MetricSection> metric;
    std::optional<ScanSection> scan;
    std::optional<FixtureSection> fixtures;
};

namespace report_detail {

inline nlohmann::ordered_json terms_json(const std::vector<Report::Term>& terms)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto& t : terms) a.push_back({{"gen", t.gen}, {"coeff", t.coeff}});
    return a;
}

inline nlohmann::ordered_json reduction_json(const Report::ScanReduction& r)
{
    nlohmann::ordered_json j;
    j["rank"] = r.rank;
    j["pivot_pairs"] = r.pivot_pairs;
    j["rows"] = r.rows;
    j["solution_basis"] = r.solution_basis;
    j["genericity"] = r.genericity;
    return j;
}

inline std::string terms_text(const std::vector<Report::Term>& terms)
{
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        s += "(" + terms[i].coeff + ") " + terms[i].gen;
    }
    return s;
}

inline void reduction_text(std::ostream& os, const std::string& label,
                           const Report::ScanReduction& r, const std::vector<std::string>& support)
{
    os << "  " << label << ": rank " << r.rank;
    if (!r.pivot_pairs.empty()) {
        os << ", pivots on";
        for (const auto& p : r.pivot_pairs) os << " " << p;
    }
    os << "\n";
    for (const auto& row : r.rows) {
        os << "    constraint:";
        bool printed = false;
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] == "0") continue;
            os << (printed ? " + " : " ") << "(" << row[c] << ")*" << support[c];
            printed = true;
        }
        os << " = 0\n";
    }
    os << "    admissible space dimension: " << r.solution_basis.size() << "\n";
    if (!r.genericity.empty()) {
        os << "    assuming nonzero:";
        for (const auto& g : r.genericity) os << " " << g;
        os << "\n";
    }
}

} // namespace report_detail

inline nlohmann::ordered_json render_json(const Report& rep)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["command"] = rep.command;
    j["source"] = rep.source;
    if (!rep.substitutions.empty()) {
        ordered_json sub = ordered_json::object();
        for (const auto& [k, v] : rep.substitutions) sub[k] = v;
        j["substitutions"] = std::move(sub);
    }
    if (rep.verdicts) {
        ordered_json v;
        v["coisotropic"] = rep.verdicts->coisotropic;
        v["coreductive"] = rep.verdicts->coreductive;
        v["cosymmetric"] = rep.verdicts->cosymmetric;
        v["offending"] = ordered_json::array();
        for (const auto& o : rep.verdicts->offending)
            v["offending"].push_back({{"condition", o.condition},
                                      {"generator", o.generator},
                                      {"block", o.block},
                                      {"a", o.a},
                                      {"b", o.b},
                                      {"coeff", o.coeff}});
        j["verdicts"] = std::move(v);
    }
    if (rep.dual) {
        ordered_json d;
        d["basis"] = rep.dual->basis;
        d["h_perp"] = rep.dual->h_perp;
        d["t_perp"] = rep.dual->t_perp;
        d["brackets"] = ordered_json::array();
        for (const auto& b : rep.dual->brackets)
            d["brackets"].push_back(
                {{"x", b.x}, {"y", b.y}, {"terms", report_detail::terms_json(b.terms)}});
        d["dual_cocommutator"] = ordered_json::array();
        for (const auto& row : rep.dual->dual_cocommutator) {
            ordered_json terms = ordered_json::array();
            for (const auto& t : row.terms)
                terms.push_back({{"a", t.a}, {"b", t.b}, {"coeff", t.coeff}});
            d["dual_cocommutator"].push_back({{"gen", row.gen}, {"terms", std::move(terms)}});
        }
        j["dual"] = std::move(d);
    }
    if (rep.geometry) {
        ordered_json g;
        g["t_perp"] = rep.geometry->t_perp;
        g["torsion"] = ordered_json::array();
        for (const auto& t : rep.geometry->torsion)
            g["torsion"].push_back(
                {{"x", t.x}, {"y", t.y}, {"terms", report_detail::terms_json(t.terms)}});
        g["curvature"] = ordered_json::array();
        for (const auto& c : rep.geometry->curvature)
            g["curvature"].push_back({{"x", c.x},
                                      {"y", c.y},
                                      {"z", c.z},
                                      {"terms", report_detail::terms_json(c.terms)}});
        g["ricci"] = ordered_json::array();
        for (const auto& r : rep.geometry->ricci)
            g["ricci"].push_back({{"y", r.y}, {"z", r.z}, {"coeff", r.coeff}});
        j["geometry"] = std::move(g);
    }
    if (rep.metric) {
        ordered_json m;
        m["dimension"] = rep.metric->dimension;
        m["basis"] = rep.metric->basis;
        m["nondegenerate_exists"] = rep.metric->verdict;
        if (!rep.metric->witness_coeffs.empty()) {
            m["witness_coeffs"] = rep.metric->witness_coeffs;
            m["witness_form"] = rep.metric->witness_form;
        }
        m["certificate"] = rep.metric->certificate;
        m["genericity"] = rep.metric->genericity;
        j["metric"] = std::move(m);
    }
    if (rep.scan) {
        ordered_json s;
        s["support"] = rep.scan->support;
        s["coisotropy"] = report_detail::reduction_json(rep.scan->coisotropy);
        s["coreductivity"] = report_detail::reduction_json(rep.scan->coreductivity);
        s["cosymmetry"] = report_detail::reduction_json(rep.scan->cosymmetry);
        s["specials"] = ordered_json::array();
        for (const auto& sp : rep.scan->specials) {
            ordered_json e;
            ordered_json bind = ordered_json::object();
            for (const auto& [k, v] : sp.bindings) bind[k] = v;
            e["bindings"] = std::move(bind);
            e["coisotropy"] = report_detail::reduction_json(sp.coisotropy);
            e["coreductivity"] = report_detail::reduction_json(sp.coreductivity);
            e["cosymmetry"] = report_detail::reduction_json(sp.cosymmetry);
            s["specials"].push_back(std::move(e));
        }
        j["scan"] = std::move(s);
    }
    if (rep.fixtures) {
        ordered_json f = ordered_json::array();
        for (const auto& r : rep.fixtures->results)
            f.push_back({{"name", r.name},
                         {"source", r.source},
                         {"passed", r.passed},
                         {"detail", r.detail}});
        j["fixtures"] = std::move(f);
        j["fixtures_all_passed"] = rep.fixtures->all_passed;
    }
    return j;
}

inline void render_text(std::ostream& os, const Report& rep)
{
    os << rep.command << " " << rep.source << "\n";
    if (!rep.substitutions.empty()) {
        os << "substitutions:";
        for (const auto& [k, v] : rep.substitutions) os << " " << k << " = " << v;
        os << "\n";
    }
    auto yesno = [](bool b) { return b ? "true" : "false"; };
    if (rep.verdicts) {
        os << "coisotropic:  " << yesno(rep.verdicts->coisotropic) << "\n";
        os << "coreductive:  " << yesno(rep.verdicts->coreductive) << "\n";
        os << "cosymmetric:  " << yesno(rep.verdicts->cosymmetric) << "\n";
        for (const auto& o : rep.verdicts->offending)
            os << "  " << o.condition << " fails: delta(" << o.generator << ") has (" << o.coeff
               << ") " << o.a << "^" << o.b << " in the " << o.block << " block\n";
    }
    if (rep.dual) {
        os << "dual basis:";
        for (const auto& n : rep.dual->basis) os << " " << n;
        os << "\n";
        os << "h-perp:";
        for (const auto& n : rep.dual->h_perp) os << " " << n;
        os << "   t-perp:";
        for (const auto& n : rep.dual->t_perp) os << " " << n;
        os << "\n";
        os << "dual brackets (nonzero):\n";
        for (const auto& b : rep.dual->brackets)
            os << "  [" << b.x << ", " << b.y << "] = " << report_detail::terms_text(b.terms)
               << "\n";
        if (!rep.dual->dual_cocommutator.empty()) {
            os << "dual cocommutator (nonzero):\n";
            for (const auto& row : rep.dual->dual_cocommutator) {
                os << "  delta*(" << row.gen << ") =";
                for (size_t i = 0; i < row.terms.size(); ++i) {
                    const auto& t = row.terms[i];
                    os << (i ? " + (" : " (") << t.coeff << ") " << t.a << "^" << t.b;
                }
                os << "\n";
            }
        }
    }
    if (rep.geometry) {
        os << "t-perp basis:";
        for (const auto& n : rep.geometry->t_perp) os << " " << n;
        os << "\n";
        os << "torsion (nonzero): " << (rep.geometry->torsion.empty() ? "none\n" : "\n");
        for (const auto& t : rep.geometry->torsion)
            os << "  T(" << t.x << ", " << t.y << ") = " << report_detail::terms_text(t.terms)
               << "\n";
        os << "curvature (nonzero): " << (rep.geometry->curvature.empty() ? "none\n" : "\n");
        for (const auto& c : rep.geometry->curvature)
            os << "  R(" << c.x << ", " << c.y << ")" << c.z << " = "
               << report_detail::terms_text(c.terms) << "\n";
        os << "Ricci (nonzero): " << (rep.geometry->ricci.empty() ? "none\n" : "\n");
        for (const auto& r : rep.geometry->ricci)
            os << "  S(" << r.y << ", " << r.z << ") = " << r.coeff << "\n";
    }
    if (rep.metric) {
        os << "invariant symmetric forms on t-perp: dimension " << rep.metric->basis.size()
           << " (block size " << rep.metric->dimension << ")\n";
        for (const auto& m : rep.metric->basis) {
            os << "  basis form:\n";
            for (const auto& row : m) {
                os << "   ";
                for (const auto& e : row) os << " " << e;
                os << "\n";
            }
        }
        os << "nondegenerate_exists: " << rep.metric->verdict << "\n";
        if (!rep.metric->witness_coeffs.empty()) {
            os << "  witness coefficients:";
            for (const auto& c : rep.metric->witness_coeffs) os << " " << c;
            os << "\n";
        }
        os << "  certificate determinant: " << rep.metric->certificate << "\n";
        if (!rep.metric->genericity.empty()) {
            os << "  assuming nonzero:";
            for (const auto& g : rep.metric->genericity) os << " " << g;
            os << "\n";
        }
    }
    if (rep.scan) {
        os << "generic r-matrix support:";
        for (const auto& p : rep.scan->support) os << " " << p;
        os << "\n";
        report_detail::reduction_text(os, "coisotropy", rep.scan->coisotropy, rep.scan->support);
        report_detail::reduction_text(os, "coreductivity", rep.scan->coreductivity,
                                      rep.scan->support);
        report_detail::reduction_text(os, "cosymmetry", rep.scan->cosymmetry, rep.scan->support);
        for (const auto& sp : rep.scan->specials) {
            os << "  at";
            for (const auto& [k, v] : sp.bindings) os << " " << k << " = " << v;
            os << ":\n";
            report_detail::reduction_text(os, "  coisotropy", sp.coisotropy, rep.scan->support);
            report_detail::reduction_text(os, "  coreductivity", sp.coreductivity,
                                          rep.scan->support);
            report_detail::reduction_text(os, "  cosymmetry", sp.cosymmetry, rep.scan->support);
        }
    }
    if (rep.fixtures) {
        for (const auto& r : rep.fixtures->results) {
            os << (r.passed ? "PASS " : "FAIL ") << r.name << "  [" << r.source << "]";
            if (!r.passed) os << "\n     " << r.detail;
            os << "\n";
        }
        os << (rep.fixtures->all_passed ? "all fixtures passed" : "fixture failures present")
           << "\n";
    }
}

} // namespace liedual
