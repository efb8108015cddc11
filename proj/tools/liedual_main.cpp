// Command-line interface: structural analysis of Lie bialgebras and the
// geometry of their complementary dual spaces, over exact symbolic
// coefficients.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liedual/run.hpp"

namespace {

using namespace liedual;

struct GlobalOptions {
    std::vector<std::string> at;
    std::string format = "text";
    bool strict = false;
};

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& at)
{
    std::map<std::string, Rational> out;
    for (const auto& spec : at) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw InputError("--at expects NAME=RATIONAL, got '" + spec + "'");
        std::string name = spec.substr(0, eq);
        auto value = parse_rational(spec.substr(eq + 1));
        if (!is_identifier(name) || !value)
            throw InputError("--at expects NAME=RATIONAL, got '" + spec + "'");
        if (out.count(name)) throw InputError("--at binds '" + name + "' twice");
        out.emplace(std::move(name), *value);
    }
    return out;
}

struct Target {
    ProblemInstance instance;
    std::string source;
    bool is_catalog = false;
    std::string catalog_id;
};

Target load_target(const std::string& spec, const std::map<std::string, Rational>& bindings)
{
    if (auto cat = find_catalog(spec)) {
        for (const auto& [name, v] : bindings)
            if (!cat->algebra.context()->index_of(name))
                throw InputError("--at: unknown parameter '" + name + "' for " + spec);
        return Target{instance_from_catalog(*cat, bindings), spec, true, spec};
    }
    if (!std::filesystem::exists(spec))
        throw InputError("'" + spec + "' is neither a catalog entry nor a file");
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    ProblemDocument doc = parse_problem(buf.str());
    return Target{instantiate(doc, bindings), spec, false, ""};
}

void emit(const Report& rep, const GlobalOptions& opt)
{
    if (opt.format == "json")
        std::cout << render_json(rep).dump(2) << "\n";
    else
        render_text(std::cout, rep);
}

int exit_status(const Report& rep, const GlobalOptions& opt)
{
    if (rep.fixtures && !rep.fixtures->all_passed) return 1;
    if (opt.strict && rep.verdicts &&
        !(rep.verdicts->coisotropic && rep.verdicts->coreductive && rep.verdicts->cosymmetric))
        return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Lie bialgebra duality toolkit"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--at", opt.at, "bind a parameter, NAME=RATIONAL (repeatable)")
        ->type_name("NAME=RATIONAL");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--strict", opt.strict, "exit 1 when a condition check reports false");

    std::string target_spec;
    auto add_target = [&](CLI::App* sub) {
        sub->fallthrough(); // global flags may follow the subcommand
        sub->add_option("target", target_spec, "catalog entry id or problem file")->required();
    };

    auto* cmd_check =
        app.add_subcommand("check", "coisotropy / coreductivity / cosymmetry verdicts");
    add_target(cmd_check);
    auto* cmd_dualize = app.add_subcommand("dualize", "dual bracket table and dual cocommutator");
    add_target(cmd_dualize);
    auto* cmd_geometry =
        app.add_subcommand("geometry", "canonical-connection torsion, curvature, Ricci");
    add_target(cmd_geometry);
    auto* cmd_metric = app.add_subcommand("metric", "invariant bilinear forms on the dual space");
    add_target(cmd_metric);

    auto* cmd_scan = app.add_subcommand("scan-r", "linear constraints on a generic r-matrix");
    add_target(cmd_scan);
    std::string support = "all";
    cmd_scan->add_option("--support", support, "support blocks for the generic r-matrix")
        ->check(CLI::IsMember({"all", "hh", "ht", "tt", "hh+ht", "ht+tt", "hh+tt"}))
        ->capture_default_str();
    std::vector<std::string> special_specs;
    cmd_scan->add_option("--special", special_specs,
                         "re-evaluate the constraints at NAME=RATIONAL (repeatable)");

    auto* cmd_fixtures =
        app.add_subcommand("fixtures", "run the built-in expectation suite for catalog entries");
    cmd_fixtures->fallthrough();
    std::vector<std::string> fixture_ids;
    cmd_fixtures->add_option("targets", fixture_ids, "catalog entry ids (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        Report rep;
        if (app.got_subcommand(cmd_fixtures)) {
            rep = run_fixture_suite(fixture_ids.empty() ? catalog_ids() : fixture_ids);
            rep.source = fixture_ids.empty() ? "all catalog entries" : fixture_ids.front();
        } else {
            auto bindings = parse_bindings(opt.at);
            Target target = load_target(target_spec, bindings);

            if (app.got_subcommand(cmd_check)) {
                rep = run_check(target.instance);
            } else if (app.got_subcommand(cmd_dualize)) {
                rep = run_dualize(target.instance);
            } else if (app.got_subcommand(cmd_geometry)) {
                rep = run_geometry(target.instance);
            } else if (app.got_subcommand(cmd_metric)) {
                rep = run_metric(target.instance);
            } else if (app.got_subcommand(cmd_scan)) {
                const bool hh = support == "all" || support.find("hh") != std::string::npos;
                const bool ht = support == "all" || support.find("ht") != std::string::npos;
                const bool tt = support == "all" || support.find("tt") != std::string::npos;
                std::vector<std::map<std::string, Rational>> specials;
                // catalog runs always re-evaluate at the flat limit
                if (target.catalog_id == "lorentzian-2+1")
                    specials.push_back({{"Lambda", Rational(0)}});
                else if (target.catalog_id == "lorentzian-3+1")
                    specials.push_back({{"eta", Rational(0)}});
                for (const auto& spec : special_specs) {
                    auto m = parse_bindings({spec});
                    specials.emplace_back(m.begin(), m.end());
                }
                // drop special evaluations that bind already-substituted names
                std::erase_if(specials, [&](const auto& m) {
                    for (const auto& [k, v] : m)
                        if (!target.instance.algebra.context()->index_of(k)) return true;
                    return false;
                });
                rep = run_scan(target.instance, hh, ht, tt, std::move(specials));
            }
            rep.source = target.source;
            for (const auto& [k, v] : bindings)
                rep.substitutions.emplace_back(k, to_string(v));
        }
        emit(rep, opt);
        return exit_status(rep, opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
