#pragma once

#include <json.hpp>

#include "liedual/catalog.hpp"
#include "liedual/duality.hpp"

namespace liedual {

/// Problem-definition document, mirroring the JSON file format:
/// top-level keys `parameters`, `basis`, `brackets`, optional `r` or
/// `delta` (not both), `splitting`, optional `substitute`, optional
/// `scan_support`. All coefficients are expression strings.
struct ProblemDocument {
    struct BracketTerm {
        std::string gen, coeff;
        bool operator==(const BracketTerm&) const = default;
    };
    struct BracketEntry {
        std::string x, y;
        std::vector<BracketTerm> terms;
        bool operator==(const BracketEntry&) const = default;
    };
    struct RTerm {
        std::string x, y, coeff;
        bool operator==(const RTerm&) const = default;
    };
    struct WedgeTerm {
        std::string a, b, coeff;
        bool operator==(const WedgeTerm&) const = default;
    };
    struct DeltaEntry {
        std::string gen;
        std::vector<WedgeTerm> terms;
        bool operator==(const DeltaEntry&) const = default;
    };
    struct SupportPair {
        std::string x, y;
        bool operator==(const SupportPair&) const = default;
    };

    std::vector<std::string> parameters;
    std::vector<std::string> basis;
    std::vector<BracketEntry> brackets;
    std::optional<std::vector<RTerm>> r;
    std::optional<std::vector<DeltaEntry>> delta;
    std::vector<std::string> split_h, split_t;
    std::map<std::string, std::string> substitute;
    std::optional<std::vector<SupportPair>> scan_support;

    bool operator==(const ProblemDocument&) const = default;
};

namespace detail {

inline std::pair<size_t, size_t> line_col_of_offset(std::string_view text, size_t byte)
{
    size_t line = 1, col = 1;
    for (size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline const nlohmann::json& need(const nlohmann::json& j, const char* key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing required key '" + key + "'");
    return *it;
}

inline std::string need_string(const nlohmann::json& j, const char* key, const std::string& where)
{
    const auto& v = need(j, key, where);
    if (!v.is_string()) throw InputError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw InputError(where + ": expected a list of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace detail

inline ProblemDocument parse_problem(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError("document is not valid JSON at " + std::to_string(line) + ":" +
                         std::to_string(col));
    }
    if (!j.is_object()) throw InputError("document root must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        static const char* known[] = {"parameters", "basis",      "brackets", "r",
                                      "delta",      "splitting",  "substitute", "scan_support"};
        bool ok = false;
        for (const char* k : known) ok |= key == k;
        if (!ok) throw InputError("unknown top-level key '" + key + "'");
    }

    ProblemDocument doc;
    doc.parameters = detail::string_list(detail::need(j, "parameters", "document"), "parameters");
    doc.basis = detail::string_list(detail::need(j, "basis", "document"), "basis");

    const auto& brackets = detail::need(j, "brackets", "document");
    if (!brackets.is_array()) throw InputError("brackets: expected a list");
    for (size_t i = 0; i < brackets.size(); ++i) {
        const std::string where = "brackets[" + std::to_string(i) + "]";
        const auto& e = brackets[i];
        if (!e.is_object()) throw InputError(where + ": expected an object");
        ProblemDocument::BracketEntry entry;
        entry.x = detail::need_string(e, "x", where);
        entry.y = detail::need_string(e, "y", where);
        const auto& terms = detail::need(e, "terms", where);
        if (!terms.is_array()) throw InputError(where + ".terms: expected a list");
        for (size_t t = 0; t < terms.size(); ++t) {
            const std::string tw = where + ".terms[" + std::to_string(t) + "]";
            entry.terms.push_back({detail::need_string(terms[t], "gen", tw),
                                   detail::need_string(terms[t], "coeff", tw)});
        }
        doc.brackets.push_back(std::move(entry));
    }

    if (j.contains("r")) {
        const auto& r = j["r"];
        if (!r.is_array()) throw InputError("r: expected a list");
        doc.r.emplace();
        for (size_t i = 0; i < r.size(); ++i) {
            const std::string where = "r[" + std::to_string(i) + "]";
            doc.r->push_back({detail::need_string(r[i], "x", where),
                              detail::need_string(r[i], "y", where),
                              detail::need_string(r[i], "coeff", where)});
        }
    }
    if (j.contains("delta")) {
        const auto& d = j["delta"];
        if (!d.is_array()) throw InputError("delta: expected a list");
        doc.delta.emplace();
        for (size_t i = 0; i < d.size(); ++i) {
            const std::string where = "delta[" + std::to_string(i) + "]";
            ProblemDocument::DeltaEntry entry;
            entry.gen = detail::need_string(d[i], "gen", where);
            const auto& terms = detail::need(d[i], "terms", where);
            if (!terms.is_array()) throw InputError(where + ".terms: expected a list");
            for (size_t t = 0; t < terms.size(); ++t) {
                const std::string tw = where + ".terms[" + std::to_string(t) + "]";
                entry.terms.push_back({detail::need_string(terms[t], "a", tw),
                                       detail::need_string(terms[t], "b", tw),
                                       detail::need_string(terms[t], "coeff", tw)});
            }
            doc.delta->push_back(std::move(entry));
        }
    }
    if (doc.r && doc.delta)
        throw InputError("at most one of 'r' and 'delta' may drive the cocommutator");

    const auto& split = detail::need(j, "splitting", "document");
    doc.split_h = detail::string_list(detail::need(split, "h", "splitting"), "splitting.h");
    doc.split_t = detail::string_list(detail::need(split, "t", "splitting"), "splitting.t");

    if (j.contains("substitute")) {
        const auto& sub = j["substitute"];
        if (!sub.is_object()) throw InputError("substitute: expected an object of rationals");
        for (const auto& [name, v] : sub.items()) {
            if (!v.is_string()) throw InputError("substitute." + name + ": expected a rational string");
            doc.substitute.emplace(name, v.get<std::string>());
        }
    }
    if (j.contains("scan_support")) {
        const auto& sup = j["scan_support"];
        if (!sup.is_array()) throw InputError("scan_support: expected a list");
        doc.scan_support.emplace();
        for (size_t i = 0; i < sup.size(); ++i) {
            const std::string where = "scan_support[" + std::to_string(i) + "]";
            doc.scan_support->push_back({detail::need_string(sup[i], "x", where),
                                         detail::need_string(sup[i], "y", where)});
        }
    }
    return doc;
}

inline std::string serialize_problem(const ProblemDocument& doc)
{
    nlohmann::ordered_json j;
    j["parameters"] = doc.parameters;
    j["basis"] = doc.basis;
    j["brackets"] = nlohmann::ordered_json::array();
    for (const auto& b : doc.brackets) {
        nlohmann::ordered_json e{{"x", b.x}, {"y", b.y}};
        e["terms"] = nlohmann::ordered_json::array();
        for (const auto& t : b.terms) e["terms"].push_back({{"gen", t.gen}, {"coeff", t.coeff}});
        j["brackets"].push_back(std::move(e));
    }
    if (doc.r) {
        j["r"] = nlohmann::ordered_json::array();
        for (const auto& t : *doc.r)
            j["r"].push_back({{"x", t.x}, {"y", t.y}, {"coeff", t.coeff}});
    }
    if (doc.delta) {
        j["delta"] = nlohmann::ordered_json::array();
        for (const auto& d : *doc.delta) {
            nlohmann::ordered_json e{{"gen", d.gen}};
            e["terms"] = nlohmann::ordered_json::array();
            for (const auto& t : d.terms)
                e["terms"].push_back({{"a", t.a}, {"b", t.b}, {"coeff", t.coeff}});
            j["delta"].push_back(std::move(e));
        }
    }
    j["splitting"] = {{"h", doc.split_h}, {"t", doc.split_t}};
    if (!doc.substitute.empty()) {
        nlohmann::ordered_json sub = nlohmann::ordered_json::object();
        for (const auto& [k, v] : doc.substitute) sub[k] = v;
        j["substitute"] = std::move(sub);
    }
    if (doc.scan_support) {
        j["scan_support"] = nlohmann::ordered_json::array();
        for (const auto& p : *doc.scan_support)
            j["scan_support"].push_back({{"x", p.x}, {"y", p.y}});
    }
    return j.dump(2) + "\n";
}

/// Fully built problem: validated algebra plus the optional cocommutator
/// sources and the splitting.
struct ProblemInstance {
    LieAlgebra algebra;
    std::optional<Bivector> r;
    std::optional<Cocommutator> delta;
    SubalgebraSplitting splitting;
    std::vector<std::pair<size_t, size_t>> scan_support;
};

/// Builds and validates the document; `extra_bindings` (e.g. from the
/// command line) are applied after the document's own substitutions.
inline ProblemInstance instantiate(const ProblemDocument& doc,
                                   const std::map<std::string, Rational>& extra_bindings = {})
{
    ContextPtr ctx = make_context(doc.parameters);

    Basis basis{doc.basis};
    basis.validate();
    for (const auto& name : doc.basis) {
        if (!is_identifier(name)) throw InputError("invalid generator name: '" + name + "'");
        if (ctx->index_of(name)) throw InputError("generator '" + name + "' shadows a parameter");
    }

    auto gen_index = [&](const std::string& name, const std::string& where) {
        auto i = basis.index_of(name);
        if (!i) throw InputError(where + ": unknown generator '" + name + "'");
        return *i;
    };
    auto coeff = [&](const std::string& text, const std::string& where) {
        try {
            return parse_scalar(text, ctx);
        } catch (const ParseError& e) {
            throw InputError(where + ": " + e.what());
        }
    };

    LieAlgebra::Builder builder(basis, ctx);
    std::vector<std::vector<bool>> seen(basis.dim(), std::vector<bool>(basis.dim(), false));
    for (size_t i = 0; i < doc.brackets.size(); ++i) {
        const std::string where = "brackets[" + std::to_string(i) + "]";
        const auto& e = doc.brackets[i];
        const size_t x = gen_index(e.x, where), y = gen_index(e.y, where);
        if (x == y) throw InputError(where + ": bracket of a generator with itself");
        if (seen[x][y]) throw InputError(where + ": duplicate bracket entry for (" + e.x + ", " + e.y + ")");
        seen[x][y] = seen[y][x] = true;
        for (size_t t = 0; t < e.terms.size(); ++t) {
            const std::string tw = where + ".terms[" + std::to_string(t) + "]";
            builder.add(x, y, gen_index(e.terms[t].gen, tw), coeff(e.terms[t].coeff, tw));
        }
    }

    LieAlgebra algebra = [&] {
        try {
            return builder.build(true);
        } catch (const DomainError& e) {
            throw InputError(std::string("bracket table is not a Lie algebra: ") + e.what());
        }
    }();

    std::optional<Bivector> r;
    if (doc.r) {
        r.emplace(algebra.dim(), ctx);
        for (size_t i = 0; i < doc.r->size(); ++i) {
            const std::string where = "r[" + std::to_string(i) + "]";
            const auto& t = (*doc.r)[i];
            r->add_term(gen_index(t.x, where), gen_index(t.y, where), coeff(t.coeff, where));
        }
    }
    std::optional<Cocommutator> delta;
    if (doc.delta) {
        delta.emplace(basis, ctx);
        std::vector<bool> dseen(basis.dim(), false);
        for (size_t i = 0; i < doc.delta->size(); ++i) {
            const std::string where = "delta[" + std::to_string(i) + "]";
            const auto& d = (*doc.delta)[i];
            const size_t g = gen_index(d.gen, where);
            if (dseen[g]) throw InputError(where + ": duplicate cocommutator entry for " + d.gen);
            dseen[g] = true;
            Bivector b(basis.dim(), ctx);
            for (size_t t = 0; t < d.terms.size(); ++t) {
                const std::string tw = where + ".terms[" + std::to_string(t) + "]";
                b.add_term(gen_index(d.terms[t].a, tw), gen_index(d.terms[t].b, tw),
                           coeff(d.terms[t].coeff, tw));
            }
            delta->set_value(g, std::move(b));
        }
    }

    std::vector<size_t> h, t;
    for (const auto& n : doc.split_h) h.push_back(gen_index(n, "splitting.h"));
    for (const auto& n : doc.split_t) t.push_back(gen_index(n, "splitting.t"));
    SubalgebraSplitting splitting = SubalgebraSplitting::make(basis.dim(), std::move(h), std::move(t));

    std::vector<std::pair<size_t, size_t>> support;
    if (doc.scan_support)
        for (size_t i = 0; i < doc.scan_support->size(); ++i) {
            const std::string where = "scan_support[" + std::to_string(i) + "]";
            support.emplace_back(gen_index((*doc.scan_support)[i].x, where),
                                 gen_index((*doc.scan_support)[i].y, where));
        }

    // document substitutions first, then the caller's
    std::map<std::string, Rational> bindings;
    for (const auto& [name, text] : doc.substitute) {
        if (!ctx->index_of(name)) throw InputError("substitute: unknown parameter '" + name + "'");
        auto q = parse_rational(text);
        if (!q) throw InputError("substitute." + name + ": not a rational: '" + text + "'");
        bindings.emplace(name, *q);
    }
    auto apply = [&](const std::map<std::string, Rational>& bind) {
        if (bind.empty()) return;
        algebra = algebra.substitute(bind);
        if (r) r = r->substitute(bind);
        if (delta) delta = delta->substitute(bind);
    };
    apply(bindings);
    apply(extra_bindings);

    return ProblemInstance{std::move(algebra), std::move(r), std::move(delta),
                           std::move(splitting), std::move(support)};
}

/// Renders a catalog entry as a problem document.
inline ProblemDocument document_from_catalog(const CatalogEntry& cat)
{
    ProblemDocument doc;
    doc.parameters = cat.algebra.context()->names();
    doc.basis = cat.algebra.basis().names;
    for (const auto& [ij, vec] : cat.algebra.table()) {
        ProblemDocument::BracketEntry e;
        e.x = doc.basis[ij.first];
        e.y = doc.basis[ij.second];
        for (const auto& [k, c] : vec) e.terms.push_back({doc.basis[k], c.to_string()});
        doc.brackets.push_back(std::move(e));
    }
    if (cat.r) {
        doc.r.emplace();
        for (const auto& [ij, c] : cat.r->components())
            doc.r->push_back({doc.basis[ij.first], doc.basis[ij.second], c.to_string()});
    }
    for (size_t i : cat.splitting.h) doc.split_h.push_back(doc.basis[i]);
    for (size_t i : cat.splitting.t) doc.split_t.push_back(doc.basis[i]);
    return doc;
}

} // namespace liedual
