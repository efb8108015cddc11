#pragma once

#include "liedual/duality.hpp"

namespace liedual {

/// Torsion of the canonical connection at the origin, T(e_a, e_b) over the
/// t-perp block, stored for a < b in basis order.
using TorsionTensor = std::map<std::pair<size_t, size_t>, SparseVec>;

/// Curvature R(e_a, e_b) e_c over t-perp, stored for a < b.
using CurvatureTensor = std::map<std::tuple<size_t, size_t, size_t>, SparseVec>;

/// Ricci components S(e_b, e_c) over t-perp.
using RicciTensor = std::map<std::pair<size_t, size_t>, Scalar>;

namespace detail {

inline void require_reductive_dual(const LieAlgebra& dual, const SubalgebraSplitting& ds,
                                   const char* where)
{
    require_h_subalgebra(dual, ds, where);
    if (!reductive_check(dual, ds))
        throw DomainError(std::string(where) +
                          ": the dual splitting is not reductive; the canonical "
                          "connection needs a coreductive bialgebra");
}

inline SparseVec project(const SparseVec& v, const std::vector<bool>& keep)
{
    SparseVec out;
    for (const auto& [k, c] : v)
        if (keep[k]) out.emplace_back(k, c);
    return out;
}

} // namespace detail

/// T(X,Y) = -[X,Y]_{*,t-perp} at the origin.
inline TorsionTensor canonical_torsion(const LieAlgebra& dual, const SubalgebraSplitting& ds)
{
    detail::require_reductive_dual(dual, ds, "canonical_torsion");
    std::vector<bool> in_t(dual.dim(), false);
    for (size_t i : ds.t) in_t[i] = true;
    std::vector<size_t> tperp = ds.t;
    std::sort(tperp.begin(), tperp.end());

    TorsionTensor out;
    for (size_t a = 0; a < tperp.size(); ++a) {
        for (size_t b = a + 1; b < tperp.size(); ++b) {
            SparseVec v = detail::project(dual.bracket_basis(tperp[a], tperp[b]), in_t);
            for (auto& [k, c] : v) c = -c;
            if (!v.empty()) out.emplace(std::make_pair(tperp[a], tperp[b]), std::move(v));
        }
    }
    return out;
}

/// R(X,Y)Z = -[[X,Y]_{*,h-perp}, Z]_* at the origin.
inline CurvatureTensor canonical_curvature(const LieAlgebra& dual, const SubalgebraSplitting& ds)
{
    detail::require_reductive_dual(dual, ds, "canonical_curvature");
    std::vector<bool> in_h(dual.dim(), false);
    for (size_t i : ds.h) in_h[i] = true;
    std::vector<size_t> tperp = ds.t;
    std::sort(tperp.begin(), tperp.end());

    CurvatureTensor out;
    for (size_t a = 0; a < tperp.size(); ++a) {
        for (size_t b = a + 1; b < tperp.size(); ++b) {
            SparseVec w = detail::project(dual.bracket_basis(tperp[a], tperp[b]), in_h);
            if (w.empty()) continue;
            for (size_t c : tperp) {
                SparseVec acc;
                for (const auto& [m, f] : w) sparse_add(acc, dual.bracket_basis(m, c), -f);
                if (!acc.empty())
                    out.emplace(std::make_tuple(tperp[a], tperp[b], c), std::move(acc));
            }
        }
    }
    return out;
}

/// Signed curvature value R(e_a, e_b) e_c for any orientation of (a, b).
inline SparseVec curvature_value(const CurvatureTensor& r, size_t a, size_t b, size_t c)
{
    if (a == b) return {};
    const bool flip = a > b;
    auto it = r.find(flip ? std::make_tuple(b, a, c) : std::make_tuple(a, b, c));
    if (it == r.end()) return {};
    SparseVec v = it->second;
    if (flip)
        for (auto& [k, s] : v) s = -s;
    return v;
}

/// S(Y,Z) = tr(X -> R(X,Y)Z) over the t-perp basis.
inline RicciTensor ricci(const CurvatureTensor& r, const SubalgebraSplitting& ds,
                         const ContextPtr& ctx)
{
    RicciTensor out;
    for (size_t b : ds.t) {
        for (size_t c : ds.t) {
            Scalar acc = Scalar::zero(ctx);
            for (size_t a : ds.t)
                for (const auto& [k, s] : curvature_value(r, a, b, c))
                    if (k == a) acc += s;
            if (!acc.is_zero()) out.emplace(std::make_pair(b, c), acc);
        }
    }
    return out;
}

/// Torsion, curvature and Ricci of the canonical connection on the dual
/// space at its origin.
struct GeometryReport {
    LieAlgebra dual_algebra;
    SubalgebraSplitting dual_split;
    TorsionTensor torsion;
    CurvatureTensor curvature;
    RicciTensor ricci_tensor;
};

inline GeometryReport canonical_geometry(const LieAlgebra& dual, const SubalgebraSplitting& ds)
{
    GeometryReport rep{dual, ds, canonical_torsion(dual, ds), canonical_curvature(dual, ds), {}};
    rep.ricci_tensor = ricci(rep.curvature, ds, dual.context());
    return rep;
}

/// Space of ad_{h-perp}-invariant symmetric bilinear forms on t-perp, and
/// the decision whether a nondegenerate one exists.
struct MetricSolutionSpace {
    enum class Nondegenerate { No, Yes, Conditional };

    size_t tperp_dim = 0;
    /// Invariant symmetric forms spanning the solution space, as matrices
    /// indexed by position in ds.t.
    std::vector<ScalarMatrix> basis;
    Nondegenerate verdict = Nondegenerate::No;
    /// Rational coefficients of a nondegenerate combination (Yes/Conditional).
    std::vector<Rational> witness_coeffs;
    std::optional<ScalarMatrix> witness_form;
    /// Determinant of the generic combination over the extended context
    /// (base parameters + one fresh coefficient per basis form). Identically
    /// zero exactly when verdict == No.
    std::optional<Scalar> certificate;
    ContextPtr certificate_context;
    /// Nonvanishing assumptions: determinant numerator of the witness (when
    /// not constant) and denominators met during solving.
    std::vector<Polynomial> genericity;
};

inline MetricSolutionSpace invariant_metric_space(const LieAlgebra& dual,
                                                  const SubalgebraSplitting& ds)
{
    detail::require_reductive_dual(dual, ds, "invariant_metric_space");
    const ContextPtr base = dual.context();
    const size_t n = ds.t.size();
    MetricSolutionSpace out;
    out.tperp_dim = n;
    out.certificate = Scalar::zero(base);
    out.certificate_context = base;

    // Unknowns B_pq for p <= q (positions into ds.t).
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p; q < n; ++q) unknowns.emplace_back(p, q);
    auto unknown_index = [&](size_t p, size_t q) {
        if (p > q) std::swap(p, q);
        return (p * (2 * n - p + 1)) / 2 + (q - p);
    };

    // position of a dual basis index inside ds.t
    std::vector<long> pos(dual.dim(), -1);
    for (size_t k = 0; k < n; ++k) pos[ds.t[k]] = long(k);

    // Invariance rows: B([Z,e_p], e_q) + B(e_p, [Z,e_q]) = 0 for every
    // h-perp generator Z and p <= q.
    std::vector<std::vector<Scalar>> rows;
    for (size_t z : ds.h) {
        for (const auto& [p, q] : unknowns) {
            std::vector<Scalar> row(unknowns.size(), Scalar::zero(base));
            bool nonzero = false;
            auto accumulate = [&](size_t moved, size_t fixed) {
                for (const auto& [k, c] : dual.bracket_basis(z, ds.t[moved])) {
                    if (pos[k] < 0)
                        throw InternalError("invariant_metric_space: reductivity violated");
                    row[unknown_index(size_t(pos[k]), fixed)] += c;
                    nonzero = true;
                }
            };
            accumulate(p, q);
            accumulate(q, p);
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    ScalarMatrix m(rows.size(), unknowns.size(), base);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns.size(); ++c) m.at(r, c) = rows[r][c];
    ReducedSystem sys = row_reduce(std::move(m));
    out.genericity = sys.genericity;

    for (const auto& sol : nullspace_basis(sys)) {
        ScalarMatrix form(n, n, base);
        for (size_t k = 0; k < unknowns.size(); ++k) {
            form.at(unknowns[k].first, unknowns[k].second) = sol[k];
            form.at(unknowns[k].second, unknowns[k].first) = sol[k];
        }
        out.basis.push_back(std::move(form));
    }

    // Exact re-check of invariance for every returned basis form.
    for (const auto& form : out.basis) {
        for (size_t z : ds.h)
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    Scalar acc = Scalar::zero(base);
                    for (const auto& [k, c] : dual.bracket_basis(z, ds.t[p]))
                        acc += c * form.at(size_t(pos[k]), q);
                    for (const auto& [k, c] : dual.bracket_basis(z, ds.t[q]))
                        acc += c * form.at(p, size_t(pos[k]));
                    if (!acc.is_zero())
                        throw InternalError("invariant_metric_space: solution fails the re-check");
                }
    }

    if (out.basis.empty()) {
        out.verdict = MetricSolutionSpace::Nondegenerate::No;
        return out;
    }

    // Generic combination over fresh coefficients c_k; its determinant is
    // the nondegeneracy certificate.
    std::vector<std::string> names = base->names();
    for (size_t k = 0; k < out.basis.size(); ++k) names.push_back("c" + std::to_string(k + 1));
    const ContextPtr ext = make_context(names);
    out.certificate_context = ext;
    ScalarMatrix generic(n, n, ext);
    for (size_t k = 0; k < out.basis.size(); ++k) {
        const Scalar ck = Scalar::parameter(ext, base->size() + k);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q)
                generic.at(p, q) += out.basis[k].at(p, q).lift(ext) * ck;
    }
    out.certificate = determinant(generic);

    if (out.certificate->is_zero()) {
        out.verdict = MetricSolutionSpace::Nondegenerate::No;
        return out;
    }

    // Search for a rational witness combination: the sum of the
    // diagonal-supported forms first (yields the identity when available),
    // then unit vectors, the all-ones sum, and a deterministic integer sweep.
    std::vector<std::vector<Rational>> candidates;
    {
        std::vector<Rational> diag(out.basis.size(), Rational(0));
        bool any = false;
        for (size_t k = 0; k < out.basis.size(); ++k) {
            bool is_diag = true, has_diag = false;
            for (size_t p = 0; p < n && is_diag; ++p)
                for (size_t q = 0; q < n; ++q) {
                    if (p != q && !out.basis[k].at(p, q).is_zero()) is_diag = false;
                    if (p == q && !out.basis[k].at(p, q).is_zero()) has_diag = true;
                }
            if (is_diag && has_diag) {
                diag[k] = 1;
                any = true;
            }
        }
        if (any) candidates.push_back(std::move(diag));
    }
    for (size_t k = 0; k < out.basis.size(); ++k) {
        std::vector<Rational> c(out.basis.size(), Rational(0));
        c[k] = 1;
        candidates.push_back(std::move(c));
    }
    candidates.emplace_back(out.basis.size(), Rational(1));
    for (int sweep = 1; sweep <= 8; ++sweep) {
        std::vector<Rational> c;
        for (size_t k = 0; k < out.basis.size(); ++k)
            c.emplace_back(1 + ((sweep * (k + 3) + k * k) % (2 * size_t(sweep) + 3)));
        candidates.push_back(std::move(c));
    }

    for (const auto& c : candidates) {
        ScalarMatrix form(n, n, base);
        for (size_t k = 0; k < out.basis.size(); ++k)
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    form.at(p, q) += out.basis[k].at(p, q) * c[k];
        Scalar det = determinant(form);
        if (det.is_zero()) continue;
        out.witness_coeffs = c;
        out.witness_form = form;
        if (det.is_constant()) {
            out.verdict = MetricSolutionSpace::Nondegenerate::Yes;
        } else {
            out.verdict = MetricSolutionSpace::Nondegenerate::Conditional;
            detail::record_genericity(out.genericity, det);
        }
        return out;
    }

    // Certificate is nonzero but no rational point was found; report the
    // conditional verdict with the certificate itself as the obstruction.
    out.verdict = MetricSolutionSpace::Nondegenerate::Conditional;
    detail::record_genericity(out.genericity, *out.certificate);
    return out;
}

} // namespace liedual
