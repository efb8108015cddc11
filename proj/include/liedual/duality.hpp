#pragma once

#include "liedual/bialgebra.hpp"
#include "liedual/matrix.hpp"

namespace liedual {

/// Splitting of the dual basis induced by a primal splitting: the duals of
/// t-generators annihilate h (they form h-perp), the duals of h-generators
/// form t-perp. Dual indices are aligned with primal indices, so this is a
/// pure role swap; applying it twice returns the original splitting.
inline SubalgebraSplitting dual_splitting(const SubalgebraSplitting& s)
{
    return SubalgebraSplitting{s.t, s.h};
}

struct OffendingComponent {
    size_t generator;
    Block block;
    std::pair<size_t, size_t> component;
    Scalar value;
};

struct CheckResult {
    bool ok = true;
    std::vector<OffendingComponent> offending;
    explicit operator bool() const { return ok; }
};

namespace detail {

/// Collects components of delta(X_i), i in `gens`, that land in any of the
/// requested blocks.
inline CheckResult blocks_vanish(const Cocommutator& delta, const SubalgebraSplitting& s,
                                 const std::vector<size_t>& gens, std::initializer_list<Block> blocks)
{
    CheckResult res;
    for (size_t i : gens) {
        for (const auto& [ab, c] : delta.value(i).components()) {
            const Block blk = block_of(s, ab.first, ab.second);
            for (Block want : blocks) {
                if (blk == want) {
                    res.ok = false;
                    res.offending.push_back({i, blk, ab, c});
                }
            }
        }
    }
    return res;
}

} // namespace detail

/// Coisotropy: delta(h) has no t^t component.
inline CheckResult coisotropy_check(const LieAlgebra& alg, const Cocommutator& delta,
                                    const SubalgebraSplitting& s)
{
    require_h_subalgebra(alg, s, "coisotropy_check");
    return detail::blocks_vanish(delta, s, s.h, {Block::TT});
}

/// Coreductivity: delta(t) has no h^t component.
inline CheckResult coreductivity_check(const LieAlgebra& alg, const Cocommutator& delta,
                                       const SubalgebraSplitting& s)
{
    require_h_subalgebra(alg, s, "coreductivity_check");
    return detail::blocks_vanish(delta, s, s.t, {Block::HT});
}

/// Cosymmetry: delta(h) lies in h^t exactly (no h^h and no t^t component).
inline CheckResult cosymmetry_check(const LieAlgebra& alg, const Cocommutator& delta,
                                    const SubalgebraSplitting& s)
{
    require_h_subalgebra(alg, s, "cosymmetry_check");
    return detail::blocks_vanish(delta, s, s.h, {Block::HH, Block::TT});
}

struct ConditionVerdict {
    bool coisotropic = false, coreductive = false, cosymmetric = false;
    std::vector<OffendingComponent> offending_coisotropy;
    std::vector<OffendingComponent> offending_coreductivity;
    std::vector<OffendingComponent> offending_cosymmetry;
};

struct ClassifyOutcome {
    ConditionVerdict verdict;
    LieAlgebra dual_algebra;
    SubalgebraSplitting dual_split;
};

namespace detail {

/// [span_a, span_b]_* components outside `allowed` on the dual algebra.
inline bool dual_inclusion_holds(const LieAlgebra& dual, const std::vector<size_t>& a,
                                 const std::vector<size_t>& b, const std::vector<size_t>& allowed)
{
    std::vector<bool> ok(dual.dim(), false);
    for (size_t i : allowed) ok[i] = true;
    for (size_t i : a)
        for (size_t j : b)
            for (const auto& [k, c] : dual.bracket_basis(i, j))
                if (!ok[k]) return false;
    return true;
}

} // namespace detail

/// Runs the three primal block checks and cross-validates each against the
/// equivalent bracket inclusion on the dual algebra:
///   [h-perp, h-perp]* in h-perp   <=>  coisotropic
///   [h-perp, t-perp]* in t-perp   <=>  coreductive
///   [t-perp, t-perp]* in h-perp (together with coisotropy) <=> cosymmetric
/// A disagreement between the two computations is an internal error.
inline ClassifyOutcome classify(const LieBialgebra& b, const SubalgebraSplitting& s)
{
    const LieAlgebra& alg = b.algebra();
    require_h_subalgebra(alg, s, "classify");

    ConditionVerdict v;
    CheckResult coiso = coisotropy_check(alg, b.cocommutator(), s);
    CheckResult cored = coreductivity_check(alg, b.cocommutator(), s);
    CheckResult cosym = cosymmetry_check(alg, b.cocommutator(), s);
    v.coisotropic = coiso.ok;
    v.coreductive = cored.ok;
    v.cosymmetric = cosym.ok;
    v.offending_coisotropy = std::move(coiso.offending);
    v.offending_coreductivity = std::move(cored.offending);
    v.offending_cosymmetry = std::move(cosym.offending);

    LieAlgebra dual = b.dual_algebra();
    SubalgebraSplitting ds = dual_splitting(s);

    const bool dual_coiso = detail::dual_inclusion_holds(dual, ds.h, ds.h, ds.h);
    const bool dual_cored = detail::dual_inclusion_holds(dual, ds.h, ds.t, ds.t);
    const bool dual_cosym = detail::dual_inclusion_holds(dual, ds.t, ds.t, ds.h) && dual_coiso;

    if (dual_coiso != v.coisotropic || dual_cored != v.coreductive || dual_cosym != v.cosymmetric)
        throw InternalError("classify: primal block verdicts disagree with dual bracket inclusions");

    return ClassifyOutcome{std::move(v), std::move(dual), std::move(ds)};
}

/// Linear analysis of a generic r-matrix on a fixed support: one fresh
/// parameter per support pair, block-vanishing constraints per condition,
/// each reduced over the fraction field of the base ring.
struct GenericRSystem {
    struct ConditionReduction {
        /// Reduced constraint rows, coefficients over the base context,
        /// one column per support pair. Rows are in reduced echelon form.
        std::vector<std::vector<Scalar>> rows;
        size_t rank = 0;
        std::vector<size_t> pivot_cols;
        /// Basis of the admissible coefficient space (kernel of the rows).
        std::vector<std::vector<Scalar>> solution_basis;
        /// Polynomials in the base parameters assumed nonzero by the
        /// reduction.
        std::vector<Polynomial> genericity;
    };

    struct SpecialCase {
        std::map<std::string, Rational> bindings;
        ConditionReduction coisotropy, coreductivity, cosymmetry;
    };

    std::vector<std::pair<size_t, size_t>> support;
    std::vector<std::string> fresh_names;
    ConditionReduction coisotropy, coreductivity, cosymmetry;
    std::vector<SpecialCase> specials;
};

namespace detail {

/// Extracts the linear form of `value` in the fresh parameters (those at
/// index >= base_size in the extended context): value = sum_k coeff_k * p_k
/// with coeff_k in the base fraction field. The fresh parameters enter the
/// coboundary linearly through r and never through a denominator, so the
/// denominator is base-only; anything else is an internal error.
inline std::vector<Scalar> linear_form(const Scalar& value, const ContextPtr& base,
                                       const ContextPtr& extended, size_t n_fresh)
{
    const size_t base_size = base->size();
    auto drop_fresh = [&](const Exponents& e) {
        Exponents be(base_size);
        for (size_t k = 0; k < base_size; ++k) be[k] = e[k];
        return be;
    };

    Polynomial den(base);
    for (const auto& [e, c] : value.denominator().terms()) {
        for (size_t k = base_size; k < extended->size(); ++k)
            if (e[k] != 0)
                throw InternalError("generic r analysis: fresh parameter in a denominator");
        den.add_term(drop_fresh(e), c);
    }

    std::vector<Polynomial> coeffs(n_fresh, Polynomial::zero(base));
    for (const auto& [e, c] : value.numerator().terms()) {
        size_t which = extended->size();
        for (size_t k = base_size; k < extended->size(); ++k) {
            if (e[k] == 0) continue;
            if (e[k] > 1 || which != extended->size())
                throw InternalError("generic r analysis: constraint not linear in the r coefficients");
            which = k;
        }
        if (which == extended->size())
            throw InternalError("generic r analysis: constraint not homogeneous in the r coefficients");
        coeffs[which - base_size].add_term(drop_fresh(e), c);
    }
    std::vector<Scalar> row;
    row.reserve(n_fresh);
    for (auto& p : coeffs) row.emplace_back(std::move(p), den);
    return row;
}

inline GenericRSystem::ConditionReduction reduce_rows(std::vector<std::vector<Scalar>> rows,
                                                      size_t cols, const ContextPtr& ctx)
{
    // drop duplicate and zero rows up front
    std::vector<std::vector<Scalar>> kept;
    for (auto& r : rows) {
        bool zero = true;
        for (const auto& s : r)
            if (!s.is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        bool dup = false;
        for (const auto& k : kept)
            if (k == r) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(r));
    }

    ScalarMatrix m(kept.size(), cols, ctx);
    for (size_t r = 0; r < kept.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = kept[r][c];
    ReducedSystem sys = row_reduce(std::move(m));

    GenericRSystem::ConditionReduction out;
    out.rank = sys.rank();
    out.pivot_cols = sys.pivot_cols;
    out.genericity = sys.genericity;
    for (size_t r = 0; r < out.rank; ++r) {
        std::vector<Scalar> row;
        for (size_t c = 0; c < cols; ++c) row.push_back(sys.rref.at(r, c));
        out.rows.push_back(std::move(row));
    }
    out.solution_basis = nullspace_basis(sys);
    return out;
}

} // namespace detail

inline GenericRSystem generic_r_analysis(const LieAlgebra& alg, const SubalgebraSplitting& s,
                                         std::vector<std::pair<size_t, size_t>> support,
                                         const std::vector<std::map<std::string, Rational>>& specials = {})
{
    require_h_subalgebra(alg, s, "generic_r_analysis");

    GenericRSystem out;
    for (auto [i, j] : support) {
        if (i >= alg.dim() || j >= alg.dim() || i == j)
            throw InputError("generic_r_analysis: invalid support pair");
        if (i > j) std::swap(i, j);
        auto p = std::make_pair(i, j);
        if (std::find(out.support.begin(), out.support.end(), p) == out.support.end())
            out.support.push_back(p);
    }

    const ContextPtr base = alg.context();
    std::vector<std::string> names = base->names();
    for (const auto& [i, j] : out.support) {
        out.fresh_names.push_back("r_" + std::to_string(i) + "_" + std::to_string(j));
        names.push_back(out.fresh_names.back());
    }
    const ContextPtr ext = make_context(names);
    const size_t n_fresh = out.support.size();

    // Lift the algebra and form the generic r-matrix.
    LieAlgebra::Builder lifted(alg.basis(), ext);
    for (const auto& [ij, vec] : alg.table())
        for (const auto& [k, c] : vec) lifted.add(ij.first, ij.second, k, c.lift(ext));
    const LieAlgebra ealg = lifted.build(false);

    Bivector r(ealg.dim(), ext);
    for (size_t k = 0; k < n_fresh; ++k)
        r.add_term(out.support[k].first, out.support[k].second,
                   Scalar::parameter(ext, base->size() + k));
    const Cocommutator delta = coboundary_cocommutator(ealg, r);

    auto rows_for = [&](const std::vector<size_t>& gens,
                        std::initializer_list<Block> blocks) {
        std::vector<std::vector<Scalar>> rows;
        for (size_t g : gens)
            for (const auto& [ab, c] : delta.value(g).components()) {
                const Block blk = block_of(s, ab.first, ab.second);
                for (Block want : blocks)
                    if (blk == want) rows.push_back(detail::linear_form(c, base, ext, n_fresh));
            }
        return rows;
    };

    const auto coiso_rows = rows_for(s.h, {Block::TT});
    const auto cored_rows = rows_for(s.t, {Block::HT});
    const auto cosym_rows = rows_for(s.h, {Block::HH, Block::TT});

    out.coisotropy = detail::reduce_rows(coiso_rows, n_fresh, base);
    out.coreductivity = detail::reduce_rows(cored_rows, n_fresh, base);
    out.cosymmetry = detail::reduce_rows(cosym_rows, n_fresh, base);

    for (const auto& bindings : specials) {
        GenericRSystem::SpecialCase sc;
        sc.bindings = bindings;
        auto subst_rows = [&](const std::vector<std::vector<Scalar>>& rows) {
            std::vector<std::vector<Scalar>> sub;
            for (const auto& row : rows) {
                std::vector<Scalar> srow;
                for (const auto& c : row) srow.push_back(c.substitute(bindings));
                sub.push_back(std::move(srow));
            }
            return sub;
        };
        const ContextPtr rctx = Scalar::zero(base).substitute(bindings).context();
        sc.coisotropy = detail::reduce_rows(subst_rows(coiso_rows), n_fresh, rctx);
        sc.coreductivity = detail::reduce_rows(subst_rows(cored_rows), n_fresh, rctx);
        sc.cosymmetry = detail::reduce_rows(subst_rows(cosym_rows), n_fresh, rctx);
        out.specials.push_back(std::move(sc));
    }
    return out;
}

/// All index pairs of the selected blocks, in the natural i<j enumeration.
inline std::vector<std::pair<size_t, size_t>> support_pairs(const SubalgebraSplitting& s, size_t dim,
                                                            bool hh, bool ht, bool tt)
{
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) {
            switch (block_of(s, i, j)) {
                case Block::HH:
                    if (hh) out.emplace_back(i, j);
                    break;
                case Block::HT:
                    if (ht) out.emplace_back(i, j);
                    break;
                case Block::TT:
                    if (tt) out.emplace_back(i, j);
                    break;
            }
        }
    return out;
}

} // namespace liedual
