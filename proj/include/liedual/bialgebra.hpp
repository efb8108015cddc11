#pragma once

#include <memory>

#include "liedual/wedge.hpp"

namespace liedual {

/// Dual-basis naming: N dualizes to N*, a second dualization strips the star.
inline std::string dual_name(const std::string& name)
{
    if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
    return name + "*";
}

inline Basis dual_basis(const Basis& b)
{
    Basis d;
    for (const auto& n : b.names) d.names.push_back(dual_name(n));
    return d;
}

/// Linear map delta: g -> g^g stored as one bivector per basis generator,
/// together with the basis of the space it lives on.
class Cocommutator {
public:
    Cocommutator(Basis basis, ContextPtr ctx)
        : basis_(std::move(basis)), ctx_(std::move(ctx))
    {
        basis_.validate();
        values_.assign(basis_.dim(), Bivector(basis_.dim(), ctx_));
    }

    const Basis& basis() const { return basis_; }
    const ContextPtr& context() const { return ctx_; }
    size_t dim() const { return basis_.dim(); }

    const Bivector& value(size_t i) const { return values_.at(i); }
    void set_value(size_t i, Bivector b)
    {
        if (b.dim() != dim()) throw InternalError("cocommutator value has wrong dimension");
        require_same_context(ctx_, b.context(), "cocommutator value");
        values_.at(i) = std::move(b);
    }

    /// delta applied to a coordinate vector, by linearity.
    Bivector apply(const SparseVec& x) const
    {
        Bivector out(dim(), ctx_);
        for (const auto& [i, c] : x) out += values_.at(i) * c;
        return out;
    }

    bool is_zero() const
    {
        for (const auto& v : values_)
            if (!v.is_zero()) return false;
        return true;
    }

    Cocommutator substitute(const std::map<std::string, Rational>& bindings) const
    {
        Cocommutator out(basis_, Scalar::zero(ctx_).substitute(bindings).context());
        for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i].substitute(bindings);
        return out;
    }

    bool operator==(const Cocommutator& o) const
    {
        return basis_ == o.basis_ && same_context(ctx_, o.ctx_) && values_ == o.values_;
    }
    bool operator!=(const Cocommutator& o) const { return !(*this == o); }

private:
    Basis basis_;
    ContextPtr ctx_;
    std::vector<Bivector> values_;
};

/// delta(X_i) = [X_i (x) 1 + 1 (x) X_i, r] for every generator.
inline Cocommutator coboundary_cocommutator(const LieAlgebra& alg, const Bivector& r)
{
    require_same_context(alg.context(), r.context(), "coboundary_cocommutator");
    if (r.dim() != alg.dim()) throw DomainError("coboundary_cocommutator: dimension mismatch");
    Cocommutator delta(alg.basis(), alg.context());
    for (size_t i = 0; i < alg.dim(); ++i) delta.set_value(i, ad_on_bivector(alg, i, r));
    return delta;
}

/// Nonzero values of delta([X_i,X_j]) - ad_j-term - ad_i-term, keyed by i<j;
/// empty iff delta is a 1-cocycle.
using CocycleDefect = std::map<std::pair<size_t, size_t>, Bivector>;

inline CocycleDefect cocycle_defect(const LieAlgebra& alg, const Cocommutator& delta)
{
    require_same_context(alg.context(), delta.context(), "cocycle_defect");
    if (!(alg.basis() == delta.basis()))
        throw DomainError("cocycle_defect: cocommutator lives on a different basis");
    CocycleDefect out;
    for (size_t i = 0; i < alg.dim(); ++i) {
        for (size_t j = i + 1; j < alg.dim(); ++j) {
            // [delta(X_i), X_j(x)1 + 1(x)X_j] = -ad_j(delta(X_i))
            Bivector d = delta.apply(alg.bracket_basis(i, j));
            d += ad_on_bivector(alg, j, delta.value(i));
            d += -ad_on_bivector(alg, i, delta.value(j));
            if (!d.is_zero()) out.emplace(std::make_pair(i, j), std::move(d));
        }
    }
    return out;
}

/// Raw transpose of a cocommutator into a bracket table on the dual basis:
/// delta(X_c) = sum_{a<b} d_c^{ab} X_a ^ X_b induces
/// [x^a, x^b]_* = sum_c d_c^{ab} x^c. No validity check.
inline LieAlgebra transpose_table(const Cocommutator& delta)
{
    LieAlgebra::Builder b(dual_basis(delta.basis()), delta.context());
    for (size_t c = 0; c < delta.dim(); ++c)
        for (const auto& [ab, coeff] : delta.value(c).components())
            b.add(ab.first, ab.second, c, coeff);
    return b.build(false);
}

/// Dual Lie bracket; checks that the result satisfies the Jacobi identity,
/// which is exactly the co-Jacobi condition for delta.
inline LieAlgebra dual_bracket(const Cocommutator& delta)
{
    LieAlgebra dual = transpose_table(delta);
    JacobiDefect defect = dual.jacobi_defect();
    if (!defect.empty()) {
        const auto& [ijk, v] = *defect.begin();
        throw DomainError("co-Jacobi fails: dual bracket violates Jacobi on (" +
                          dual.basis().names[std::get<0>(ijk)] + ", " +
                          dual.basis().names[std::get<1>(ijk)] + ", " +
                          dual.basis().names[std::get<2>(ijk)] + "): defect " +
                          sparse_to_string(v, dual.basis()));
    }
    return dual;
}

/// Dual cocommutator delta*(x^c) = sum_{a<b} c_ab^c x^a ^ x^b over the
/// dual basis.
inline Cocommutator dual_cocommutator(const LieAlgebra& alg)
{
    Cocommutator out(dual_basis(alg.basis()), alg.context());
    std::vector<Bivector> acc(alg.dim(), Bivector(alg.dim(), alg.context()));
    for (const auto& [ab, vec] : alg.table())
        for (const auto& [c, coeff] : vec) acc[c].add_term(ab.first, ab.second, coeff);
    for (size_t c = 0; c < alg.dim(); ++c) out.set_value(c, std::move(acc[c]));
    return out;
}

/// Validated pair (g, [.,.], delta). Construction rejects any cocycle or
/// co-Jacobi violation, reporting the first offending component.
class LieBialgebra {
public:
    LieBialgebra(LieAlgebra algebra, Cocommutator delta)
        : algebra_(std::move(algebra)), delta_(std::move(delta))
    {
        require_same_context(algebra_.context(), delta_.context(), "make_bialgebra");
        if (!(algebra_.basis() == delta_.basis()))
            throw DomainError("make_bialgebra: cocommutator lives on a different basis");
        CocycleDefect defect = cocycle_defect(algebra_, delta_);
        if (!defect.empty()) {
            const auto& [ij, d] = *defect.begin();
            throw DomainError("cocycle identity fails on (" + algebra_.basis().names[ij.first] +
                              ", " + algebra_.basis().names[ij.second] + "): defect " +
                              d.to_string(algebra_.basis()));
        }
        dual_ = std::make_shared<LieAlgebra>(dual_bracket(delta_));
    }

    const LieAlgebra& algebra() const { return algebra_; }
    const Cocommutator& cocommutator() const { return delta_; }
    const LieAlgebra& dual_algebra() const { return *dual_; }

private:
    LieAlgebra algebra_;
    Cocommutator delta_;
    std::shared_ptr<const LieAlgebra> dual_;
};

inline LieBialgebra make_bialgebra(LieAlgebra algebra, Cocommutator delta)
{
    return LieBialgebra(std::move(algebra), std::move(delta));
}

} // namespace liedual
