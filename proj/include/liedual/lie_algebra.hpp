#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "liedual/matrix.hpp"
#include "liedual/scalar.hpp"

namespace liedual {

struct Basis {
    std::vector<std::string> names;

    size_t dim() const { return names.size(); }

    std::optional<size_t> index_of(std::string_view name) const
    {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        return std::nullopt;
    }

    void validate() const
    {
        for (size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw InputError("empty generator name");
            for (size_t j = 0; j < i; ++j)
                if (names[i] == names[j]) throw InputError("duplicate generator name: '" + names[i] + "'");
        }
    }

    bool operator==(const Basis& o) const { return names == o.names; }
};

/// Coordinate vector as sorted (index, coefficient) pairs without zeros.
using SparseVec = std::vector<std::pair<size_t, Scalar>>;

inline void sparse_add(SparseVec& v, size_t index, const Scalar& c)
{
    if (c.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& p, size_t i) { return p.first < i; });
    if (it != v.end() && it->first == index) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {index, c});
    }
}

inline void sparse_add(SparseVec& v, const SparseVec& w, const Scalar& factor)
{
    for (const auto& [i, c] : w) sparse_add(v, i, c * factor);
}

inline std::string sparse_to_string(const SparseVec& v, const Basis& basis)
{
    if (v.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ") " << basis.names.at(i);
    }
    return out.str();
}

/// Defect components of [[X_i,X_j],X_k] + cyclic, keyed by i<j<k.
using JacobiDefect = std::map<std::tuple<size_t, size_t, size_t>, SparseVec>;

/// Finite-dimensional Lie algebra given by an ordered basis and sparse
/// structure constants. Only pairs i<j are stored; the other orientation
/// is produced by negation, so antisymmetry cannot be violated by data.
class LieAlgebra {
public:
    class Builder;

    const Basis& basis() const { return basis_; }
    const ContextPtr& context() const { return ctx_; }
    size_t dim() const { return basis_.dim(); }

    const std::map<std::pair<size_t, size_t>, SparseVec>& table() const { return table_; }

    /// [X_i, X_j] as a coordinate vector.
    SparseVec bracket_basis(size_t i, size_t j) const
    {
        if (i >= dim() || j >= dim()) throw InternalError("bracket_basis: index out of range");
        if (i == j) return {};
        const bool flip = i > j;
        auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == table_.end()) return {};
        if (!flip) return it->second;
        SparseVec v = it->second;
        for (auto& [k, c] : v) c = -c;
        return v;
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const
    {
        if (x.size() != dim() || y.size() != dim())
            throw DomainError("bracket: coordinate vector has wrong dimension");
        SparseVec acc;
        for (size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                sparse_add(acc, bracket_basis(i, j), x[i] * y[j]);
            }
        }
        std::vector<Scalar> out(dim(), Scalar::zero(ctx_));
        for (const auto& [k, c] : acc) out[k] = c;
        return out;
    }

    SparseVec bracket_sparse(const SparseVec& x, const SparseVec& y) const
    {
        SparseVec acc;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) sparse_add(acc, bracket_basis(i, j), a * b);
        return acc;
    }

    JacobiDefect jacobi_defect() const
    {
        JacobiDefect defect;
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = i + 1; j < dim(); ++j)
                for (size_t k = j + 1; k < dim(); ++k) {
                    SparseVec acc;
                    auto cyc = [&](size_t a, size_t b, size_t c) {
                        for (const auto& [m, coeff] : bracket_basis(a, b))
                            sparse_add(acc, bracket_basis(m, c), coeff);
                    };
                    cyc(i, j, k);
                    cyc(j, k, i);
                    cyc(k, i, j);
                    if (!acc.empty()) defect.emplace(std::make_tuple(i, j, k), std::move(acc));
                }
        return defect;
    }

    /// True iff the span of the given basis indices is bracket-closed.
    /// The empty span closes trivially.
    bool is_subalgebra(const std::vector<size_t>& indices) const
    {
        std::vector<bool> in(dim(), false);
        for (size_t i : indices) {
            if (i >= dim()) throw DomainError("is_subalgebra: index out of range");
            in[i] = true;
        }
        for (size_t a = 0; a < indices.size(); ++a)
            for (size_t b = a + 1; b < indices.size(); ++b)
                for (const auto& [k, c] : bracket_basis(indices[a], indices[b]))
                    if (!in[k]) return false;
        return true;
    }

    /// Matrix of ad_{X_i} = [X_i, .] in the basis (columns are images).
    ScalarMatrix adjoint_matrix(size_t i) const
    {
        if (i >= dim()) throw DomainError("adjoint_matrix: index out of range");
        ScalarMatrix m(dim(), dim(), ctx_);
        for (size_t j = 0; j < dim(); ++j)
            for (const auto& [k, c] : bracket_basis(i, j)) m.at(k, j) = c;
        return m;
    }

    LieAlgebra substitute(const std::map<std::string, Rational>& bindings) const
    {
        LieAlgebra out;
        out.basis_ = basis_;
        out.ctx_ = Scalar::zero(ctx_).substitute(bindings).context();
        for (const auto& [key, vec] : table_) {
            SparseVec nv;
            for (const auto& [k, c] : vec) {
                Scalar s = c.substitute(bindings);
                if (!s.is_zero()) nv.emplace_back(k, std::move(s));
            }
            if (!nv.empty()) out.table_.emplace(key, std::move(nv));
        }
        return out;
    }

    LieAlgebra renamed(std::vector<std::string> names) const
    {
        if (names.size() != dim()) throw InternalError("renamed: wrong name count");
        LieAlgebra out = *this;
        out.basis_ = Basis{std::move(names)};
        out.basis_.validate();
        return out;
    }

    bool operator==(const LieAlgebra& o) const
    {
        return basis_ == o.basis_ && same_context(ctx_, o.ctx_) && table_ == o.table_;
    }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    LieAlgebra() = default;

    Basis basis_;
    ContextPtr ctx_;
    std::map<std::pair<size_t, size_t>, SparseVec> table_;
};

class LieAlgebra::Builder {
public:
    Builder(Basis basis, ContextPtr ctx) : basis_(std::move(basis)), ctx_(std::move(ctx))
    {
        basis_.validate();
    }

    /// Adds c * X_k to [X_i, X_j]; pairs are normalized to i<j by negation.
    Builder& add(size_t i, size_t j, size_t k, Scalar c)
    {
        if (i >= basis_.dim() || j >= basis_.dim() || k >= basis_.dim())
            throw InputError("bracket entry index out of range");
        if (i == j) {
            if (!c.is_zero()) throw InputError("nonzero bracket [X,X]");
            return *this;
        }
        require_same_context(ctx_, c.context(), "bracket coefficient");
        if (i > j) {
            std::swap(i, j);
            c = -c;
        }
        auto& vec = acc_[{i, j}];
        sparse_add(vec, k, c);
        return *this;
    }

    Builder& add(std::string_view xi, std::string_view xj, std::string_view xk, Scalar c)
    {
        return add(need(xi), need(xj), need(xk), std::move(c));
    }

    /// Freezes the algebra. With `validate_jacobi` the Jacobi identity is
    /// checked and a DomainError thrown on the first violating triple.
    LieAlgebra build(bool validate_jacobi = true) const
    {
        LieAlgebra alg;
        alg.basis_ = basis_;
        alg.ctx_ = ctx_;
        for (const auto& [key, vec] : acc_)
            if (!vec.empty()) alg.table_.emplace(key, vec);
        if (validate_jacobi) {
            JacobiDefect defect = alg.jacobi_defect();
            if (!defect.empty()) {
                const auto& [ijk, v] = *defect.begin();
                std::ostringstream msg;
                msg << "Jacobi identity fails on (" << basis_.names[std::get<0>(ijk)] << ", "
                    << basis_.names[std::get<1>(ijk)] << ", " << basis_.names[std::get<2>(ijk)]
                    << "): defect " << sparse_to_string(v, basis_);
                throw DomainError(msg.str());
            }
        }
        return alg;
    }

private:
    size_t need(std::string_view name) const
    {
        auto i = basis_.index_of(name);
        if (!i) throw InputError("unknown generator: '" + std::string(name) + "'");
        return *i;
    }

    Basis basis_;
    ContextPtr ctx_;
    std::map<std::pair<size_t, size_t>, SparseVec> acc_;
};

/// Ordered partition of the basis into an isotropy block h and a
/// complement block t.
struct SubalgebraSplitting {
    std::vector<size_t> h, t;

    static SubalgebraSplitting make(size_t dim, std::vector<size_t> h, std::vector<size_t> t)
    {
        SubalgebraSplitting s{std::move(h), std::move(t)};
        std::vector<int> seen(dim, 0);
        for (size_t i : s.h) {
            if (i >= dim) throw InputError("splitting index out of range");
            ++seen[i];
        }
        for (size_t i : s.t) {
            if (i >= dim) throw InputError("splitting index out of range");
            ++seen[i];
        }
        for (size_t i = 0; i < dim; ++i)
            if (seen[i] != 1)
                throw InputError("splitting blocks must partition the basis (index " +
                                 std::to_string(i) + (seen[i] ? " repeated)" : " missing)"));
        return s;
    }

    bool contains_h(size_t i) const { return std::find(h.begin(), h.end(), i) != h.end(); }

    bool operator==(const SubalgebraSplitting& o) const { return h == o.h && t == o.t; }
};

inline void require_h_subalgebra(const LieAlgebra& alg, const SubalgebraSplitting& s, const char* where)
{
    if (!alg.is_subalgebra(s.h))
        throw DomainError(std::string(where) + ": the h block is not a subalgebra");
}

/// True iff [h, t] has no h-component (given that h is a subalgebra).
inline bool reductive_check(const LieAlgebra& alg, const SubalgebraSplitting& s)
{
    require_h_subalgebra(alg, s, "reductive_check");
    std::vector<bool> in_h(alg.dim(), false);
    for (size_t i : s.h) in_h[i] = true;
    for (size_t i : s.h)
        for (size_t j : s.t)
            for (const auto& [k, c] : alg.bracket_basis(i, j))
                if (in_h[k]) return false;
    return true;
}

/// True iff the splitting is reductive and [t, t] has no t-component.
inline bool symmetric_check(const LieAlgebra& alg, const SubalgebraSplitting& s)
{
    if (!reductive_check(alg, s)) return false;
    std::vector<bool> in_h(alg.dim(), false);
    for (size_t i : s.h) in_h[i] = true;
    for (size_t a = 0; a < s.t.size(); ++a)
        for (size_t b = a + 1; b < s.t.size(); ++b)
            for (const auto& [k, c] : alg.bracket_basis(s.t[a], s.t[b]))
                if (!in_h[k]) return false;
    return true;
}

} // namespace liedual
