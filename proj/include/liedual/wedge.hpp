#pragma once

#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include "liedual/lie_algebra.hpp"

namespace liedual {

/// Antisymmetric 2-tensor over a basis: sum of r^{ij} X_i ^ X_j with i<j,
/// under the convention x ^ y = x (x) y - y (x) x.
class Bivector {
public:
    Bivector(size_t dim, ContextPtr ctx) : dim_(dim), ctx_(std::move(ctx)) {}

    size_t dim() const { return dim_; }
    const ContextPtr& context() const { return ctx_; }
    const std::map<std::pair<size_t, size_t>, Scalar>& components() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// Adds c * X_i ^ X_j; orientation is normalized, X ^ X is dropped.
    void add_term(size_t i, size_t j, const Scalar& c)
    {
        if (i >= dim_ || j >= dim_) throw InternalError("bivector index out of range");
        if (i == j || c.is_zero()) return;
        Scalar v = c;
        if (i > j) {
            std::swap(i, j);
            v = -v;
        }
        auto [it, inserted] = c_.emplace(std::make_pair(i, j), v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    /// Signed coefficient of X_i ^ X_j for any orientation.
    Scalar get(size_t i, size_t j) const
    {
        if (i == j) return Scalar::zero(ctx_);
        const bool flip = i > j;
        auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == c_.end()) return Scalar::zero(ctx_);
        return flip ? -it->second : it->second;
    }

    Bivector& operator+=(const Bivector& o)
    {
        require_same_context(ctx_, o.ctx_, "bivector add");
        for (const auto& [ij, c] : o.c_) add_term(ij.first, ij.second, c);
        return *this;
    }

    friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }

    Bivector operator*(const Scalar& s) const
    {
        Bivector r(dim_, ctx_);
        for (const auto& [ij, c] : c_) r.add_term(ij.first, ij.second, c * s);
        return r;
    }

    Bivector operator-() const { return *this * (-Scalar::one(ctx_)); }

    Bivector substitute(const std::map<std::string, Rational>& bindings) const
    {
        Bivector r(dim_, Scalar::zero(ctx_).substitute(bindings).context());
        for (const auto& [ij, c] : c_) r.add_term(ij.first, ij.second, c.substitute(bindings));
        return r;
    }

    bool operator==(const Bivector& o) const
    {
        return dim_ == o.dim_ && same_context(ctx_, o.ctx_) && c_ == o.c_;
    }
    bool operator!=(const Bivector& o) const { return !(*this == o); }

    std::string to_string(const Basis& basis) const
    {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [ij, c] : c_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ") " << basis.names.at(ij.first) << "^"
                << basis.names.at(ij.second);
        }
        return out.str();
    }

private:
    size_t dim_;
    ContextPtr ctx_;
    std::map<std::pair<size_t, size_t>, Scalar> c_;
};

/// Antisymmetric 3-tensor with strictly increasing index triples.
class Trivector {
public:
    Trivector(size_t dim, ContextPtr ctx) : dim_(dim), ctx_(std::move(ctx)) {}

    size_t dim() const { return dim_; }
    const ContextPtr& context() const { return ctx_; }
    const std::map<std::tuple<size_t, size_t, size_t>, Scalar>& components() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_term(size_t i, size_t j, size_t k, const Scalar& c)
    {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw InternalError("trivector index out of range");
        if (i == j || j == k || i == k || c.is_zero()) return;
        std::array<size_t, 3> idx{i, j, k};
        int sign = 1;
        // sort three indices, tracking the permutation parity
        if (idx[0] > idx[1]) {
            std::swap(idx[0], idx[1]);
            sign = -sign;
        }
        if (idx[1] > idx[2]) {
            std::swap(idx[1], idx[2]);
            sign = -sign;
        }
        if (idx[0] > idx[1]) {
            std::swap(idx[0], idx[1]);
            sign = -sign;
        }
        Scalar v = sign > 0 ? c : -c;
        auto key = std::make_tuple(idx[0], idx[1], idx[2]);
        auto [it, inserted] = c_.emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Scalar get(size_t i, size_t j, size_t k) const
    {
        if (i == j || j == k || i == k) return Scalar::zero(ctx_);
        Trivector probe(dim_, ctx_);
        probe.add_term(i, j, k, Scalar::one(ctx_));
        const auto& [key, sign] = *probe.c_.begin();
        auto it = c_.find(key);
        if (it == c_.end()) return Scalar::zero(ctx_);
        return it->second * sign;
    }

    Trivector& operator+=(const Trivector& o)
    {
        require_same_context(ctx_, o.ctx_, "trivector add");
        for (const auto& [ijk, c] : o.c_)
            add_term(std::get<0>(ijk), std::get<1>(ijk), std::get<2>(ijk), c);
        return *this;
    }

    bool operator==(const Trivector& o) const
    {
        return dim_ == o.dim_ && same_context(ctx_, o.ctx_) && c_ == o.c_;
    }
    bool operator!=(const Trivector& o) const { return !(*this == o); }

    std::string to_string(const Basis& basis) const
    {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [ijk, c] : c_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ") " << basis.names.at(std::get<0>(ijk)) << "^"
                << basis.names.at(std::get<1>(ijk)) << "^" << basis.names.at(std::get<2>(ijk));
        }
        return out.str();
    }

private:
    size_t dim_;
    ContextPtr ctx_;
    std::map<std::tuple<size_t, size_t, size_t>, Scalar> c_;
};

/// Extended adjoint action [X_i (x) 1 + 1 (x) X_i, b]: a derivation on
/// wedges, [X_i, x] ^ y + x ^ [X_i, y].
inline Bivector ad_on_bivector(const LieAlgebra& alg, size_t gen, const Bivector& b)
{
    if (gen >= alg.dim()) throw DomainError("ad_on_bivector: index out of range");
    Bivector out(alg.dim(), alg.context());
    for (const auto& [ij, c] : b.components()) {
        const auto [i, j] = ij;
        for (const auto& [k, f] : alg.bracket_basis(gen, i)) out.add_term(k, j, c * f);
        for (const auto& [k, f] : alg.bracket_basis(gen, j)) out.add_term(i, k, c * f);
    }
    return out;
}

enum class Block { HH, HT, TT };

inline const char* block_name(Block b)
{
    switch (b) {
        case Block::HH: return "h^h";
        case Block::HT: return "h^t";
        default: return "t^t";
    }
}

inline Block block_of(const SubalgebraSplitting& s, size_t i, size_t j)
{
    const bool ih = s.contains_h(i), jh = s.contains_h(j);
    if (ih && jh) return Block::HH;
    if (!ih && !jh) return Block::TT;
    return Block::HT;
}

/// Which blocks of a bivector are populated relative to a splitting.
struct BlockProfile {
    bool hh = false, ht = false, tt = false;
    bool operator==(const BlockProfile&) const = default;
};

inline BlockProfile block_profile(const Bivector& b, const SubalgebraSplitting& s)
{
    BlockProfile p;
    for (const auto& [ij, c] : b.components()) {
        switch (block_of(s, ij.first, ij.second)) {
            case Block::HH: p.hh = true; break;
            case Block::HT: p.ht = true; break;
            case Block::TT: p.tt = true; break;
        }
    }
    return p;
}

/// Schouten square [[r, r]] = [r_12, r_13] + [r_12, r_23] + [r_13, r_23],
/// expanded literally in the third tensor power and collapsed to a
/// trivector. A non-antisymmetric expansion is an internal error.
inline Trivector schouten_square(const LieAlgebra& alg, const Bivector& r)
{
    require_same_context(alg.context(), r.context(), "schouten_square");
    const size_t n = alg.dim();
    if (r.dim() != n) throw DomainError("schouten_square: bivector dimension mismatch");

    // Full antisymmetric component list of r (both orientations).
    std::vector<std::tuple<size_t, size_t, Scalar>> rc;
    for (const auto& [ij, c] : r.components()) {
        rc.emplace_back(ij.first, ij.second, c);
        rc.emplace_back(ij.second, ij.first, -c);
    }

    std::map<std::array<size_t, 3>, Scalar> full;
    auto put = [&](size_t a, size_t b, size_t c, const Scalar& v) {
        if (v.is_zero()) return;
        std::array<size_t, 3> key{a, b, c};
        auto [it, inserted] = full.emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) full.erase(it);
        }
    };

    for (const auto& [i, j, ci] : rc) {
        for (const auto& [k, l, ck] : rc) {
            const Scalar c = ci * ck;
            // [r_12, r_13] -> [X_i, X_k] (x) X_j (x) X_l
            for (const auto& [m, f] : alg.bracket_basis(i, k)) put(m, j, l, c * f);
            // [r_12, r_23] -> X_i (x) [X_j, X_k] (x) X_l
            for (const auto& [m, f] : alg.bracket_basis(j, k)) put(i, m, l, c * f);
            // [r_13, r_23] -> X_i (x) X_k (x) [X_j, X_l]
            for (const auto& [m, f] : alg.bracket_basis(j, l)) put(i, k, m, c * f);
        }
    }

    // Collapse, then verify the expansion really was totally antisymmetric.
    Trivector t(n, alg.context());
    for (const auto& [key, v] : full) {
        const auto [a, b, c] = key;
        if (a == b || b == c || a == c)
            throw InternalError("schouten_square: repeated-index component survived");
        if (a < b && b < c) t.add_term(a, b, c, v);
    }
    for (const auto& [key, v] : full) {
        const auto [a, b, c] = key;
        if (t.get(a, b, c) != v)
            throw InternalError("schouten_square: expansion is not antisymmetric");
    }
    return t;
}

/// Components of (ad_i (x) 1 (x) 1 + 1 (x) ad_i (x) 1 + 1 (x) 1 (x) ad_i) t
/// per generator i; empty iff t is ad-invariant.
using AdInvarianceDefect = std::map<size_t, Trivector>;

inline AdInvarianceDefect ad_invariance_defect(const LieAlgebra& alg, const Trivector& t)
{
    AdInvarianceDefect out;
    for (size_t gen = 0; gen < alg.dim(); ++gen) {
        Trivector d(alg.dim(), alg.context());
        for (const auto& [ijk, c] : t.components()) {
            const auto [i, j, k] = ijk;
            for (const auto& [m, f] : alg.bracket_basis(gen, i)) d.add_term(m, j, k, c * f);
            for (const auto& [m, f] : alg.bracket_basis(gen, j)) d.add_term(i, m, k, c * f);
            for (const auto& [m, f] : alg.bracket_basis(gen, k)) d.add_term(i, j, m, c * f);
        }
        if (!d.is_zero()) out.emplace(gen, std::move(d));
    }
    return out;
}

} // namespace liedual
