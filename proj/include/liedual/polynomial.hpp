#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liedual/parameters.hpp"
#include "liedual/rational.hpp"

namespace liedual {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t exponents_degree(const Exponents& e)
{
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic order, descending, so that map iteration starts at
/// the leading monomial. Earlier parameters rank higher in the lex tiebreak.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const std::uint64_t da = exponents_degree(a), db = exponents_degree(b);
        if (da != db) return da > db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Sparse multivariate polynomial with Rational coefficients over a fixed
/// ParameterContext. Stored zero coefficients are never kept, so equal
/// values have identical term maps.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, Rational c)
    {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_.emplace(Exponents(p.ctx_->size(), 0), std::move(c));
        return p;
    }

    static Polynomial parameter(ContextPtr ctx, size_t index)
    {
        if (index >= ctx->size()) throw InternalError("parameter index out of range");
        Polynomial p(std::move(ctx));
        Exponents e(p.ctx_->size(), 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && exponents_degree(terms_.begin()->first) == 0;
    }

    Rational constant_value() const
    {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    std::uint64_t total_degree() const
    {
        return terms_.empty() ? 0 : exponents_degree(terms_.begin()->first);
    }

    std::uint32_t degree_in(size_t var) const
    {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    const Rational& leading_coefficient() const
    {
        if (terms_.empty()) throw InternalError("leading_coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const
    {
        Polynomial r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        require_same_context(ctx_, o.ctx_, "polynomial add");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        require_same_context(ctx_, o.ctx_, "polynomial sub");
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        require_same_context(a.ctx_, b.ctx_, "polynomial mul");
        Polynomial r(a.ctx_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const Rational& c)
    {
        Polynomial r(a.ctx_);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial acc = constant(ctx_, Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const
    {
        return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Substitutes rational values for the parameters at the given indices;
    /// the result lives over `reduced`, which must list the remaining
    /// parameters in their original relative order.
    Polynomial substitute(const std::map<size_t, Rational>& bindings, const ContextPtr& reduced) const
    {
        std::vector<long> remap(ctx_->size(), -1);
        {
            size_t next = 0;
            for (size_t i = 0; i < ctx_->size(); ++i) {
                if (bindings.count(i)) continue;
                if (next >= reduced->size() || reduced->name(next) != ctx_->name(i))
                    throw InternalError("substitute: reduced context does not match remaining parameters");
                remap[i] = static_cast<long>(next++);
            }
            if (next != reduced->size())
                throw InternalError("substitute: reduced context has extra parameters");
        }
        Polynomial r(reduced);
        for (const auto& [e, c] : terms_) {
            Rational coeff = c;
            Exponents re(reduced->size(), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = bindings.find(i);
                if (it != bindings.end())
                    coeff *= rational_pow(it->second, e[i]);
                else
                    re[static_cast<size_t>(remap[i])] = e[i];
            }
            r.add_term(re, coeff);
        }
        return r;
    }

    /// Evaluates at a full rational point (one value per parameter).
    Rational evaluate(const std::vector<Rational>& point) const
    {
        if (point.size() != ctx_->size()) throw InternalError("evaluate: wrong point size");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= rational_pow(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    /// P = c * primitive(P): primitive has coprime integer coefficients and
    /// positive leading coefficient, c carries the sign and rational scale.
    /// The zero polynomial yields (0, 0).
    std::pair<Rational, Polynomial> content_and_primitive() const
    {
        if (terms_.empty()) return {Rational(0), Polynomial(ctx_)};
        BigInt g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, rational_num(c));
            l = l / boost::multiprecision::gcd(l, rational_den(c)) * rational_den(c);
        }
        if (g < 0) g = -g;
        Rational content(g, l);
        if (leading_coefficient() < 0) content = -content;
        Polynomial prim(ctx_);
        for (const auto& [e, c] : terms_) prim.terms_.emplace(e, c / content);
        return {content, prim};
    }

    /// Exact multivariate division; throws InternalError when the division
    /// is not exact. Only used where exactness is guaranteed.
    Polynomial divide_exact(const Polynomial& d) const
    {
        require_same_context(ctx_, d.ctx_, "polynomial divide_exact");
        if (d.is_zero()) throw InternalError("divide_exact by zero polynomial");
        Polynomial q(ctx_);
        Polynomial r = *this;
        const auto& [de, dc] = *d.terms_.begin();
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.begin();
            Exponents qe(re.size());
            for (size_t i = 0; i < re.size(); ++i) {
                if (re[i] < de[i]) throw InternalError("divide_exact: not divisible");
                qe[i] = re[i] - de[i];
            }
            Rational qc = rc / dc;
            q.add_term(qe, qc);
            Polynomial t(ctx_);
            t.terms_.emplace(std::move(qe), std::move(qc));
            r -= t * d;
        }
        return q;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = exponents_degree(e) > 0;
            bool coeff_shown = !has_vars || a != 1;
            if (coeff_shown) out << liedual::to_string(a);
            bool star = coeff_shown;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (star) out << "*";
                out << ctx_->name(i);
                if (e[i] > 1) out << "^" << e[i];
                star = true;
            }
        }
        return out.str();
    }

private:
    ContextPtr ctx_;
    TermMap terms_;
};

namespace detail {

inline BigInt integer_content(const Polynomial& p)
{
    BigInt g = 0;
    for (const auto& [e, c] : p.terms()) {
        if (rational_den(c) != 1) throw InternalError("integer_content: non-integer coefficient");
        g = boost::multiprecision::gcd(g, rational_num(c));
    }
    if (g < 0) g = -g;
    return g;
}

inline std::uint32_t degree_in_var(const Polynomial& p, size_t v) { return p.degree_in(v); }

/// Coefficient of v^k, as a polynomial with the v-exponent zeroed out.
inline Polynomial coefficient_of(const Polynomial& p, size_t v, std::uint32_t k)
{
    Polynomial r(p.context());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Exponents e2 = e;
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

inline Polynomial shift_in_var(const Polynomial& p, size_t v, std::uint32_t k)
{
    Polynomial r(p.context());
    for (const auto& [e, c] : p.terms()) {
        Exponents e2 = e;
        e2[v] += k;
        r.add_term(e2, c);
    }
    return r;
}

inline Polynomial gcd_integer_poly(const Polynomial& a, const Polynomial& b);

/// gcd of the v-coefficients of p (recursively over the remaining variables).
inline Polynomial content_in_var(const Polynomial& p, size_t v)
{
    Polynomial g = Polynomial::zero(p.context());
    const std::uint32_t d = p.degree_in(v);
    for (std::uint32_t k = 0; k <= d; ++k) {
        Polynomial c = coefficient_of(p, v, k);
        if (c.is_zero()) continue;
        g = gcd_integer_poly(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

/// Pseudo-remainder of a by b in the variable v (both nonzero, deg_v(a) >= deg_v(b)).
inline Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, size_t v)
{
    const std::uint32_t db = b.degree_in(v);
    const Polynomial lb = coefficient_of(b, v, db);
    while (!r.is_zero()) {
        const std::uint32_t dr = r.degree_in(v);
        if (dr < db) break;
        const Polynomial lr = coefficient_of(r, v, dr);
        r = r * lb - shift_in_var(lr, v, dr - db) * b;
    }
    return r;
}

inline Polynomial normalize_primitive(const Polynomial& p)
{
    if (p.is_zero()) return p;
    return p.content_and_primitive().second;
}

/// gcd over the integers of two integer-coefficient polynomials, returned
/// integer-primitive with positive leading coefficient. Primitive PRS.
inline Polynomial gcd_integer_poly(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) {
        BigInt g = boost::multiprecision::gcd(integer_content(a), integer_content(b));
        return Polynomial::constant(a.context(), Rational(g));
    }

    // Main variable: the highest-index parameter occurring in either.
    size_t v = 0;
    for (size_t i = a.context()->size(); i-- > 0;) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    }

    const Polynomial ca = content_in_var(a, v);
    const Polynomial cb = content_in_var(b, v);
    const Polynomial c = gcd_integer_poly(ca, cb);
    Polynomial A = a.divide_exact(ca);
    Polynomial B = b.divide_exact(cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (!B.is_zero()) {
        Polynomial R = pseudo_remainder(A, B, v);
        A = std::move(B);
        if (R.is_zero())
            B = std::move(R);
        else
            B = R.divide_exact(content_in_var(R, v));
    }
    return normalize_primitive(c * A);
}

} // namespace detail

/// gcd over the rationals, normalized to an integer-primitive polynomial
/// with positive leading coefficient (1 for coprime inputs).
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b)
{
    require_same_context(a.context(), b.context(), "polynomial_gcd");
    const Polynomial pa = a.is_zero() ? a : a.content_and_primitive().second;
    const Polynomial pb = b.is_zero() ? b : b.content_and_primitive().second;
    return detail::gcd_integer_poly(pa, pb);
}

} // namespace liedual
