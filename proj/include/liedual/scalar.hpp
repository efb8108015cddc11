#pragma once

#include <map>
#include <string>
#include <utility>

#include "liedual/polynomial.hpp"

namespace liedual {

/// Exact rational function num/den over a parameter context.
///
/// Normal form: gcd(num, den) = 1, den is integer-primitive with positive
/// leading coefficient, and zero is 0/1. Equal values therefore have
/// identical representations, which makes equality and the zero test a
/// straight structural comparison.
class Scalar {
public:
    explicit Scalar(ContextPtr ctx)
        : num_(Polynomial::zero(ctx)), den_(Polynomial::constant(ctx, Rational(1)))
    {
    }

    Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        require_same_context(num_.context(), den_.context(), "scalar");
        normalize();
    }

    static Scalar zero(ContextPtr ctx) { return Scalar(std::move(ctx)); }

    static Scalar constant(ContextPtr ctx, const Rational& c)
    {
        Scalar s(ctx);
        s.num_ = Polynomial::constant(ctx, c);
        return s;
    }

    static Scalar one(ContextPtr ctx) { return constant(std::move(ctx), Rational(1)); }

    static Scalar parameter(ContextPtr ctx, size_t index)
    {
        Scalar s(ctx);
        s.num_ = Polynomial::parameter(ctx, index);
        return s;
    }

    static Scalar parameter(const ContextPtr& ctx, std::string_view name)
    {
        auto idx = ctx->index_of(name);
        if (!idx) throw InputError("unknown parameter: '" + std::string(name) + "'");
        return parameter(ctx, *idx);
    }

    static Scalar from_polynomial(Polynomial p)
    {
        Scalar s(p.context());
        s.num_ = std::move(p);
        return s;
    }

    const ContextPtr& context() const { return num_.context(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const
    {
        if (!is_constant()) throw InternalError("constant_value on non-constant scalar");
        return num_.constant_value() / den_.constant_value();
    }

    Scalar operator-() const
    {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        require_same_context(a.context(), b.context(), "scalar add");
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        require_same_context(a.context(), b.context(), "scalar mul");
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b)
    {
        require_same_context(a.context(), b.context(), "scalar div");
        if (b.is_zero()) throw DomainError("division by zero scalar");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow(unsigned e) const
    {
        Scalar acc = one(context());
        Scalar base = *this;
        while (e > 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Binds a subset of the parameters to rational values; the result lives
    /// over the remaining parameters. Throws DomainError if the denominator
    /// becomes identically zero.
    Scalar substitute(const std::map<std::string, Rational>& bindings) const
    {
        const ContextPtr& ctx = context();
        std::map<size_t, Rational> by_index;
        for (const auto& [name, value] : bindings) {
            auto idx = ctx->index_of(name);
            if (!idx) throw InputError("substitute: unknown parameter '" + name + "'");
            by_index.emplace(*idx, value);
        }
        std::vector<std::string> remaining;
        for (size_t i = 0; i < ctx->size(); ++i)
            if (!by_index.count(i)) remaining.push_back(ctx->name(i));
        ContextPtr reduced = make_context(std::move(remaining));
        Polynomial n = num_.substitute(by_index, reduced);
        Polynomial d = den_.substitute(by_index, reduced);
        if (d.is_zero())
            throw DomainError("substitution makes a denominator identically zero: " + den_.to_string());
        return Scalar(std::move(n), std::move(d));
    }

    /// Evaluates at a full rational point. Throws DomainError when the
    /// denominator vanishes at the point.
    Rational evaluate(const std::vector<Rational>& point) const
    {
        Rational d = den_.evaluate(point);
        if (d == 0) throw DomainError("evaluation point annihilates a denominator");
        return num_.evaluate(point) / d;
    }

    /// Re-expresses this scalar over a context that contains every current
    /// parameter (matched by name, relative order preserved).
    Scalar lift(const ContextPtr& target) const
    {
        const ContextPtr& ctx = context();
        std::vector<size_t> where(ctx->size());
        long prev = -1;
        for (size_t i = 0; i < ctx->size(); ++i) {
            auto idx = target->index_of(ctx->name(i));
            if (!idx) throw InternalError("lift: target context lacks parameter " + ctx->name(i));
            if (static_cast<long>(*idx) <= prev)
                throw InternalError("lift: target context reorders parameters");
            prev = static_cast<long>(*idx);
            where[i] = *idx;
        }
        auto lift_poly = [&](const Polynomial& p) {
            Polynomial r(target);
            for (const auto& [e, c] : p.terms()) {
                Exponents e2(target->size(), 0);
                for (size_t i = 0; i < e.size(); ++i) e2[where[i]] = e[i];
                r.add_term(e2, c);
            }
            return r;
        };
        return Scalar(lift_poly(num_), lift_poly(den_));
    }

    std::string to_string() const
    {
        if (is_polynomial()) return num_.to_string();
        auto wrap = [](const Polynomial& p) {
            std::string s = p.to_string();
            if (p.terms().size() > 1 || s.find('-') != std::string::npos || s.find('*') != std::string::npos ||
                s.find('^') != std::string::npos)
                return "(" + s + ")";
            return s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    void normalize()
    {
        if (den_.is_zero()) throw DomainError("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(context(), Rational(1));
            return;
        }
        auto [cn, pn] = num_.content_and_primitive();
        auto [cd, pd] = den_.content_and_primitive();
        Polynomial g = detail::gcd_integer_poly(pn, pd);
        if (!(g.is_constant() && g.constant_value() == 1)) {
            pn = pn.divide_exact(g);
            pd = pd.divide_exact(g);
        }
        // pd is integer-primitive with positive leading coefficient; fold the
        // full rational scale into the numerator.
        num_ = pn * (cn / cd);
        den_ = std::move(pd);
    }

    Polynomial num_, den_;
};

inline Scalar operator*(const Scalar& a, const Rational& c)
{
    return a * Scalar::constant(a.context(), c);
}

} // namespace liedual
