#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace liedual {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Kept in lowest terms with positive denominator
/// by the backing type.
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid user input (bad expression, bad document, bad bindings).
struct InputError : Error {
    using Error::Error;
};

/// Mixing values from different parameter contexts.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// A mathematical precondition does not hold (h not a subalgebra,
/// non-reductive dual splitting, vanishing denominator, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A structural self-check failed; indicates a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q)
{
    BigInt n = rational_num(q);
    BigInt d = rational_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

/// Parses "n" or "n/d" with an optional leading sign. Returns nullopt on
/// malformed input or zero denominator.
inline std::optional<Rational> parse_rational(std::string_view s)
{
    size_t i = 0, n = s.size();
    while (i < n && (s[i] == ' ' || s[i] == '\t')) ++i;
    while (n > i && (s[n - 1] == ' ' || s[n - 1] == '\t')) --n;
    if (i >= n) return std::nullopt;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    auto read_digits = [&](BigInt& out) -> bool {
        if (i >= n || s[i] < '0' || s[i] > '9') return false;
        out = 0;
        while (i < n && s[i] >= '0' && s[i] <= '9') {
            out *= 10;
            out += int(s[i] - '0');
            ++i;
        }
        return true;
    };
    BigInt num, den = 1;
    if (!read_digits(num)) return std::nullopt;
    if (i < n && s[i] == '/') {
        ++i;
        if (!read_digits(den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    if (i != n) return std::nullopt;
    Rational q(num, den);
    if (neg) q = -q;
    return q;
}

/// q^e for nonnegative e.
inline Rational rational_pow(const Rational& q, unsigned e)
{
    Rational acc(1);
    Rational base = q;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

} // namespace liedual
