#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedual/rational.hpp"

namespace liedual {

inline bool is_identifier(std::string_view s)
{
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(s[0])) return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (!alnum(s[i])) return false;
    return true;
}

/// Ordered set of named symbolic parameters. Every Polynomial/Scalar is
/// tied to one context; the declaration order fixes the monomial order.
class ParameterContext {
public:
    explicit ParameterContext(std::vector<std::string> names) : names_(std::move(names))
    {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!is_identifier(names_[i]))
                throw InputError("invalid parameter name: '" + names_[i] + "'");
            for (size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j])
                    throw InputError("duplicate parameter name: '" + names_[i] + "'");
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> index_of(std::string_view name) const
    {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool same_names(const ParameterContext& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const ParameterContext>;

inline ContextPtr make_context(std::vector<std::string> names)
{
    return std::make_shared<const ParameterContext>(std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_names(*b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where)
{
    if (!same_context(a, b))
        throw ContextMismatchError(std::string(where) + ": operands use different parameter contexts");
}

} // namespace liedual
