#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "liedual/scalar.hpp"

namespace liedual {

struct ParseError : InputError {
    ParseError(const std::string& what, size_t line, size_t column, std::string token)
        : InputError(what + " at " + std::to_string(line) + ":" + std::to_string(column) +
                     (token.empty() ? "" : " near '" + token + "'")),
          line(line),
          column(column),
          token(std::move(token))
    {
    }
    size_t line, column;
    std::string token;
};

/// Recursive-descent parser for coefficient expressions:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | power
///   power  := atom ['^' nonnegative-integer]
///   atom   := integer | parameter | '(' expr ')'
/// Integers are arbitrary precision; whitespace is insignificant.
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

    Scalar parse()
    {
        next_token();
        Scalar v = parse_expr();
        if (tok_.kind != Token::End) fail("unexpected trailing input");
        return v;
    }

private:
    struct Token {
        enum Kind { End, Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen } kind = End;
        std::string text;
        size_t line = 1, column = 1;
    };

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg, tok_.line, tok_.column, tok_.kind == Token::End ? "" : tok_.text);
    }

    void next_token()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
        tok_.line = line_;
        tok_.column = col_;
        tok_.text.clear();
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        const char c = text_[pos_];
        auto single = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            advance();
        };
        switch (c) {
            case '+': single(Token::Plus); return;
            case '-': single(Token::Minus); return;
            case '*': single(Token::Star); return;
            case '/': single(Token::Slash); return;
            case '^': single(Token::Caret); return;
            case '(': single(Token::LParen); return;
            case ')': single(Token::RParen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_.text += text_[pos_];
                advance();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                tok_.text += text_[pos_];
                advance();
            }
            return;
        }
        tok_.kind = Token::End;
        tok_.text = std::string(1, c);
        fail("unexpected character");
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Scalar parse_expr()
    {
        Scalar v = parse_term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            const bool minus = tok_.kind == Token::Minus;
            next_token();
            Scalar rhs = parse_term();
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    Scalar parse_term()
    {
        Scalar v = parse_factor();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            const bool div = tok_.kind == Token::Slash;
            const Token at = tok_;
            next_token();
            Scalar rhs = parse_factor();
            if (div && rhs.is_zero())
                throw ParseError("division by zero", at.line, at.column, at.text);
            v = div ? v / rhs : v * rhs;
        }
        return v;
    }

    Scalar parse_factor()
    {
        if (tok_.kind == Token::Minus) {
            next_token();
            return -parse_factor();
        }
        return parse_power();
    }

    Scalar parse_power()
    {
        Scalar base = parse_atom();
        if (tok_.kind != Token::Caret) return base;
        next_token();
        if (tok_.kind != Token::Integer) fail("expected nonnegative integer exponent after '^'");
        if (tok_.text.size() > 4) fail("exponent too large");
        const unsigned e = static_cast<unsigned>(std::stoul(tok_.text));
        if (e > 512) fail("exponent too large");
        next_token();
        return base.pow(e);
    }

    Scalar parse_atom()
    {
        switch (tok_.kind) {
            case Token::Integer: {
                Rational v(BigInt(tok_.text));
                next_token();
                return Scalar::constant(ctx_, v);
            }
            case Token::Ident: {
                auto idx = ctx_->index_of(tok_.text);
                if (!idx) fail("undeclared parameter");
                next_token();
                return Scalar::parameter(ctx_, *idx);
            }
            case Token::LParen: {
                next_token();
                Scalar v = parse_expr();
                if (tok_.kind != Token::RParen) fail("expected ')'");
                next_token();
                return v;
            }
            default: fail("expected integer, parameter, or '('");
        }
    }

    std::string_view text_;
    ContextPtr ctx_;
    size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_;
};

inline Scalar parse_scalar(std::string_view text, const ContextPtr& ctx)
{
    return ExpressionParser(text, ctx).parse();
}

} // namespace liedual
