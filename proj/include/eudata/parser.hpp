#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "eudata/errors.hpp"
#include "eudata/polynomial.hpp"

namespace eudata {

// Recursive-descent parser for the polynomial wire format:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' nat)?
//   base   := integer | variable | '(' expr ')'
//
// Integer literals are arbitrary precision, exponents are non-negative
// integers, variables must be declared. No implicit multiplication.
class PolynomialParser {
public:
    PolynomialParser(std::string text, std::vector<std::string> vars)
        : text_(std::move(text)), vars_(std::move(vars)) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        Polynomial base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) fail("exponent must be a non-negative integer");
            unsigned long e = 0;
            std::size_t start = pos_;
            while (std::isdigit(peek())) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > 100000) throw ParseError(start, "exponent too large");
                ++pos_;
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(c)) {
            std::size_t start = pos_;
            while (std::isdigit(peek())) ++pos_;
            return Polynomial::constant(vars_, Rational(Integer(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(peek()) || peek() == '_') ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return Polynomial::variable(vars_, i);
            throw ParseError(start, "undeclared variable '" + name + "'");
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return Polynomial(vars_);  // unreachable
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    std::string text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& vars) {
    return PolynomialParser(text, vars).parse();
}

}  // namespace eudata
