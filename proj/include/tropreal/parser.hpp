#pragma once

/**
 * @file parser.hpp
 * @brief Text grammar for polynomials over K and for tropical points.
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := power (['*'|'/'] power)*        juxtaposition multiplies
 *   power  := atom ['^' exponent]
 *   atom   := integer | 't' | variable | '(' expr ')'
 *
 * Variables are x1..xn, with x, y, z as aliases of x1, x2, x3. The symbol t
 * is the Puiseux parameter and takes rational exponents, e.g. t^(1/2).
 * Factored input is expanded exactly: "(x-2)^2 + (y-2)^2 - 1".
 */

#include "tropreal/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace tropreal {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    PolyK parse() {
        PolyK result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

    /// Number of variables mentioned (highest index).
    static std::size_t scan_nvars(std::string_view text) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            bool boundary = i == 0 || !std::isalpha(static_cast<unsigned char>(text[i - 1]));
            if (!boundary) continue;
            if (c == 'y') n = std::max<std::size_t>(n, 2);
            else if (c == 'z') n = std::max<std::size_t>(n, 3);
            else if (c == 'x') {
                std::size_t j = i + 1;
                std::size_t idx = 0;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    idx = idx * 10 + static_cast<std::size_t>(text[j++] - '0');
                n = std::max<std::size_t>(n, idx == 0 ? 1 : idx);
            }
        }
        return n == 0 ? 1 : n;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PolyK expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        PolyK acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 't' || c == 'x' || c == 'y' ||
               c == 'z';
    }

    PolyK term() {
        PolyK acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                acc = acc * invert(power());
            } else if (starts_atom(peek())) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    PolyK invert(const PolyK& p) {
        if (p.terms().size() != 1) fail("division by a polynomial that is not a monomial");
        const auto& [e, c] = *p.terms().begin();
        if (!c.is_monomial()) fail("division by a non-monomial Puiseux coefficient");
        Exponent neg = e;
        for (auto& x : neg) x = -x;
        return PolyK::monomial(std::move(neg), c.monomial_inverse());
    }

    Integer integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational exponent_value(bool allow_fraction) {
        if (accept('(')) {
            bool neg = accept('-');
            Rational r = Rational(integer_literal());
            if (accept('/')) {
                if (!allow_fraction) fail("fractional exponent on a variable");
                Integer den = integer_literal();
                if (den == 0) fail("zero denominator");
                r /= Rational(den);
            }
            if (!accept(')')) fail("expected ')'");
            return neg ? Rational(-r) : r;
        }
        bool neg = accept('-');
        Rational r = Rational(integer_literal());
        return neg ? Rational(-r) : r;
    }

    PolyK power() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 't' &&
            (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            Rational e = 1;
            if (accept('^')) e = exponent_value(true);
            return PolyK::constant(nvars_, PuiseuxSeries::monomial(1, e));
        }
        PolyK base = atom();
        if (!accept('^')) return base;
        Rational e = exponent_value(false);
        if (e.get_den() != 1) fail("fractional exponent");
        long long k = e.get_num().get_si();
        if (k >= 0) return base.pow(static_cast<unsigned long long>(k));
        return invert(base).pow(static_cast<unsigned long long>(-k));
    }

    PolyK atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            PolyK inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyK::constant(nvars_, PuiseuxSeries(Rational(integer_literal())));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            std::size_t idx = c == 'x' ? 1 : (c == 'y' ? 2 : 3);
            if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = integer_literal().get_ui();
            }
            if (idx == 0 || idx > nvars_) fail("variable index out of range");
            return PolyK::variable(nvars_, idx - 1);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial; nvars = 0 infers the variable count from the text.
inline PolyK parse_polynomial(std::string_view text, std::size_t nvars = 0) {
    if (nvars == 0) nvars = detail::PolyParser::scan_nvars(text);
    return detail::PolyParser(text, nvars).parse();
}

/// Parses a single Puiseux series such as "2 - 1/3*t^(1/2) + t^2".
inline PuiseuxSeries parse_series(std::string_view text) {
    PolyK p = detail::PolyParser(text, 1).parse();
    if (p.is_zero()) return {};
    if (p.terms().size() != 1 || p.terms().begin()->first != Exponent{0})
        throw ParseError("series text mentions a variable");
    return p.terms().begin()->second;
}

/// Parses "((+,1),(0,inf))" into a tropical point.
inline TropPoint parse_trop_point(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("malformed tropical point '" + s + "'");
    std::string inner = s.substr(1, s.size() - 2);
    TropPoint z;
    std::size_t i = 0;
    while (i < inner.size()) {
        if (inner[i] == ',') {
            ++i;
            continue;
        }
        auto close = inner.find(')', i);
        if (inner[i] != '(' || close == std::string::npos) throw ParseError("malformed tropical point '" + s + "'");
        z.push_back(parse_signed(inner.substr(i, close - i + 1)));
        i = close + 1;
    }
    if (z.empty()) throw ParseError("empty tropical point");
    return z;
}

}  // namespace tropreal
