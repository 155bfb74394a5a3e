#ifndef CUSPLAB_PARSE_HPP
#define CUSPLAB_PARSE_HPP

// Text grammar shared with the CLI: terms joined by + and -, rational
// coefficients p/q, `eps` for the cube root of unity, `*` or juxtaposition
// for products, `^` for (possibly negative) powers. Greek letters are
// accepted and normalized to their ASCII names.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusplab/poly.hpp"

namespace cusplab {

namespace detail {

// UTF-8 greek aliases; never required, always accepted.
inline const std::vector<std::pair<std::string, std::string>>& greek_aliases() {
    static const std::vector<std::pair<std::string, std::string>> tbl = {
        {"λ", "l"},     {"μ", "m"},    {"ν", "n"},
        {"σ", "s"},     {"ε", "eps"},  {"α", "alpha"},
        {"β", "beta"},  {"γ", "gamma"}, {"ξ", "xi"},
        {"υ", "ups"},
    };
    return tbl;
}

class Parser {
public:
    Parser(std::string text, VarTablePtr fixed_table)
        : text_(std::move(text)), table_(std::move(fixed_table)) {}

    // Collecting mode: variables get registered in first-appearance order.
    struct Collected {
        std::vector<std::string> names;
        std::vector<std::string> laurent;
    };

    Polynomial parse_fixed() {
        Polynomial p = expr(
            [this](const std::string& nm) -> Polynomial {
                if (!table_->has(nm)) throw ParseError("unknown variable " + nm, pos_);
                return Polynomial::variable(table_, nm);
            });
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return p;
    }

private:
    template <typename VarFn>
    Polynomial expr(const VarFn& var) {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = take() == '-';
        Polynomial acc = term(var);
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const bool minus = take() == '-';
                Polynomial t = term(var);
                acc = minus ? acc - t : acc + t;
            } else {
                return acc;
            }
        }
    }

    template <typename VarFn>
    Polynomial term(const VarFn& var) {
        Polynomial acc = factor(var);
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                take();
                acc *= factor(var);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                       std::isdigit(static_cast<unsigned char>(c)) ||
                       static_cast<unsigned char>(c) >= 0x80) {
                acc *= factor(var);  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    template <typename VarFn>
    Polynomial factor(const VarFn& var) {
        Polynomial base = atom(var);
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            bool neg = false;
            if (peek() == '-') { neg = true; take(); }
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected integer exponent", pos_);
            long long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                e = e * 10 + (take() - '0');
            return pow(base, neg ? -e : e);
        }
        return base;
    }

    template <typename VarFn>
    Polynomial atom(const VarFn& var) {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            take();
            Polynomial p = expr(var);
            skip_ws();
            if (peek() != ')') throw ParseError("expected )", pos_);
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_integer();
            Int den = 1;
            skip_ws();
            if (peek() == '/') {
                const std::size_t save = pos_;
                take();
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    den = read_integer();
                    if (den == 0) throw ParseError("zero denominator", pos_);
                } else {
                    pos_ = save;  // not a rational; leave '/' to the caller
                }
            }
            return Polynomial::constant(table_, Cyclo(Rational(num, den)));
        }
        std::string nm = read_identifier();
        if (nm.empty()) throw ParseError("expected term", pos_);
        if (nm == "eps") return Polynomial::constant(table_, Cyclo::eps());
        return var(nm);
    }

    Int read_integer() {
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (take() - '0');
        return v;
    }

    std::string read_identifier() {
        // greek alias?
        for (const auto& [utf8, ascii] : greek_aliases()) {
            if (text_.compare(pos_, utf8.size(), utf8) == 0) {
                pos_ += utf8.size();
                return ascii;
            }
        }
        std::string nm;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            nm += take();
        return nm;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string text_;
    VarTablePtr table_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parse against a fixed variable table.
inline Polynomial parse_polynomial(const std::string& text, const VarTablePtr& table) {
    return detail::Parser(text, table).parse_fixed();
}

// Two-pass parse with a fresh table: first scan identifiers in appearance
// order (negative powers flag a variable laurent), then parse strictly.
inline Polynomial parse_polynomial(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::string> laurent;
    std::size_t i = 0;
    auto seen = [&](const std::string& nm) {
        for (const auto& x : names) if (x == nm) return true;
        return false;
    };
    while (i < text.size()) {
        const unsigned char c = text[i];
        std::string nm;
        bool alias = false;
        for (const auto& [utf8, ascii] : detail::greek_aliases()) {
            if (text.compare(i, utf8.size(), utf8) == 0) {
                nm = ascii;
                i += utf8.size();
                alias = true;
                break;
            }
        }
        if (!alias) {
            if (std::isalpha(c) || c == '_') {
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    nm += text[i++];
            } else {
                ++i;
                continue;
            }
        }
        if (nm == "eps") continue;
        if (!seen(nm)) names.push_back(nm);
        // peek for a negative exponent
        std::size_t j = i;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '^') {
            ++j;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '-') laurent.push_back(nm);
        }
    }
    auto table = VarTable::make(names, laurent);
    return parse_polynomial(text, table);
}

}  // namespace cusplab

#endif
