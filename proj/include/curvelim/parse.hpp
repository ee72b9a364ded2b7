#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "curvelim/poly.hpp"

namespace curvelim {

// Polynomial grammar (ASCII): integer and rational literals ("3", "3/4"),
// the imaginary unit "i", variables x0|x1|x2 (bare "x" allowed only for a
// univariate target), operators + - * ^ with the usual precedence,
// parentheses. Implicit multiplication is not accepted.

namespace detail {

/// Sparse mixed-degree polynomial used only inside the parser.
using GenPoly = std::map<MultiIndex3, ExactScalar>;

inline void gen_add(GenPoly& a, const MultiIndex3& m, const ExactScalar& c) {
    auto it = a.find(m);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

inline GenPoly gen_mul(const GenPoly& a, const GenPoly& b) {
    GenPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) gen_add(out, ma + mb, ca * cb);
    return out;
}

class PolyParser {
public:
    PolyParser(std::string_view text, bool allow_bare_x)
        : text_(text), allow_bare_x_(allow_bare_x) {}

    GenPoly parse() {
        GenPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw syntax_error("unexpected trailing input", pos_);
        for (auto it = p.begin(); it != p.end();)
            it = it->second.is_zero() ? p.erase(it) : std::next(it);
        return p;
    }

private:
    GenPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        GenPoly acc = term();
        if (neg) acc = negate(acc);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            GenPoly t = term();
            if (c == '-') t = negate(t);
            for (const auto& [m, co] : t) gen_add(acc, m, co);
        }
        return acc;
    }

    GenPoly term() {
        GenPoly acc = power();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = gen_mul(acc, power());
        }
        return acc;
    }

    GenPoly power() {
        GenPoly base = atom();
        skip_ws();
        if (peek() != '^') return base;
        take();
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(peek())) throw syntax_error("exponent must be a nonnegative integer", at);
        unsigned e = 0;
        while (std::isdigit(peek())) e = e * 10 + static_cast<unsigned>(take() - '0');
        GenPoly acc = {{MultiIndex3{0, 0, 0}, ExactScalar(1)}};
        for (unsigned k = 0; k < e; ++k) acc = gen_mul(acc, base);
        return acc;
    }

    GenPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            GenPoly p = expr();
            skip_ws();
            if (peek() != ')') throw syntax_error("expected ')'", pos_);
            take();
            return p;
        }
        if (c == 'x') {
            std::size_t at = pos_;
            take();
            char d = peek();
            if (d == '0' || d == '1' || d == '2') {
                take();
                return {{MultiIndex3{}.plus(static_cast<std::size_t>(d - '0')), ExactScalar(1)}};
            }
            if (allow_bare_x_) return {{MultiIndex3{0, 1, 0}, ExactScalar(1)}};
            throw syntax_error("expected x0, x1 or x2", at);
        }
        if (c == 'i') {
            take();
            return {{MultiIndex3{0, 0, 0}, ExactScalar::i()}};
        }
        if (std::isdigit(c)) return {{MultiIndex3{0, 0, 0}, rational()}};
        throw syntax_error("expected a literal, variable or '('", pos_);
    }

    ExactScalar rational() {
        mpz_class num(integer_digits());
        if (peek() == '/') {
            take();
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(peek())) throw syntax_error("expected denominator", at);
            mpz_class den(integer_digits());
            if (den == 0) throw syntax_error("zero denominator", at);
            return ExactScalar(mpq_class(num, den));
        }
        return ExactScalar(mpq_class(num));
    }

    std::string integer_digits() {
        std::string s;
        while (std::isdigit(peek())) s.push_back(take());
        return s;
    }

    static GenPoly negate(const GenPoly& a) {
        GenPoly out;
        for (const auto& [m, c] : a) out.emplace(m, -c);
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    bool allow_bare_x_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse as a homogeneous trivariate polynomial. With a declared degree,
/// a zero input yields the zero polynomial of that degree and any nonzero
/// support must sit exactly at it.
inline HomPoly3 parse_hom3(std::string_view text, std::optional<unsigned> declared_degree = {}) {
    detail::GenPoly g = detail::PolyParser(text, false).parse();
    if (g.empty()) {
        if (!declared_degree) throw not_homogeneous("zero polynomial needs a declared degree");
        return HomPoly3(*declared_degree);
    }
    unsigned d = g.begin()->first.degree();
    for (const auto& [m, c] : g)
        if (m.degree() != d) throw not_homogeneous("mixed total degrees in homogeneous input");
    if (declared_degree && *declared_degree != d)
        throw not_homogeneous("support degree differs from the declared degree");
    HomPoly3 p(d);
    for (const auto& [m, c] : g) p.set(m, c);
    return p;
}

/// Parse as a univariate polynomial ("x" or any single one of x0|x1|x2).
inline UniPoly parse_unipoly(std::string_view text, std::optional<unsigned> declared_degree = {}) {
    detail::GenPoly g = detail::PolyParser(text, true).parse();
    int var = -1;
    unsigned maxdeg = 0;
    for (const auto& [m, c] : g) {
        for (std::size_t v = 0; v < 3; ++v)
            if (m[v] > 0) {
                if (var >= 0 && var != static_cast<int>(v))
                    throw syntax_error("more than one variable in univariate input", 0);
                var = static_cast<int>(v);
            }
        maxdeg = std::max(maxdeg, m.degree());
    }
    unsigned n = declared_degree.value_or(maxdeg);
    if (maxdeg > n) throw error("support degree exceeds the declared degree");
    UniPoly p = UniPoly::zero(n);
    for (const auto& [m, c] : g) p.coeff(m.degree()) = c;
    return p;
}

/// Parse as an affine bivariate polynomial in x1, x2 (no x0 allowed).
inline AffinePoly2 parse_affine2(std::string_view text, std::optional<unsigned> degree_bound = {}) {
    detail::GenPoly g = detail::PolyParser(text, false).parse();
    unsigned maxdeg = 0;
    for (const auto& [m, c] : g) {
        if (m.i0 > 0) throw syntax_error("x0 not allowed in an affine bivariate input", 0);
        maxdeg = std::max(maxdeg, m.degree());
    }
    AffinePoly2 p(degree_bound.value_or(maxdeg));
    for (const auto& [m, c] : g) p.set(m.i1, m.i2, c);
    return p;
}

namespace detail {

inline std::string coeff_str(const ExactScalar& c) {
    if (c.is_real()) return c.str();
    return "(" + c.str() + ")";
}

inline void append_term(std::string& out, const ExactScalar& c, const std::string& vars) {
    bool first = out.empty();
    ExactScalar a = c;
    bool neg = a.is_real() && a.real() < 0;
    if (neg) a = -a;
    if (!first)
        out += neg ? " - " : " + ";
    else if (neg)
        out += "-";
    std::string cs = coeff_str(a);
    if (vars.empty())
        out += cs;
    else if (cs == "1")
        out += vars;
    else
        out += cs + "*" + vars;
}

inline std::string var_string(const MultiIndex3& m) {
    static const char* names[3] = {"x0", "x1", "x2"};
    std::string s;
    for (std::size_t v = 0; v < 3; ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
}

}  // namespace detail

/// Canonical printing: terms in MonomialOrder; parse(print(p)) == p.
inline std::string print_poly(const HomPoly3& p) {
    if (p.is_zero()) return "0";
    std::string out;
    MonomialOrder order(p.degree());
    for (const MultiIndex3& m : order.list()) {
        ExactScalar c = p.coeff(m);
        if (c.is_zero()) continue;
        detail::append_term(out, c, detail::var_string(m));
    }
    return out;
}

inline std::string print_poly(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (unsigned i = p.degree() + 1; i-- > 0;) {
        const ExactScalar& c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string vars = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        detail::append_term(out, c, vars);
    }
    return out;
}

inline std::string print_poly(const AffinePoly2& p) {
    std::string out;
    for (unsigned d = p.degree_bound() + 1; d-- > 0;) {
        for (unsigned i1 = d + 1; i1-- > 0;) {
            ExactScalar c = p.coeff(i1, d - i1);
            if (c.is_zero()) continue;
            detail::append_term(out, c, detail::var_string(MultiIndex3{0, i1, d - i1}));
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace curvelim
