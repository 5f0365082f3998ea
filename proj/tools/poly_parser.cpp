#include "poly_parser.hpp"

#include <cctype>
#include <cstdlib>

namespace realroots::cli {

unsigned max_degree_cap() {
    const char* env = std::getenv("REALROOTS_MAX_DEGREE");
    if (!env || !*env) return 64;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    return 64;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
};

BigInt lex_number(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start) lx.fail("expected digits");
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '.')
        throw ParseError("non-integer coefficient", lx.pos);
    return BigInt(lx.s.substr(start, lx.pos - start));
}

unsigned lex_exponent(Lexer& lx, unsigned cap) {
    // after '^'
    BigInt e = lex_number(lx);
    if (e > static_cast<long>(cap)) throw ParseError("degree exceeds REALROOTS_MAX_DEGREE", lx.pos);
    return static_cast<unsigned>(e.get_ui());
}

struct Term {
    BigInt coeff;
    unsigned ex = 0, ey = 0;
};

Term lex_term(Lexer& lx, int sign, unsigned cap) {
    Term t{BigInt(sign), 0, 0};
    bool have_part = false;
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = t.coeff * lex_number(lx);
        have_part = true;
        if (lx.peek() == '*') {
            ++lx.pos;
            if (lx.peek() != 'x' && lx.peek() != 'y') lx.fail("expected variable after '*'");
        }
    }
    if (lx.peek() == 'x') {
        ++lx.pos;
        t.ex = 1;
        if (lx.peek() == '^') {
            ++lx.pos;
            t.ex = lex_exponent(lx, cap);
        }
        have_part = true;
        if (lx.peek() == '*') {
            ++lx.pos;
            if (lx.peek() != 'y') lx.fail("expected 'y' after '*'");
        }
    }
    if (lx.peek() == 'y') {
        ++lx.pos;
        t.ey = 1;
        if (lx.peek() == '^') {
            ++lx.pos;
            t.ey = lex_exponent(lx, cap);
        }
        have_part = true;
    }
    if (!have_part) lx.fail("expected a term");
    return t;
}

}  // namespace

ParsedPolynomial parse_polynomial(const std::string& text) {
    Lexer lx{text};
    const unsigned cap = max_degree_cap();
    std::vector<std::tuple<BigInt, unsigned, unsigned>> terms;
    ParsedPolynomial out;

    if (lx.eof()) lx.fail("empty polynomial");
    int sign = 1;
    if (lx.peek() == '+' || lx.peek() == '-') {
        sign = lx.peek() == '-' ? -1 : 1;
        ++lx.pos;
    }
    for (;;) {
        Term t = lex_term(lx, sign, cap);
        if (t.ex > 0) out.uses_x = true;
        if (t.ey > 0) out.uses_y = true;
        terms.emplace_back(t.coeff, t.ex, t.ey);
        if (lx.eof()) break;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
            continue;
        }
        lx.fail(std::string("unexpected character '") + c + "'");
    }
    out.poly = BivariatePolynomial::from_terms(terms);
    return out;
}

IntPolynomial parse_univariate(const std::string& text) {
    ParsedPolynomial p = parse_polynomial(text);
    if (p.uses_y) throw ParseError("expected a univariate polynomial in x", 0);
    std::vector<BigInt> coeffs;
    const int dx = p.poly.deg_x();
    for (int i = 0; i <= dx; ++i) coeffs.push_back(p.poly.coefficient(static_cast<unsigned>(i), 0));
    return IntPolynomial(std::move(coeffs));
}

BivariatePolynomial parse_bivariate(const std::string& text) {
    return parse_polynomial(text).poly;
}

Rational parse_rational_arg(const std::string& text) {
    std::size_t slash = text.find('/');
    auto parse_int = [&](const std::string& s, std::size_t at) {
        if (s.empty()) throw ParseError("empty number", at);
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i >= s.size()) throw ParseError("expected digits", at);
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw ParseError("invalid number", at + k);
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text, 0));
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (sign_of(den) == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

}  // namespace realroots::cli
