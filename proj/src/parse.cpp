#include "k3smooth/parse.hpp"

#include <cctype>
#include <sstream>

namespace k3smooth {

namespace {

struct Parser {
    const std::string& s;
    const RingPtr& ring;
    size_t pos = 0;

    Parser(const std::string& text, const RingPtr& r) : s(text), ring(r) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        std::ostringstream os;
        os << "parse error at position " << at + 1 << ": " << msg;
        throw InputError(os.str());
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    int peek() {
        skip_ws();
        return pos < s.size() ? static_cast<unsigned char>(s[pos]) : -1;
    }

    bool starts_factor(int c) const {
        return c == '(' || std::isdigit(c) || std::isalpha(c) || c == '_';
    }

    Int parse_uint(const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(std::string("expected ") + what, start);
        if (pos < s.size() && s[pos] == '.')
            fail("decimal literals are not supported, use exact rationals p/q", pos);
        return Int(s.substr(start, pos - start));
    }

    Polynomial parse_rational_factor() {
        size_t start = pos;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        }
        Int num = parse_uint("digits");
        Int den(1);
        if (peek() == '/') {
            ++pos;
            size_t dpos = pos;
            den = parse_uint("denominator digits");
            if (den == 0) fail("zero denominator", dpos);
        }
        if (neg) num = -num;
        (void)start;
        return Polynomial::constant(ring, make_rat(num, den));
    }

    Polynomial parse_factor() {
        int c = peek();
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (peek() != ')') fail("expected ')'", pos);
            ++pos;
            return inner;
        }
        if (std::isdigit(c) || c == '-') {
            Polynomial r = parse_rational_factor();
            if (peek() == '.')
                fail("decimal literals are not supported, use exact rationals p/q", pos);
            return r;
        }
        if (std::isalpha(c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int v = ring->var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'", start);
            int e = 1;
            if (peek() == '^') {
                ++pos;
                size_t epos = pos;
                Int exp = parse_uint("exponent digits");
                if (!exp.fits_sint_p() || exp.get_si() > 1000) fail("exponent too large", epos);
                e = static_cast<int>(exp.get_si());
            }
            Monomial m = Monomial::one(ring->nvars());
            m.e[v] = e;
            return Polynomial::term(ring, std::move(m), Rat(1));
        }
        fail("expected a factor", pos);
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            int c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (starts_factor(c)) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_expr() {
        Polynomial acc(ring);
        bool neg = false;
        int c = peek();
        if (c == '+' || c == '-') {
            // leading sign on the first term
            if (c == '-' ) {
                size_t save = pos;
                ++pos;
                int after = peek();
                if (std::isdigit(after)) {
                    pos = save;  // let the rational literal absorb the sign
                } else {
                    neg = true;
                }
            } else {
                ++pos;
            }
        }
        Polynomial t = parse_term();
        acc = neg ? -t : t;
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial next = parse_term();
                acc = (c == '+') ? acc + next : acc - next;
            } else {
                return acc;
            }
        }
    }

    Polynomial run() {
        if (peek() == -1) fail("empty input", 0);
        Polynomial p = parse_expr();
        if (peek() != -1) fail("unexpected character", pos);
        return p;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
    Parser p(text, ring);
    return p.run();
}

std::vector<Polynomial> parse_generator_list(const std::string& text, RingPtr ring) {
    std::vector<std::string> pieces;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            pieces.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    pieces.push_back(cur);
    std::vector<Polynomial> out;
    out.reserve(pieces.size());
    for (const std::string& piece : pieces) out.push_back(parse_polynomial(piece, ring));
    return out;
}

}  // namespace k3smooth
