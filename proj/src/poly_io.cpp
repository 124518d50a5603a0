#include "zsig/poly_io.hpp"

#include <cctype>

namespace zsig {

namespace {

struct Parser {
    const std::string& s;
    const RingSpec& ring;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    BigInt read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected digit", pos);
        return BigInt(s.substr(start, pos - start));
    }

    // integer or integer/integer
    Rat read_coefficient() {
        BigInt num = read_integer();
        if (peek() == '/') {
            ++pos;
            BigInt den = read_integer();
            if (den == 0) throw SyntaxError("zero denominator", pos);
            return rat_canonical(num, den);
        }
        return Rat(num);
    }

    // Returns the variable index, or -1 when the next token is not a variable.
    int try_read_variable() {
        skip_ws();
        if (pos >= s.size()) return -1;
        char c = s[pos];
        if (c == 'y' || c == 'z') {
            if (ring.num_vars > 3) throw UnknownVariable(std::string(1, c));
            int idx = c == 'y' ? 1 : 2;
            if (idx >= ring.num_vars) throw UnknownVariable(std::string(1, c));
            ++pos;
            return idx;
        }
        if (c != 'x') return -1;
        ++pos;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string digits = s.substr(start, pos - start);
            if (digits.size() > 2) throw UnknownVariable("x" + digits);
            int n = std::stoi(digits);
            if (n < 1 || n > ring.num_vars) throw UnknownVariable("x" + digits);
            return n - 1;
        }
        // bare "x" is x1, allowed only for r <= 3
        if (ring.num_vars > 3) throw UnknownVariable("x");
        return 0;
    }

    uint32_t read_exponent() {
        skip_ws();
        BigInt e = read_integer();
        if (e < 0 || e > 1000000) throw SyntaxError("exponent out of range", pos);
        return static_cast<uint32_t>(e.get_ui());
    }

    // One product of an optional coefficient and variable powers.
    Term read_term() {
        Term t{Monomial{}, ring.one()};
        bool saw_factor = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Rat q = read_coefficient();
            t.c = ring.from_rat(q);
            saw_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos;
            }
            // juxtaposed monomial like "3x" is also accepted
        }
        while (true) {
            size_t before = pos;
            int var = try_read_variable();
            if (var < 0) {
                pos = before;
                break;
            }
            saw_factor = true;
            uint32_t exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = read_exponent();
            }
            t.m.e[var] += exp;
            if (peek() == '*') {
                ++pos;
                skip_ws();
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    Rat q = read_coefficient();
                    t.c = t.c * ring.from_rat(q);
                    if (peek() == '*') ++pos;
                }
                continue;
            }
        }
        if (!saw_factor) throw SyntaxError("expected coefficient or variable", pos);
        return t;
    }

    MPoly parse() {
        std::vector<Term> terms;
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("empty input", pos);
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            Term t = read_term();
            if (negative) t.c = -t.c;
            terms.push_back(std::move(t));
            if (at_end()) break;
            char c = peek();
            if (c == '+') {
                negative = false;
                ++pos;
            } else if (c == '-') {
                negative = true;
                ++pos;
            } else {
                throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
            }
        }
        return MPoly::from_terms(ring, std::move(terms));
    }
};

std::string var_name(int idx, int num_vars) {
    if (num_vars == 1) return "x";
    return "x" + std::to_string(idx + 1);
}

std::string monomial_str(const Monomial& m, int num_vars) {
    std::string out;
    for (int i = 0; i < num_vars; ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(i, num_vars);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

}  // namespace

MPoly parse_poly(const std::string& text, const RingSpec& ring) {
    Parser p{text, ring};
    return p.parse();
}

std::string format_poly(const MPoly& h) {
    if (h.is_zero()) return "0";
    const int r = h.ring().num_vars;
    std::string out;
    bool first = true;
    for (const auto& t : h.terms()) {
        bool neg = false;
        std::string coeff;
        if (t.c.is_rational()) {
            Rat q = t.c.rat();
            if (q < 0) {
                neg = true;
                q = -q;
            }
            coeff = q.get_str();
        } else {
            coeff = std::to_string(t.c.fpe().value);
        }
        std::string mono = monomial_str(t.m, r);
        std::string body;
        if (mono.empty()) {
            body = coeff;
        } else if (coeff == "1") {
            body = mono;
        } else {
            body = coeff + "*" + mono;
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace zsig
