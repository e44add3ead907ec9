#ifndef ARRFREE_TEXT_HPP
#define ARRFREE_TEXT_HPP

#include <cctype>
#include <string>
#include <vector>

#include "arrfree/polynomial.hpp"

namespace arrfree {

// Polynomial text format: decimal integer/rational coefficients, `^` for
// powers, `*` optional, variables x1..xl with aliases x,y,z,w for l <= 4.
// Example: x*y*z*(x-y)*(x+z)*(y+z)*(x+y+z) parses and expands.

inline std::string var_name(int i, int nvars) {
    static const char* alias = "xyzw";
    if (nvars <= 4) return std::string(1, alias[i]);
    return "x" + std::to_string(i + 1);
}

namespace detail {

class PolyParser {
  public:
    PolyParser(const std::string& s, int nvars, const TermOrder& ord)
        : s_(s), nvars_(nvars), ord_(ord) {}

    Poly<Rat> parse() {
        Poly<Rat> f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return f;
    }

  private:
    const std::string& s_;
    int nvars_;
    const TermOrder& ord_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw input_error("polynomial parse error at position " +
                          std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly<Rat> expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        Poly<Rat> acc = product();
        if (neg) acc = poly_neg(acc);
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly<Rat> t = product();
                acc = (c == '+') ? poly_add(acc, t, ord_) : poly_sub(acc, t, ord_);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<Rat> product() {
        Poly<Rat> acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = poly_mul(acc, power(), ord_);
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = poly_mul(acc, power(), ord_);  // implicit *
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<Rat> power() {
        Poly<Rat> base = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned long e = read_uint();
            Poly<Rat> r = Poly<Rat>::constant(nvars_, Rat(1));
            for (unsigned long k = 0; k < e; ++k) r = poly_mul(r, base, ord_);
            return r;
        }
        return base;
    }

    Poly<Rat> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly<Rat> f = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(read_digits());
            if (peek() == '/') {
                ++pos_;
                Int den(read_digits());
                if (is_zero(den)) fail("zero denominator");
                return Poly<Rat>::constant(nvars_, Rat(num) / Rat(den));
            }
            return Poly<Rat>::constant(nvars_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("expected a number, variable or '('");
    }

    Poly<Rat> variable() {
        char c = s_[pos_];
        int idx = -1;
        if (c == 'x' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            unsigned long k = read_uint();
            if (k < 1 || static_cast<int>(k) > nvars_) fail("variable index out of range");
            idx = static_cast<int>(k) - 1;
        } else {
            ++pos_;
            if (nvars_ > 4) fail("single-letter variables need l <= 4");
            std::string alias = "xyzw";
            size_t p = alias.find(c);
            if (p == std::string::npos || static_cast<int>(p) >= nvars_)
                fail(std::string("unknown variable '") + c + "'");
            idx = static_cast<int>(p);
        }
        Poly<Rat> f(nvars_);
        f.terms.push_back({Monomial::var(idx, nvars_), Rat(1)});
        return f;
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }
    unsigned long read_uint() { return std::stoul(read_digits()); }
};

}  // namespace detail

inline Poly<Rat> parse_poly(const std::string& s, int nvars,
                            const TermOrder& ord = TermOrder::degrevlex()) {
    return detail::PolyParser(s, nvars, ord).parse();
}

// Parse requiring integer coefficients.
inline Poly<Int> parse_poly_z(const std::string& s, int nvars,
                              const TermOrder& ord = TermOrder::degrevlex()) {
    Poly<Rat> f = parse_poly(s, nvars, ord);
    Poly<Int> r(f.nv);
    for (auto& t : f.terms) {
        if (t.c.get_den() != 1)
            throw input_error("expected integer coefficients: " + s);
        r.terms.push_back({t.m, Int(t.c.get_num())});
    }
    return r;
}

inline std::string mono_str(const Monomial& m, int nvars) {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += var_name(i, nvars);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

template <class C>
std::string poly_str(const Poly<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < f.terms.size(); ++k) {
        const auto& t = f.terms[k];
        std::string c = coeff_str(t.c);
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c.erase(c.begin());
        out += (k == 0) ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (t.m.is_one()) {
            out += c;
        } else if (c == "1") {
            out += mono_str(t.m, f.nv);
        } else {
            out += c + "*" + mono_str(t.m, f.nv);
        }
    }
    return out;
}

}  // namespace arrfree

#endif
