#ifndef ARRFREE_MONOMIAL_HPP
#define ARRFREE_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "arrfree/errors.hpp"

namespace arrfree {

struct Monomial {
    std::vector<unsigned> e;
    unsigned deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps)
        : e(std::move(exps)),
          deg(std::accumulate(e.begin(), e.end(), 0u)) {}

    static Monomial one(int nvars) {
        return Monomial(std::vector<unsigned>(nvars, 0u));
    }
    static Monomial var(int i, int nvars, unsigned k = 1) {
        std::vector<unsigned> v(nvars, 0u);
        v[i] = k;
        return Monomial(std::move(v));
    }

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, assuming divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
    r.deg = b.deg - a.deg;
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    unsigned d = 0;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// A term ordering: total, multiplicative, with 1 minimal. Block is the
// elimination order that compares the first block_size variables
// (degrevlex among themselves) before the rest.
struct TermOrder {
    enum class Kind { Degrevlex, Lex, Block };

    Kind kind = Kind::Degrevlex;
    int block_size = 0;
    std::vector<int> perm;  // perm[i] = variable placed at priority i; empty = identity

    static TermOrder degrevlex() { return TermOrder{}; }
    static TermOrder lex() { return TermOrder{Kind::Lex, 0, {}}; }
    static TermOrder elimination(int first_block) {
        return TermOrder{Kind::Block, first_block, {}};
    }

    unsigned exp(const Monomial& m, int i) const {
        return m.e[perm.empty() ? i : perm[i]];
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.e.size() != b.e.size())
            throw input_error("monomial comparison: mismatched variable counts");
        int n = a.nvars();
        switch (kind) {
            case Kind::Lex: {
                for (int i = 0; i < n; ++i) {
                    unsigned x = exp(a, i), y = exp(b, i);
                    if (x != y) return x > y ? 1 : -1;
                }
                return 0;
            }
            case Kind::Degrevlex:
                return drl(a, b, 0, n);
            case Kind::Block: {
                unsigned da = 0, db = 0;
                for (int i = 0; i < block_size; ++i) {
                    da += exp(a, i);
                    db += exp(b, i);
                }
                if (da != db) return da > db ? 1 : -1;
                if (int c = revlex(a, b, 0, block_size)) return c;
                return drl(a, b, block_size, n);
            }
        }
        throw internal_error("unreachable term order kind");
    }

    std::string name() const {
        switch (kind) {
            case Kind::Degrevlex: return "degrevlex";
            case Kind::Lex: return "lex";
            case Kind::Block: return "elim" + std::to_string(block_size);
        }
        return "?";
    }

  private:
    int drl(const Monomial& a, const Monomial& b, int lo, int hi) const {
        unsigned da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += exp(a, i);
            db += exp(b, i);
        }
        if (da != db) return da > db ? 1 : -1;
        return revlex(a, b, lo, hi);
    }
    int revlex(const Monomial& a, const Monomial& b, int lo, int hi) const {
        for (int i = hi - 1; i >= lo; --i) {
            unsigned x = exp(a, i), y = exp(b, i);
            if (x != y) return x > y ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace arrfree

#endif
