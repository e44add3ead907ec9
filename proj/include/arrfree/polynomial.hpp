#ifndef ARRFREE_POLYNOMIAL_HPP
#define ARRFREE_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "arrfree/coeff.hpp"
#include "arrfree/monomial.hpp"

namespace arrfree {

template <class C>
struct Term {
    Monomial m;
    C c;
};

// Sparse polynomial: term list strictly decreasing in the active term
// order, no zero coefficients, no duplicate monomials. The active order
// is supplied by the caller; every routine that depends on it takes it
// as a parameter.
template <class C>
struct Poly {
    int nv = 0;
    std::vector<Term<C>> terms;

    Poly() = default;
    explicit Poly(int nvars) : nv(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const C& c) {
        Poly f(nvars);
        if (!arrfree::is_zero(c)) f.terms.push_back({Monomial::one(nvars), c});
        return f;
    }

    bool is_zero() const { return terms.empty(); }
    int nvars() const { return nv; }
    const Term<C>& lt() const {
        if (terms.empty()) throw internal_error("leading term of zero polynomial");
        return terms.front();
    }
    const Monomial& lm() const { return lt().m; }
    const C& lc() const { return lt().c; }

    unsigned degree() const {  // total degree; 0 for the zero polynomial
        unsigned d = 0;
        for (auto& t : terms) d = std::max(d, t.m.deg);
        return d;
    }
    bool homogeneous() const {
        for (auto& t : terms)
            if (t.m.deg != terms.front().m.deg) return false;
        return true;
    }
    size_t size() const { return terms.size(); }

    bool operator==(const Poly& o) const {
        if (nv != o.nv || terms.size() != o.terms.size()) return false;
        for (size_t i = 0; i < terms.size(); ++i)
            if (terms[i].m != o.terms[i].m || !(terms[i].c == o.terms[i].c))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    bool check_sorted(const TermOrder& ord) const {
        for (size_t i = 0; i + 1 < terms.size(); ++i)
            if (ord.compare(terms[i].m, terms[i + 1].m) <= 0) return false;
        for (auto& t : terms)
            if (arrfree::is_zero(t.c)) return false;
        return true;
    }
};

// Sort raw terms descending, merge duplicates, drop zeros.
template <class C>
Poly<C> poly_from_terms(int nvars, std::vector<Term<C>> ts, const TermOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&](const Term<C>& a, const Term<C>& b) {
        return ord.compare(a.m, b.m) > 0;
    });
    Poly<C> f(nvars);
    for (auto& t : ts) {
        if (arrfree::is_zero(t.c)) continue;
        if (!f.terms.empty() && f.terms.back().m == t.m) {
            f.terms.back().c = f.terms.back().c + t.c;
            if (arrfree::is_zero(f.terms.back().c)) f.terms.pop_back();
        } else {
            f.terms.push_back(std::move(t));
        }
    }
    return f;
}

template <class C>
Poly<C> poly_add(const Poly<C>& f, const Poly<C>& g, const TermOrder& ord) {
    if (f.nv != g.nv) throw input_error("polynomial add: mismatched variable counts");
    Poly<C> r(f.nv);
    r.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = ord.compare(f.terms[i].m, g.terms[j].m);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            C s = f.terms[i].c + g.terms[j].c;
            if (!arrfree::is_zero(s)) r.terms.push_back({f.terms[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <class C>
Poly<C> poly_neg(const Poly<C>& f) {
    Poly<C> r = f;
    for (auto& t : r.terms) t.c = -t.c;
    return r;
}

template <class C>
Poly<C> poly_sub(const Poly<C>& f, const Poly<C>& g, const TermOrder& ord) {
    return poly_add(f, poly_neg(g), ord);
}

// f * (c * m); order is preserved since multiplication by a fixed
// monomial is monotone for any term order.
template <class C>
Poly<C> poly_mul_term(const Poly<C>& f, const Monomial& m, const C& c) {
    Poly<C> r(f.nv);
    if (arrfree::is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (auto& t : f.terms) {
        C p = t.c * c;
        if (!arrfree::is_zero(p)) r.terms.push_back({mono_mul(t.m, m), p});
    }
    return r;
}

template <class C>
Poly<C> poly_scalar_mul(const Poly<C>& f, const C& c) {
    return poly_mul_term(f, Monomial::one(f.nv), c);
}

template <class C>
Poly<C> poly_mul(const Poly<C>& f, const Poly<C>& g, const TermOrder& ord) {
    if (f.nv != g.nv) throw input_error("polynomial mul: mismatched variable counts");
    std::vector<Term<C>> acc;
    acc.reserve(f.terms.size() * g.terms.size());
    for (auto& a : f.terms)
        for (auto& b : g.terms) acc.push_back({mono_mul(a.m, b.m), a.c * b.c});
    return poly_from_terms(f.nv, std::move(acc), ord);
}

template <class C>
Poly<C> derivative(const Poly<C>& f, int var, const TermOrder& ord) {
    if (var < 0 || var >= f.nv) throw input_error("derivative: variable index out of range");
    std::vector<Term<C>> acc;
    for (auto& t : f.terms) {
        unsigned e = t.m.e[var];
        if (e == 0) continue;
        C c = scale_int(t.c, static_cast<long>(e));
        if (arrfree::is_zero(c)) continue;
        Monomial m = t.m;
        m.e[var] -= 1;
        m.deg -= 1;
        acc.push_back({std::move(m), std::move(c)});
    }
    return poly_from_terms(f.nv, std::move(acc), ord);
}

inline Poly<Fp> reduce_mod_p(const Poly<Int>& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw input_error("reduce_mod_p: modulus is not prime");
    Poly<Fp> r(f.nv);
    for (auto& t : f.terms) {
        Fp c = Fp::from_int(t.c, p);
        if (c.v != 0) r.terms.push_back({t.m, c});
    }
    return r;
}

inline Poly<Rat> poly_to_rat(const Poly<Int>& f) {
    Poly<Rat> r(f.nv);
    for (auto& t : f.terms) r.terms.push_back({t.m, Rat(t.c)});
    return r;
}

// gcd of all coefficients, non-negative.
inline Int content(const Poly<Int>& f) {
    Int g = 0;
    for (auto& t : f.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    return g;
}

inline Poly<Int> divide_content(const Poly<Int>& f, const Int& g) {
    Poly<Int> r = f;
    for (auto& t : r.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return r;
}

// Smallest positive d with d*f integral, together with d*f.
inline std::pair<Poly<Int>, Int> clear_denominators(const Poly<Rat>& f) {
    Int d = 1;
    for (auto& t : f.terms) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.c.get_den_mpz_t());
    Poly<Int> r(f.nv);
    for (auto& t : f.terms) {
        Rat s = t.c * Rat(d);
        r.terms.push_back({t.m, Int(s.get_num())});
    }
    return {r, d};
}

inline Fp evaluate(const Poly<Fp>& f, const std::vector<Fp>& point) {
    if (static_cast<int>(point.size()) != f.nv)
        throw input_error("evaluate: wrong point length");
    std::uint64_t p = 0;
    for (auto& x : point) p = p ? p : x.p;
    for (auto& t : f.terms) p = p ? p : t.c.p;
    Fp acc(0, p ? p : 2);
    for (auto& t : f.terms) {
        Fp v = t.c;
        for (int i = 0; i < f.nv; ++i)
            if (t.m.e[i]) v = v * fp_pow(point[i], t.m.e[i]);
        acc = acc + v;
    }
    return acc;
}

// Exact division f / g; nullopt when g does not divide f. Over Int the
// coefficient quotients must also be exact.
template <class C>
std::optional<Poly<C>> exact_divide(const Poly<C>& f, const Poly<C>& g,
                                    const TermOrder& ord) {
    if (g.is_zero()) throw input_error("exact_divide: division by zero");
    Poly<C> rem = f, q(f.nv);
    std::vector<Term<C>> qterms;
    while (!rem.is_zero()) {
        const Term<C>& t = rem.lt();
        if (!mono_divides(g.lm(), t.m)) return std::nullopt;
        C c;
        if constexpr (is_field_v<C>) {
            c = t.c * inv(g.lc());
        } else {
            if (!mpz_divisible_p(t.c.get_mpz_t(), g.lc().get_mpz_t()))
                return std::nullopt;
            c = t.c / g.lc();
        }
        Monomial m = mono_div(t.m, g.lm());
        qterms.push_back({m, c});
        rem = poly_sub(rem, poly_mul_term(g, m, c), ord);
    }
    q.terms = std::move(qterms);  // produced in strictly decreasing order
    return q;
}

}  // namespace arrfree

#endif
