#ifndef ARRFREE_ARRANGEMENT_HPP
#define ARRFREE_ARRANGEMENT_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arrfree/betti.hpp"
#include "arrfree/module_gb.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/prime_util.hpp"

namespace arrfree {

// A central arrangement: primitive integer linear forms, pairwise
// non-proportional, first nonzero entry positive.
struct Arrangement {
    int dim = 0;
    std::vector<std::vector<long long>> hyperplanes;
    std::string name;

    int n() const { return static_cast<int>(hyperplanes.size()); }
};

namespace detail {

inline std::vector<long long> normalize_form(std::vector<long long> v) {
    long long g = 0;
    bool nonzero = false;
    for (long long c : v) {
        g = std::gcd(g, std::abs(c));
        nonzero |= (c != 0);
    }
    if (!nonzero) throw input_error("arrangement: zero linear form");
    for (auto& c : v) c /= g;
    for (long long c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

}  // namespace detail

inline Arrangement new_arrangement(std::vector<std::vector<long long>> vectors,
                                   std::string name = "") {
    if (vectors.empty()) throw input_error("arrangement: no hyperplanes");
    size_t l = vectors[0].size();
    if (l == 0) throw input_error("arrangement: dimension must be at least 1");
    Arrangement a;
    a.dim = static_cast<int>(l);
    a.name = std::move(name);
    for (auto& v : vectors) {
        if (v.size() != l) throw input_error("arrangement: non-uniform vector lengths");
        a.hyperplanes.push_back(detail::normalize_form(std::move(v)));
    }
    for (size_t i = 0; i < a.hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < a.hyperplanes.size(); ++j)
            if (a.hyperplanes[i] == a.hyperplanes[j])
                throw input_error("arrangement: proportional pair of forms (Q not reduced)");
    return a;
}

// --- coefficient construction per domain -------------------------------

template <class C>
C coeff_from_ll(long long v, std::uint64_t p);
template <>
inline Int coeff_from_ll<Int>(long long v, std::uint64_t) { return Int(static_cast<long>(v)); }
template <>
inline Rat coeff_from_ll<Rat>(long long v, std::uint64_t) { return Rat(static_cast<long>(v)); }
template <>
inline Fp coeff_from_ll<Fp>(long long v, std::uint64_t p) { return Fp::from_long(v, p); }

template <class C>
Poly<C> form_poly(const Arrangement& a, int i, std::uint64_t p = 0) {
    Poly<C> f(a.dim);
    std::vector<Term<C>> ts;
    for (int k = 0; k < a.dim; ++k) {
        C c = coeff_from_ll<C>(a.hyperplanes[i][k], p);
        if (!is_zero(c)) ts.push_back({Monomial::var(k, a.dim), c});
    }
    return poly_from_terms(a.dim, std::move(ts), TermOrder::degrevlex());
}

// --- good primes -------------------------------------------------------

// p is good iff the reduced defining polynomial stays reduced, i.e. no
// two forms become proportional mod p.
inline bool distinct_mod_p(const Arrangement& a, std::uint64_t p) {
    if (!is_prime_u64(p)) throw input_error("distinct_mod_p: p is not prime");
    int n = a.n(), l = a.dim;
    for (int i = 0; i < n; ++i) {
        // a form vanishing mod p would make Q(A_p) zero
        bool all_zero = true;
        for (int k = 0; k < l; ++k)
            if (Fp::from_long(a.hyperplanes[i][k], p).v != 0) all_zero = false;
        if (all_zero) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool proportional = true;
            for (int r = 0; r < l && proportional; ++r)
                for (int s = r + 1; s < l && proportional; ++s) {
                    long long m = a.hyperplanes[i][r] * a.hyperplanes[j][s] -
                                  a.hyperplanes[i][s] * a.hyperplanes[j][r];
                    if (Fp::from_long(m, p).v != 0) proportional = false;
                }
            if (proportional) return false;
        }
    return true;
}

// Complete finite set of non-good primes: primes dividing the gcd of
// all 2x2 minors of some pair of forms.
inline std::set<Int> non_good_primes(const Arrangement& a) {
    std::set<Int> out;
    int n = a.n(), l = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int g = 0;
            for (int r = 0; r < l; ++r)
                for (int s = r + 1; s < l; ++s) {
                    Int m = Int(static_cast<long>(a.hyperplanes[i][r])) *
                                Int(static_cast<long>(a.hyperplanes[j][s])) -
                            Int(static_cast<long>(a.hyperplanes[i][s])) *
                                Int(static_cast<long>(a.hyperplanes[j][r]));
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
                }
            // g == 0 impossible: pairwise non-proportional over Q
            for (auto& q : prime_factors(g)) out.insert(q);
        }
    return out;
}

// The arrangement over F_p defined by pi_p(Q): forms reduced mod p and
// rescaled so the first nonzero entry is 1.
inline Arrangement reduce_arrangement(const Arrangement& a, std::uint64_t p) {
    if (!distinct_mod_p(a, p))
        throw refusal_error("prime " + std::to_string(p) + " not good");
    Arrangement r;
    r.dim = a.dim;
    r.name = a.name.empty() ? "" : a.name + "_mod_" + std::to_string(p);
    for (auto& h : a.hyperplanes) {
        std::vector<Fp> f;
        for (long long c : h) f.push_back(Fp::from_long(c, p));
        Fp lead;
        for (auto& c : f)
            if (c.v) { lead = c; break; }
        Fp s = inv(lead);
        std::vector<long long> v;
        for (auto& c : f) v.push_back(static_cast<long long>((c * s).v));
        r.hyperplanes.push_back(std::move(v));
    }
    return r;
}

// --- defining polynomial and Jacobian ideal ----------------------------

template <class C>
Poly<C> defining_polynomial(const Arrangement& a, const TermOrder& ord,
                            std::uint64_t p = 0) {
    if constexpr (std::is_same_v<C, Fp>) {
        if (!distinct_mod_p(a, p))
            throw refusal_error("prime " + std::to_string(p) + " not good");
    }
    Poly<C> q = Poly<C>::constant(a.dim, coeff_from_ll<C>(1, p));
    for (int i = 0; i < a.n(); ++i) q = poly_mul(q, form_poly<C>(a, i, p), ord);
    return q;
}

// Generators (Q, dQ/dx1, ..., dQ/dxl); zero partials dropped.
template <class C>
std::vector<Poly<C>> jacobian_ideal(const Arrangement& a, const TermOrder& ord,
                                    std::uint64_t p = 0) {
    Poly<C> q = defining_polynomial<C>(a, ord, p);
    std::vector<Poly<C>> gens{q};
    for (int i = 0; i < a.dim; ++i) {
        Poly<C> d = derivative(q, i, ord);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return gens;
}

// --- derivations --------------------------------------------------------

template <class C>
struct Derivation {
    std::vector<Poly<C>> comp;  // coefficients of d/dx1 .. d/dxl
    int pdeg = 0;               // polynomial degree when homogeneous
};

template <class C>
Poly<C> apply_derivation(const Derivation<C>& d, const Poly<C>& f, const TermOrder& ord) {
    Poly<C> r(f.nv);
    for (int i = 0; i < static_cast<int>(d.comp.size()); ++i)
        r = poly_add(r, poly_mul(d.comp[i], derivative(f, i, ord), ord), ord);
    return r;
}

template <class C>
Derivation<C> euler_derivation(int l, std::uint64_t p = 0) {
    Derivation<C> d;
    d.pdeg = 1;
    for (int i = 0; i < l; ++i) {
        Poly<C> f(l);
        f.terms.push_back({Monomial::var(i, l), coeff_from_ll<C>(1, p)});
        d.comp.push_back(std::move(f));
    }
    return d;
}

// Minimal homogeneous generators of D(A) over a field, as the kernel of
// (g_1,...,g_l,h) -> sum g_i dQ/dx_i - h Q, projected to the first l
// coordinates. Each generator is verified to satisfy delta(Q) in (Q).
template <class C>
std::vector<Derivation<C>> derivation_module(const Arrangement& a, const TermOrder& ord,
                                             std::uint64_t p = 0) {
    static_assert(is_field_v<C>);
    int l = a.dim, n = a.n();
    Poly<C> q = defining_polynomial<C>(a, ord, p);
    std::vector<Poly<C>> tuple;
    for (int i = 0; i < l; ++i) tuple.push_back(derivative(q, i, ord));
    tuple.push_back(poly_neg(q));

    // Zero partials contribute free unit syzygies (delta = d/dx_i).
    std::vector<int> nz;
    for (int i = 0; i <= l; ++i)
        if (!tuple[i].is_zero()) nz.push_back(i);
    std::vector<ModElem<C>> vs;
    for (int i : nz) vs.push_back(as_mod_elem(tuple[i]));

    std::vector<int> elem_degs;
    std::vector<ModElem<C>> syz = syzygies(vs, {0}, l, ord, &elem_degs);
    // expand back to l+1 coordinates
    std::vector<ModElem<C>> full;
    std::vector<int> shifts(l + 1, n - 1);
    shifts[l] = n;
    for (auto& s : syz) {
        ModElem<C> w(l + 1, l);
        for (size_t k = 0; k < nz.size(); ++k) w.comp[nz[k]] = s.comp[k];
        full.push_back(std::move(w));
    }
    for (int i = 0; i <= l; ++i) {
        if (!tuple[i].is_zero()) continue;
        if (i == l) continue;  // Q itself is never zero
        ModElem<C> w(l + 1, l);
        w.comp[i] = Poly<C>::constant(l, coeff_from_ll<C>(1, p));
        full.push_back(std::move(w));
    }

    std::vector<int> degs;
    full = minimal_generators(full, shifts, l, ord, &degs);

    std::vector<Derivation<C>> out;
    for (size_t k = 0; k < full.size(); ++k) {
        Derivation<C> d;
        d.comp.assign(full[k].comp.begin(), full[k].comp.begin() + l);
        d.pdeg = degs[k] - (n - 1);
        Poly<C> val = apply_derivation(d, q, ord);
        if (!val.is_zero() && !exact_divide(val, q, ord))
            throw internal_error("derivation_module: generator not logarithmic");
        out.push_back(std::move(d));
    }
    return out;
}

// --- Saito's criterion ---------------------------------------------------

template <class C>
Poly<C> poly_matrix_det(const std::vector<std::vector<Poly<C>>>& m, const TermOrder& ord) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    int nv = m[0][0].nv;
    Poly<C> acc(nv);
    for (size_t r = 0; r < k; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Poly<C>>> minor;
        for (size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            minor.push_back(std::vector<Poly<C>>(m[i].begin() + 1, m[i].end()));
        }
        Poly<C> term = poly_mul(m[r][0], poly_matrix_det(minor, ord), ord);
        acc = (r % 2 == 0) ? poly_add(acc, term, ord) : poly_sub(acc, term, ord);
    }
    return acc;
}

template <class C>
struct SaitoResult {
    bool is_basis = false;
    C c{};  // det = c * Q when is_basis
};

// det(delta_i(x_j)) == c * Q(A) with c a nonzero scalar?
// Throws refusal_error when a candidate is not logarithmic.
template <class C>
SaitoResult<C> saito_check(const Arrangement& a, const std::vector<Derivation<C>>& cand,
                           const TermOrder& ord, std::uint64_t p = 0) {
    int l = a.dim;
    if (static_cast<int>(cand.size()) != l)
        throw input_error("saito_check: need exactly l candidate derivations");
    for (auto& d : cand) {
        for (int i = 0; i < a.n(); ++i) {
            Poly<C> alpha = form_poly<C>(a, i, p);
            Poly<C> val = apply_derivation(d, alpha, ord);
            if (!val.is_zero() && !exact_divide(val, alpha, ord))
                throw refusal_error("saito_check: candidate not logarithmic at form " +
                                    std::to_string(i + 1));
        }
    }
    std::vector<std::vector<Poly<C>>> m;
    for (auto& d : cand) m.push_back(d.comp);
    Poly<C> det = poly_matrix_det(m, ord);
    SaitoResult<C> res;
    if (det.is_zero()) return res;
    Poly<C> q = defining_polynomial<C>(a, ord, p);
    auto quot = exact_divide(det, q, ord);
    if (quot && quot->size() == 1 && quot->lm().is_one()) {
        res.is_basis = true;
        res.c = quot->lc();
    }
    return res;
}

// Clear denominators and remove integer content, per derivation.
inline Derivation<Int> derivation_to_integer(const Derivation<Rat>& d) {
    int l = static_cast<int>(d.comp.size());
    int nv = d.comp.empty() ? 0 : d.comp[0].nv;
    Int den = 1;
    for (auto& f : d.comp)
        for (auto& t : f.terms)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    std::vector<Poly<Int>> comps;
    Int cont = 0;
    for (auto& f : d.comp) {
        Poly<Int> g(nv);
        for (auto& t : f.terms) {
            Rat s = t.c * Rat(den);
            g.terms.push_back({t.m, Int(s.get_num())});
        }
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), content(g).get_mpz_t());
        comps.push_back(std::move(g));
    }
    Derivation<Int> out;
    out.pdeg = d.pdeg;
    for (auto& g : comps)
        out.comp.push_back(cont > 1 ? divide_content(g, cont) : g);
    (void)l;
    return out;
}

inline Derivation<Rat> derivation_to_rat(const Derivation<Int>& d) {
    Derivation<Rat> out;
    out.pdeg = d.pdeg;
    for (auto& f : d.comp) out.comp.push_back(poly_to_rat(f));
    return out;
}

inline Derivation<Fp> derivation_mod_p(const Derivation<Int>& d, std::uint64_t p) {
    Derivation<Fp> out;
    out.pdeg = d.pdeg;
    for (auto& f : d.comp) out.comp.push_back(reduce_mod_p(f, p));
    return out;
}

// The Saito constant of an integer basis: det = c * Q over Z.
inline Int saito_constant_integer(const Arrangement& a,
                                  const std::vector<Derivation<Int>>& basis,
                                  const TermOrder& ord) {
    std::vector<std::vector<Poly<Int>>> m;
    for (auto& d : basis) m.push_back(d.comp);
    Poly<Int> det = poly_matrix_det(m, ord);
    Poly<Int> q = defining_polynomial<Int>(a, ord);
    auto quot = exact_divide(det, q, ord);
    if (!quot || quot->size() != 1 || !quot->lm().is_one())
        throw internal_error("saito_constant_integer: det is not c*Q");
    return quot->lc();
}

// --- freeness -------------------------------------------------------------

enum class TeraoCheck { Auto, Force, Skip };

struct FreenessReport {
    bool over_q = true;
    std::uint64_t p = 0;
    bool free_arrangement = false;
    std::vector<int> exponents;          // sorted, when free
    std::vector<int> generator_degrees;  // minimal generator degrees of D(A)
    std::optional<Int> saito_c;          // over Q, from an integer basis
    std::string method;                  // "saito", "both"
};

// Auto mode skips the Terao cross-check above this size (the resolution
// of S/J doubles the heavy work; the generator-count route decides).
inline constexpr int kTeraoAutoMaxHyperplanes = 12;

template <class C>
FreenessReport is_free(const Arrangement& a, const TermOrder& ord, std::uint64_t p = 0,
                       TeraoCheck terao = TeraoCheck::Auto) {
    static_assert(is_field_v<C>);
    int l = a.dim, n = a.n();
    FreenessReport rep;
    rep.over_q = !std::is_same_v<C, Fp>;
    rep.p = p;

    std::vector<Derivation<C>> gens = derivation_module<C>(a, ord, p);
    for (auto& d : gens) rep.generator_degrees.push_back(d.pdeg);
    rep.free_arrangement = (static_cast<int>(gens.size()) == l);
    rep.method = "saito";

    if (rep.free_arrangement) {
        rep.exponents = rep.generator_degrees;
        std::sort(rep.exponents.begin(), rep.exponents.end());
        if (std::accumulate(rep.exponents.begin(), rep.exponents.end(), 0) != n)
            throw internal_error("is_free: exponent sum differs from |A|");
        auto saito = saito_check<C>(a, gens, ord, p);
        if (!saito.is_basis)
            throw internal_error("is_free: minimal generators fail Saito's criterion");
        if constexpr (std::is_same_v<C, Rat>) {
            std::vector<Derivation<Int>> zbasis;
            for (auto& d : gens) zbasis.push_back(derivation_to_integer(d));
            rep.saito_c = saito_constant_integer(a, zbasis, ord);
        }
    }

    bool char_divides_n = (p != 0) && (n % static_cast<int>(p) == 0);
    bool run_terao = terao == TeraoCheck::Force ||
                     (terao == TeraoCheck::Auto && n <= kTeraoAutoMaxHyperplanes);
    if (run_terao && !char_divides_n) {
        std::vector<Poly<C>> j = jacobian_ideal<C>(a, ord, p);
        BettiTable b = minimal_free_resolution(j, ord, l);
        bool quotient_zero = b.entries.empty();
        bool terao_free = quotient_zero || hdim(b) <= 2;
        if (terao_free != rep.free_arrangement)
            throw internal_error("is_free: Saito and Terao routes disagree");
        rep.method = "both";
    }
    return rep;
}

}  // namespace arrfree

#endif
