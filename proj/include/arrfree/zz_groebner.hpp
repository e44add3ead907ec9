#ifndef ARRFREE_ZZ_GROEBNER_HPP
#define ARRFREE_ZZ_GROEBNER_HPP

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "arrfree/module_gb.hpp"
#include "arrfree/polynomial.hpp"
#include "arrfree/prime_util.hpp"

namespace arrfree {

// Groebner bases over Z following the S-polynomial + GCD-polynomial
// completion, then minimalization to pairwise non-divisible leading
// terms (leading coefficient included in the divisibility test).

// Strong division: a term c*m is reducible by g iff LM(g) | m and
// LC(g) | c. Full normal form; for a strong GB, NF == 0 iff membership.
namespace detail {

inline Poly<Int> strong_nf_ptrs(const Poly<Int>& f, const std::vector<const Poly<Int>*>& G,
                                const TermOrder& ord) {
    struct Red {
        const Poly<Int>* g;
        Monomial lm;
        Int lc;
    };
    std::vector<Red> reds;
    for (auto* g : G)
        if (!g->is_zero()) reds.push_back({g, g->lm(), g->lc()});
    auto cmp = [&ord](const Monomial& a, const Monomial& b) {
        return ord.compare(a, b) > 0;
    };
    std::map<Monomial, Int, decltype(cmp)> work(cmp);
    for (auto& t : f.terms) work[t.m] = t.c;
    Poly<Int> rem(f.nv);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mon = it->first;
        Int coef = it->second;
        const Red* red = nullptr;
        for (auto& r : reds)
            if (mono_divides(r.lm, mon) &&
                mpz_divisible_p(coef.get_mpz_t(), r.lc.get_mpz_t())) {
                red = &r;
                break;
            }
        if (!red) {
            rem.terms.push_back({mon, coef});
            work.erase(it);
            continue;
        }
        Monomial q = mono_div(mon, red->lm);
        Int scale = coef / red->lc;
        for (auto& t : red->g->terms) {
            Monomial key = mono_mul(t.m, q);
            Int delta = scale * t.c;
            auto [pos, fresh] = work.try_emplace(key, Int(0));
            if (fresh)
                pos->second = -delta;
            else
                pos->second = pos->second - delta;
            if (sgn(pos->second) == 0) work.erase(pos);
        }
    }
    return rem;
}

inline Poly<Int> sign_normalize(Poly<Int> f) {
    if (!f.is_zero() && sgn(f.lc()) < 0) f = poly_neg(f);
    return f;
}

// Normal form under E-reduction: a term c*m with LM(g) | m is reduced by
// the balanced quotient q = round(c / LC(g)) whenever that shrinks |c|,
// leaving the remainder in place. This controls coefficient growth while
// computing the basis; the completed basis is a strong GB all the same.
inline Poly<Int> e_normal_form(const Poly<Int>& f, const std::vector<const Poly<Int>*>& G,
                               const TermOrder& ord) {
    struct Red {
        const Poly<Int>* g;
        Monomial lm;
        Int lc;
    };
    std::vector<Red> reds;
    for (auto* g : G)
        if (!g->is_zero()) reds.push_back({g, g->lm(), g->lc()});
    auto cmp = [&ord](const Monomial& a, const Monomial& b) {
        return ord.compare(a, b) > 0;
    };
    std::map<Monomial, Int, decltype(cmp)> work(cmp);
    for (auto& t : f.terms) work[t.m] = t.c;
    Poly<Int> rem(f.nv);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mon = it->first;
        Int coef = it->second;
        const Red* red = nullptr;
        Int q;
        for (auto& r : reds) {
            if (!mono_divides(r.lm, mon)) continue;
            // balanced division: coef = q*lc + s with |s| <= lc/2
            Int s;
            mpz_fdiv_qr(q.get_mpz_t(), s.get_mpz_t(), coef.get_mpz_t(), r.lc.get_mpz_t());
            if (2 * s > r.lc) {
                q = q + 1;
                s = s - r.lc;
            }
            if (sgn(q) != 0) {
                red = &r;
                break;
            }
        }
        if (!red) {
            rem.terms.push_back({mon, coef});
            work.erase(it);
            continue;
        }
        Monomial shift = mono_div(mon, red->lm);
        for (auto& t : red->g->terms) {
            Monomial key = mono_mul(t.m, shift);
            Int delta = q * t.c;
            auto [pos, fresh] = work.try_emplace(key, Int(0));
            if (fresh)
                pos->second = -delta;
            else
                pos->second = pos->second - delta;
            if (sgn(pos->second) == 0) work.erase(pos);
        }
    }
    return rem;
}

}  // namespace detail

inline Poly<Int> strong_normal_form(const Poly<Int>& f, const std::vector<Poly<Int>>& G,
                                    const TermOrder& ord) {
    std::vector<const Poly<Int>*> ptrs;
    for (auto& g : G) ptrs.push_back(&g);
    return detail::strong_nf_ptrs(f, ptrs, ord);
}

// Minimal strong sigma-Groebner basis: generates the ideal, leading
// terms detect membership, pairwise non-divisible leading terms,
// leading coefficients positive. Only the LM and LC multisets are
// canonical; callers must not rely on the tails.
inline std::vector<Poly<Int>> strong_groebner_z(const std::vector<Poly<Int>>& gens,
                                                const TermOrder& ord) {
    int nv = -1;
    std::deque<Poly<Int>> todo;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (nv < 0) nv = g.nv;
        if (g.nv != nv) throw input_error("strong_groebner_z: mismatched variable counts");
        todo.push_back(g);
    }
    if (todo.empty()) throw input_error("strong_groebner_z: zero ideal");

    std::vector<Poly<Int>> G;   // all elements ever inserted
    std::vector<char> active;   // retired elements stay for indexing only

    struct PairKey {
        int deg;
        Monomial lcm;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm.e != o.lcm.e) return lcm.e < o.lcm.e;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> pending;

    auto active_ptrs = [&]() {
        std::vector<const Poly<Int>*> ptrs;
        for (size_t k = 0; k < G.size(); ++k)
            if (active[k]) ptrs.push_back(&G[k]);
        return ptrs;
    };
    auto strongly_divides = [](const Poly<Int>& a, const Poly<Int>& b) {
        return mono_divides(a.lm(), b.lm()) &&
               mpz_divisible_p(b.lc().get_mpz_t(), a.lc().get_mpz_t());
    };

    // Insert the normal form of each queued element; retire any element
    // whose leading term becomes strongly reducible by the new one and
    // queue it for re-reduction (its lead strictly drops), which keeps
    // the working basis interreduced and the pair set small.
    auto drain_todo = [&]() {
        while (!todo.empty()) {
            Poly<Int> h = detail::e_normal_form(todo.front(), active_ptrs(), ord);
            todo.pop_front();
            if (h.is_zero()) continue;
            h = detail::sign_normalize(std::move(h));
            int idx = static_cast<int>(G.size());
            for (int k = 0; k < idx; ++k)
                if (active[k] && strongly_divides(h, G[k])) {
                    active[k] = 0;
                    todo.push_back(std::move(G[k]));
                    G[k] = Poly<Int>::zero(nv);
                }
            for (int k = 0; k < idx; ++k) {
                if (!active[k]) continue;
                Monomial l = mono_lcm(G[k].lm(), h.lm());
                pending.insert(PairKey{static_cast<int>(l.deg), l, k, idx});
            }
            G.push_back(std::move(h));
            active.push_back(1);
        }
    };
    drain_todo();

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        if (!active[pk.i] || !active[pk.j]) continue;
        const Poly<Int>& f = G[pk.i];
        const Poly<Int>& g = G[pk.j];
        Monomial qf = mono_div(pk.lcm, f.lm()), qg = mono_div(pk.lcm, g.lm());
        Int cl;
        mpz_lcm(cl.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        // S-polynomial: cancel the leading terms.
        todo.push_back(poly_sub(poly_mul_term(f, qf, Int(cl / f.lc())),
                                poly_mul_term(g, qg, Int(cl / g.lc())), ord));
        // GCD-polynomial: realize gcd(LC_f, LC_g) on lcm(LM_f, LM_g).
        // Redundant when one leading coefficient divides the other.
        if (!mpz_divisible_p(g.lc().get_mpz_t(), f.lc().get_mpz_t()) &&
            !mpz_divisible_p(f.lc().get_mpz_t(), g.lc().get_mpz_t())) {
            Int d, a, b;
            mpz_gcdext(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(),
                       f.lc().get_mpz_t(), g.lc().get_mpz_t());
            todo.push_back(poly_add(poly_mul_term(f, qf, a), poly_mul_term(g, qg, b), ord));
        }
        drain_todo();
    }

    // Minimalize: keep only elements whose leading term (coefficient
    // included) is not divisible by another kept one's.
    std::vector<int> idx;
    for (size_t i = 0; i < G.size(); ++i)
        if (active[i]) idx.push_back(static_cast<int>(i));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = ord.compare(G[a].lm(), G[b].lm());
        if (c != 0) return c < 0;
        return G[a].lc() < G[b].lc();
    });
    std::vector<Poly<Int>> out;
    for (int i : idx) {
        bool redundant = false;
        for (auto& h : out)
            if (mono_divides(h.lm(), G[i].lm()) &&
                mpz_divisible_p(G[i].lc().get_mpz_t(), h.lc().get_mpz_t())) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(G[i]);
    }
    return out;
}

inline bool in_ideal_z(const Poly<Int>& f, const std::vector<Poly<Int>>& strong_gb,
                       const TermOrder& ord) {
    return strong_normal_form(f, strong_gb, ord).is_zero();
}

// Primes dividing some leading coefficient of a minimal strong GB;
// every prime outside the set is sigma-lucky.
inline std::set<Int> non_lucky_primes_of_gb(const std::vector<Poly<Int>>& strong_gb) {
    std::set<Int> out;
    for (auto& g : strong_gb)
        for (auto& p : prime_factors(g.lc())) out.insert(p);
    return out;
}

inline std::set<Int> non_lucky_primes(const std::vector<Poly<Int>>& gens,
                                      const TermOrder& ord) {
    return non_lucky_primes_of_gb(strong_groebner_z(gens, ord));
}

namespace detail {

inline Poly<Int> lift_with_tag(const Poly<Int>& f) {
    // embed Z[x1..xl] into Z[t, x1..xl] with t as variable 0
    Poly<Int> r(f.nv + 1);
    for (auto& t : f.terms) {
        std::vector<unsigned> e(f.nv + 1, 0u);
        for (int i = 0; i < f.nv; ++i) e[i + 1] = t.m.e[i];
        r.terms.push_back({Monomial(std::move(e)), t.c});
    }
    return r;
}

inline Poly<Int> drop_tag(const Poly<Int>& f) {
    Poly<Int> r(f.nv - 1);
    for (auto& t : f.terms) {
        if (t.m.e[0] != 0) throw internal_error("drop_tag: tag variable present");
        std::vector<unsigned> e(t.m.e.begin() + 1, t.m.e.end());
        r.terms.push_back({Monomial(std::move(e)), t.c});
    }
    return r;
}

}  // namespace detail

// Generators of the intersection I cap (c) for a nonzero integer c, by
// tag-variable elimination: strong GB of {t*g_i} + {(1-t)*c} in Z[t,x]
// under an order eliminating t, intersected with Z[x].
inline std::vector<Poly<Int>> intersect_with_integer(const std::vector<Poly<Int>>& gens,
                                                     const Int& c, const TermOrder&) {
    int nv = gens.at(0).nv;
    TermOrder elim = TermOrder::elimination(1);
    std::vector<Poly<Int>> lifted;
    Poly<Int> t(nv + 1);
    t.terms.push_back({Monomial::var(0, nv + 1), Int(1)});
    for (auto& g : gens) {
        Poly<Int> gl = detail::lift_with_tag(g);
        lifted.push_back(poly_mul(t, gl, elim));
    }
    // (1 - t) * c
    Poly<Int> h(nv + 1);
    h.terms.push_back({Monomial::var(0, nv + 1), -c});
    h.terms.push_back({Monomial::one(nv + 1), c});
    lifted.push_back(poly_from_terms(nv + 1, std::move(h.terms), elim));
    std::vector<Poly<Int>> gb = strong_groebner_z(lifted, elim);
    std::vector<Poly<Int>> out;
    for (auto& g : gb)
        if (g.lm().e[0] == 0)  // elimination order: t-free lead => t-free
            out.push_back(detail::drop_tag(g));
    return out;
}

struct ZeroDivisorResult {
    bool zero_divisor = false;
    Poly<Int> witness;  // p*witness in I, witness not in I (when true)
};

// Decides whether the prime p is a zero divisor in Z[x]/I, exactly:
// (I : p) computed via I cap (p) by tag elimination, compared with I by
// mutual strong normal forms. Lucky primes short-circuit to false.
inline ZeroDivisorResult is_zero_divisor_prime(const std::vector<Poly<Int>>& gens,
                                               const TermOrder& ord, std::uint64_t p,
                                               bool use_lucky_shortcut = true) {
    if (!is_prime_u64(p)) throw input_error("is_zero_divisor_prime: p is not prime");
    std::vector<Poly<Int>> gb = strong_groebner_z(gens, ord);
    Int pz(static_cast<unsigned long>(p));
    if (use_lucky_shortcut) {
        bool lucky = true;
        for (auto& g : gb)
            if (mpz_divisible_p(g.lc().get_mpz_t(), pz.get_mpz_t())) {
                lucky = false;
                break;
            }
        if (lucky) return {};  // lucky => non-zero divisor
    }
    std::vector<Poly<Int>> cap = intersect_with_integer(gens, pz, ord);
    for (auto& f : cap) {
        Poly<Int> q = divide_content(f, pz);  // elements of (p) have p | content
        Poly<Int> nf = strong_normal_form(q, gb, ord);
        if (!nf.is_zero()) return {true, q};
    }
    return {};
}

}  // namespace arrfree

#endif
