#ifndef ARRFREE_TESTS_HELPERS_HPP
#define ARRFREE_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "arrfree/arrfree.hpp"

namespace th {

using namespace arrfree;

inline Poly<Rat> pq(const std::string& s, int nv,
                    const TermOrder& ord = TermOrder::degrevlex()) {
    return parse_poly(s, nv, ord);
}
inline Poly<Int> pz(const std::string& s, int nv,
                    const TermOrder& ord = TermOrder::degrevlex()) {
    return parse_poly_z(s, nv, ord);
}
inline Poly<Fp> pf(const std::string& s, int nv, std::uint64_t p,
                   const TermOrder& ord = TermOrder::degrevlex()) {
    return reduce_mod_p(parse_poly_z(s, nv, ord), p);
}

// Random small central arrangement: dim in {2,3}, 2..6 primitive
// pairwise non-proportional forms with entries in [-3,3].
inline Arrangement random_arrangement(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim_d(2, 3), n_d(2, 6), c_d(-3, 3);
    int l = dim_d(rng);
    int n = n_d(rng);
    std::vector<std::vector<long long>> forms;
    int guard = 0;
    while (static_cast<int>(forms.size()) < n) {
        if (++guard > 1000) break;
        std::vector<long long> v(l);
        bool nonzero = false;
        for (auto& c : v) {
            c = c_d(rng);
            nonzero |= (c != 0);
        }
        if (!nonzero) continue;
        try {
            auto cand = forms;
            cand.push_back(v);
            forms = new_arrangement(cand).hyperplanes;  // normalizes + dedupes
        } catch (const input_error&) {
            // proportional to an existing form; try again
        }
    }
    return new_arrangement(forms);
}

// Random integer polynomial in nv variables, entries in [-3,3].
inline Poly<Int> random_poly_z(std::mt19937& rng, int nv,
                               const TermOrder& ord = TermOrder::degrevlex()) {
    std::uniform_int_distribution<int> terms_d(0, 5), c_d(-3, 3), e_d(0, 3);
    std::vector<Term<Int>> ts;
    int k = terms_d(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<unsigned> e(nv);
        for (auto& x : e) x = static_cast<unsigned>(e_d(rng));
        int c = c_d(rng);
        if (c) ts.push_back({Monomial(std::move(e)), Int(c)});
    }
    return poly_from_terms(nv, std::move(ts), ord);
}

// Graded dimension of S/I at degree d, from the staircase of leading
// monomials of a reduced Groebner basis: count degree-d monomials not
// divisible by any leading monomial.
template <class C>
long long quotient_dim_at(const std::vector<Poly<C>>& gb, int nv, int d) {
    std::vector<Monomial> lms;
    for (auto& g : gb) lms.push_back(g.lm());
    long long count = 0;
    std::vector<unsigned> e(nv, 0);
    // enumerate all exponent vectors of total degree d
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nv - 1) {
            e[pos] = static_cast<unsigned>(left);
            Monomial m(e);
            for (auto& lm : lms)
                if (mono_divides(lm, m)) return;
            ++count;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = static_cast<unsigned>(k);
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return count;
}

inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim S(-j)_d in nv variables.
inline long long free_module_dim_at(int j, int d, int nv) {
    return binom(d - j + nv - 1, nv - 1);
}

}  // namespace th

#endif
