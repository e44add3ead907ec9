#ifndef ARRFREE_PRIME_UTIL_HPP
#define ARRFREE_PRIME_UTIL_HPP

#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "arrfree/errors.hpp"

namespace arrfree {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    Int z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;  // exact below 2^64
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

// Prime factorization of |n| by trial division plus Pollard rho for the
// occasional large cofactor (leading coefficients of strong GBs can grow).
inline std::set<Int> prime_factors(Int n) {
    std::set<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.insert(Int(static_cast<unsigned long>(d)));
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
    }
    Int d = 17;
    while (n > 1 && d * d <= n && d < 100000) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out.insert(d);
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        }
        d += 2;
    }
    if (n == 1) return out;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out.insert(n);
        return out;
    }
    // Pollard rho on the remaining composite.
    std::vector<Int> stack{n};
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345ul);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            out.insert(m);
            continue;
        }
        Int f = m;
        while (f == m) {
            Int x = rng.get_z_range(m - 2) + 2, y = x, c = rng.get_z_range(m - 1) + 1;
            f = 1;
            while (f == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                Int diff = abs(x - y);
                if (diff == 0) { f = m; break; }
                mpz_gcd(f.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            }
        }
        stack.push_back(f);
        stack.push_back(m / f);
    }
    return out;
}

}  // namespace arrfree

#endif
