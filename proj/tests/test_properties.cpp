// Randomized property suites over small arrangements (dim <= 3, up to 6
// hyperplanes, coefficients in [-3,3]); seeds are fixed for reproducibility.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace arrfree;

namespace {
const TermOrder ord = TermOrder::degrevlex();
const std::vector<std::uint64_t> small_primes{2, 3, 5, 7, 11, 13};
}  // namespace

TEST_CASE("reduction mod p is a ring homomorphism") {
    std::mt19937 rng(101);
    for (int it = 0; it < 300; ++it) {
        Poly<Int> f = th::random_poly_z(rng, 3, ord);
        Poly<Int> g = th::random_poly_z(rng, 3, ord);
        std::uint64_t p = small_primes[it % small_primes.size()];
        CHECK(reduce_mod_p(poly_add(f, g, ord), p) ==
              poly_add(reduce_mod_p(f, p), reduce_mod_p(g, p), ord));
        CHECK(reduce_mod_p(poly_mul(f, g, ord), p) ==
              poly_mul(reduce_mod_p(f, p), reduce_mod_p(g, p), ord));
    }
}

TEST_CASE("generator-count and homological freeness routes agree") {
    std::mt19937 rng(103);
    int done = 0;
    while (done < 200) {
        Arrangement a = th::random_arrangement(rng);
        // over Q (characteristic 0 never divides n): forced cross-check
        CHECK_NOTHROW(is_free<Rat>(a, ord, 0, TeraoCheck::Force));
        // over a good prime not dividing n
        std::uint64_t p = small_primes[done % small_primes.size()];
        if (distinct_mod_p(a, p) && a.n() % static_cast<int>(p) != 0)
            CHECK_NOTHROW(is_free<Fp>(a, ord, p, TeraoCheck::Force));
        ++done;
    }
}

TEST_CASE("free arrangements factor their characteristic polynomial") {
    std::mt19937 rng(107);
    int done = 0, free_seen = 0;
    while (done < 200) {
        Arrangement a = th::random_arrangement(rng);
        std::uint64_t p = small_primes[done % small_primes.size()];
        ++done;
        auto repq = is_free<Rat>(a, ord, 0, TeraoCheck::Skip);
        if (repq.free_arrangement) {
            ++free_seen;
            CHECK(terao_factorization_check(repq, characteristic_polynomial<Rat>(a)));
        }
        if (distinct_mod_p(a, p)) {
            auto repp = is_free<Fp>(a, ord, p, TeraoCheck::Skip);
            if (repp.free_arrangement)
                CHECK(terao_factorization_check(repp,
                                                characteristic_polynomial<Fp>(a, p)));
        }
    }
    CHECK(free_seen > 0);  // the suite actually exercised the property
}

TEST_CASE("lucky primes are non-zero divisors") {
    std::mt19937 rng(109);
    int done = 0, lucky_seen = 0;
    while (done < 200) {
        Arrangement a = th::random_arrangement(rng);
        std::vector<Poly<Int>> j = jacobian_ideal<Int>(a, ord);
        std::set<Int> non_lucky = non_lucky_primes(j, ord);
        std::uint64_t p = small_primes[done % small_primes.size()];
        ++done;
        if (non_lucky.count(Int(static_cast<unsigned long>(p)))) continue;
        ++lucky_seen;
        // decide by the full quotient computation, no lucky shortcut
        auto zd = is_zero_divisor_prime(j, ord, p, /*use_lucky_shortcut=*/false);
        CHECK(!zd.zero_divisor);
    }
    CHECK(lucky_seen >= 50);  // 81 of the 200 sampled pairs are lucky
}

TEST_CASE("non-zero divisors compare Betti tables across the fields") {
    std::mt19937 rng(113);
    int done = 0, compared = 0;
    while (done < 200) {
        Arrangement a = th::random_arrangement(rng);
        std::uint64_t p = small_primes[done % small_primes.size()];
        ++done;
        if (!distinct_mod_p(a, p)) continue;
        std::vector<Poly<Int>> j = jacobian_ideal<Int>(a, ord);
        if (is_zero_divisor_prime(j, ord, p).zero_divisor) continue;
        ++compared;
        BettiTable bq = minimal_free_resolution(jacobian_ideal<Rat>(a, ord), ord, a.dim);
        BettiTable bp = minimal_free_resolution(jacobian_ideal<Fp>(a, ord, p), ord, a.dim);
        CHECK(hdim(bq) <= hdim(bp));
        CHECK(consecutive_cancellation_reachable(bp, bq));
    }
    CHECK(compared >= 100);
}

TEST_CASE("the defining polynomial divides every derivation determinant") {
    std::mt19937 rng(127);
    int done = 0;
    while (done < 200) {
        Arrangement a = th::random_arrangement(rng);
        int l = a.dim;
        auto gens = derivation_module<Rat>(a, ord);
        REQUIRE(static_cast<int>(gens.size()) >= l);
        // random S-combinations of the generators
        std::vector<Derivation<Rat>> picks;
        for (int k = 0; k < l; ++k) {
            Derivation<Rat> d;
            d.comp.assign(l, Poly<Rat>::zero(l));
            for (auto& g : gens) {
                Poly<Int> cz = th::random_poly_z(rng, l, ord);
                Poly<Rat> c = poly_to_rat(cz);
                for (int i = 0; i < l; ++i)
                    d.comp[i] = poly_add(d.comp[i], poly_mul(c, g.comp[i], ord), ord);
            }
            picks.push_back(std::move(d));
        }
        std::vector<std::vector<Poly<Rat>>> m;
        for (auto& d : picks) m.push_back(d.comp);
        Poly<Rat> det = poly_matrix_det(m, ord);
        Poly<Rat> q = defining_polynomial<Rat>(a, ord);
        CHECK((det.is_zero() || exact_divide(det, q, ord).has_value()));
        ++done;
    }
}
