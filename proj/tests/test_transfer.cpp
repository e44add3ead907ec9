#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace arrfree;

namespace {
const TermOrder ord = TermOrder::degrevlex();

const PrimeReport& report_for(const std::vector<PrimeReport>& rs, std::uint64_t p) {
    for (auto& r : rs)
        if (r.p == p) return r;
    throw std::runtime_error("prime missing from report");
}
}  // namespace

TEST_CASE("prime classification") {
    SECTION("quartic: 2 and 3 are good zero divisors") {
        auto rs = classify_primes(builtin_nonfree_s6(), {2, 3, 5, 7}, ord);
        CHECK(report_for(rs, 2).good);
        CHECK(report_for(rs, 2).zero_divisor);
        CHECK(report_for(rs, 3).good);
        CHECK(report_for(rs, 3).zero_divisor);
        CHECK(!report_for(rs, 5).zero_divisor);
        for (auto& r : rs) {
            CHECK(r.order_name == "degrevlex");
            if (r.sigma_lucky) CHECK(!r.zero_divisor);  // lucky => non-zero divisor
            if (r.zero_divisor) {
                REQUIRE(r.zd_witness);
                auto gb = strong_groebner_z(jacobian_ideal<Int>(builtin_nonfree_s6(), ord),
                                            ord);
                CHECK(in_ideal_z(poly_scalar_mul(*r.zd_witness,
                                                 Int(static_cast<unsigned long>(r.p))),
                                 gb, ord));
                CHECK(!in_ideal_z(*r.zd_witness, gb, ord));
            }
        }
    }
    SECTION("n = 7 is flagged at p = 7") {
        auto rs = classify_primes(builtin_example_435(), {2, 7}, ord);
        CHECK(report_for(rs, 7).divides_n);
        CHECK(!report_for(rs, 2).divides_n);
    }
    SECTION("merging lines at p = 2") {
        auto rs = classify_primes(builtin_pm2_lines(), {2, 3}, ord);
        CHECK(!report_for(rs, 2).good);
        CHECK(report_for(rs, 3).good);
    }
    SECTION("candidate assembly covers the exceptional sets") {
        auto cand = candidate_primes(builtin_pm2_lines(), ord, 5);
        CHECK(std::count(cand.begin(), cand.end(), 2) == 1);  // non-good prime
        CHECK(std::count(cand.begin(), cand.end(), 5) == 1);  // below the bound
    }
    SECTION("composite candidates are rejected") {
        CHECK_THROWS_AS(classify_primes(builtin_boolean(2), {4}, ord), input_error);
    }
}

TEST_CASE("transfer from Q to F_p") {
    SECTION("protected primes keep the exponents, p = 2 is recomputed") {
        auto res = transfer_up(builtin_example_435(), ord, {2, 3, 5});
        CHECK(res.q_report.exponents == std::vector<int>{1, 3, 3});
        CHECK(res.saito_c % 2 == 0);
        CHECK(res.c_prime_factors.count(Int(2)) == 1);

        auto& p2 = res.primes[0];
        CHECK(p2.p == 2);
        CHECK(p2.good);
        CHECK(p2.divides_c);
        CHECK(!p2.certified);  // unprotected: direct computation decides
        REQUIRE(p2.fp_report);
        CHECK(p2.fp_report->exponents == std::vector<int>{1, 2, 4});

        for (size_t i : {size_t(1), size_t(2)}) {
            CHECK(res.primes[i].certified);
            CHECK(res.primes[i].verified);
            REQUIRE(res.primes[i].fp_report);
            CHECK(res.primes[i].fp_report->exponents == std::vector<int>{1, 3, 3});
        }
    }
    SECTION("failures of same-exponent freeness only at divisors of c") {
        auto res = transfer_up(builtin_example_435(), ord, {2, 3, 5, 11, 13});
        for (auto& tp : res.primes) {
            if (!tp.good || !tp.fp_report) continue;
            bool same = tp.fp_report->free_arrangement &&
                        tp.fp_report->exponents == res.q_report.exponents;
            if (!same) CHECK(tp.divides_c);
        }
    }
    SECTION("refuses a non-free input") {
        CHECK_THROWS_AS(transfer_up(builtin_nonfree_s6(), ord, {5}), refusal_error);
    }
}

TEST_CASE("transfer from F_p to Q") {
    SECTION("certified at p = 5 with matching Betti tables") {
        auto res = transfer_down(builtin_example_435(), ord, 5);
        CHECK(res.hyp_good);
        CHECK(res.hyp_not_divides_n);
        CHECK(res.hyp_non_zero_divisor);
        CHECK(!res.refused);
        CHECK(res.certified);
        CHECK(res.verified);
        REQUIRE(res.fp_report);
        REQUIRE(res.q_report);
        CHECK(res.fp_report->exponents == std::vector<int>{1, 3, 3});
        CHECK(res.q_report->exponents == std::vector<int>{1, 3, 3});
        REQUIRE(res.betti_fp);
        REQUIRE(res.betti_q);
        CHECK(*res.betti_fp == *res.betti_q);
    }
    SECTION("quartic refused at p = 2 and 3 on the zero-divisor gate") {
        for (std::uint64_t p : {2ull, 3ull}) {
            auto res = transfer_down(builtin_nonfree_s6(), ord, p);
            CHECK(res.refused);
            CHECK(!res.certified);
            CHECK(!res.hyp_non_zero_divisor);
            REQUIRE(res.zd_witness);
            REQUIRE(res.fp_report);  // A_p is free anyway -- but not transferable
            CHECK(res.fp_report->exponents == std::vector<int>{1, 1, 2});
            CHECK(!is_free<Rat>(builtin_nonfree_s6(), ord).free_arrangement);
        }
    }
    SECTION("p dividing n is refused") {
        auto res = transfer_down(builtin_example_435(), ord, 7);
        CHECK(res.refused);
        CHECK(!res.hyp_not_divides_n);
    }
    SECTION("non-good p is refused") {
        auto res = transfer_down(builtin_pm2_lines(), ord, 2);
        CHECK(res.refused);
        CHECK(!res.hyp_good);
    }
}

TEST_CASE("freeness conclusions from point counts") {
    SECTION("chi(A_3, 3) = 0 concludes (1,3,3), verified over Q") {
        auto res = applications_check(builtin_example_435(), ord, 3);
        CHECK(!res.refused);
        REQUIRE(res.criterion.concluded);
        CHECK(res.criterion.exponents == std::vector<int>{1, 3, 3});
        CHECK(res.verified);
    }
    SECTION("chi(A_5, 5) = 16 is inconclusive") {
        auto res = applications_check(builtin_example_435(), ord, 5);
        CHECK(res.refused);
        CHECK(!res.criterion.concluded);
        CHECK(res.criterion.chi_value == 16);  // (5-1)(5-3)^2
    }
    SECTION("Boolean is never concluded this way") {
        auto res = applications_check(builtin_boolean(3), ord, 3);
        CHECK(res.refused);
        CHECK(!res.criterion.concluded);
    }
}
