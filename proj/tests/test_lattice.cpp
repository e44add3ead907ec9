#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace arrfree;

namespace {

CharPoly from_coeffs(std::vector<long> asc) {  // asc[k] = coefficient of t^k
    CharPoly f;
    for (long c : asc) f.c.push_back(Int(c));
    return f;
}

}  // namespace

TEST_CASE("Boolean lattice") {
    Arrangement b = builtin_boolean(3);
    IntersectionLattice lat = intersection_lattice<Rat>(b);
    CHECK(lat.flats.size() == 8);  // all subsets of 3 independent forms
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        int r = lat.flats[i].rank;
        CHECK(lat.mobius[i] == ((r % 2 == 0) ? Int(1) : Int(-1)));
        CHECK(r == __builtin_popcountll(lat.flats[i].hyps));
    }
    CharPoly chi = characteristic_polynomial(lat);
    CHECK(chi == from_coeffs({-1, 3, -3, 1}));  // (t-1)^3
}

TEST_CASE("three generic lines in the plane") {
    Arrangement a = new_arrangement({{1, 0}, {0, 1}, {1, 1}});
    IntersectionLattice lat = intersection_lattice<Rat>(a);
    REQUIRE(lat.flats.size() == 5);  // bottom, 3 atoms, top
    CHECK(lat.flats.back().rank == 2);
    CHECK(lat.mobius.back() == 2);  // mu(top) = 2
}

TEST_CASE("characteristic polynomials of the named examples") {
    SECTION("(t-1)(t-3)^2 = t^3 - 7t^2 + 15t - 9") {
        CharPoly chi = characteristic_polynomial<Rat>(builtin_example_435());
        CHECK(chi == from_coeffs({-9, 15, -7, 1}));
        CHECK(chi == expand_exponent_product({1, 3, 3}, 3));
    }
    SECTION("sextic over F_3: (t-1)(t-2)(t-3)") {
        CharPoly chi = characteristic_polynomial<Fp>(builtin_sextic_f3(), 3);
        CHECK(chi == expand_exponent_product({1, 2, 3}, 3));
        CHECK(chi.evaluate(Int(3)) == 0);
    }
    SECTION("Moebius consistency: sum over lower intervals vanishes") {
        for (auto name : {"example-435", "nonfree-s6", "ziegler-f3"}) {
            IntersectionLattice lat = intersection_lattice<Rat>(builtin_arrangement(name));
            for (size_t i = 0; i < lat.flats.size(); ++i) {
                if (lat.flats[i].rank == 0) continue;
                Int s = 0;
                for (size_t k = 0; k <= i; ++k)
                    if ((lat.flats[k].hyps & lat.flats[i].hyps) == lat.flats[k].hyps)
                        s += lat.mobius[k];
                CHECK(s == 0);
            }
        }
    }
    SECTION("alternating signs") {
        for (auto name : {"boolean-3", "example-435", "nonfree-s6", "sextic-f3"}) {
            CharPoly chi = characteristic_polynomial<Rat>(builtin_arrangement(name));
            int l = chi.degree();
            for (int k = 0; k <= l; ++k) {
                Int expect_sign = ((l - k) % 2 == 0) ? 1 : -1;
                CHECK(chi.c[k] * expect_sign >= 0);
            }
        }
    }
    SECTION("chamber counts for the Boolean arrangement") {
        CharPoly chi = characteristic_polynomial<Rat>(builtin_boolean(3));
        Int minus1 = chi.evaluate(Int(-1));
        CHECK((minus1 < 0 ? Int(-minus1) : minus1) == 8);  // 8 chambers
    }
}

TEST_CASE("point counting matches chi") {
    SECTION("Boolean, p=3: (3-1)^3 = 8") {
        CHECK(count_complement_points(builtin_boolean(3), 3) == 8);
    }
    SECTION("sextic over F_3: chi(3) = 0") {
        CHECK(count_complement_points(builtin_sextic_f3(), 3) == 0);
    }
    SECTION("nine lines mod 3: the two points +-(1,1,1) remain") {
        Int c = count_complement_points(builtin_ziegler_f3(), 3);
        CHECK(c == 2);
        CHECK(characteristic_polynomial<Fp>(builtin_ziegler_f3(), 3).evaluate(Int(3)) == c);
    }
    SECTION("size guard") {
        CHECK_THROWS_AS(count_complement_points(builtin_boolean(3), 1009, 1000000),
                        input_error);
    }
}

TEST_CASE("factorization check for free arrangements") {
    TermOrder ord = TermOrder::degrevlex();
    SECTION("over Q with (1,3,3)") {
        auto rep = is_free<Rat>(builtin_example_435(), ord);
        CharPoly chi = characteristic_polynomial<Rat>(builtin_example_435());
        CHECK(terao_factorization_check(rep, chi));
    }
    SECTION("over F_2 with (1,2,4)") {
        auto rep = is_free<Fp>(builtin_example_435(), ord, 2);
        CharPoly chi = characteristic_polynomial<Fp>(builtin_example_435(), 2);
        CHECK(terao_factorization_check(rep, chi));
        CHECK(chi == expand_exponent_product({1, 2, 4}, 3));
    }
    SECTION("Boolean (1,1,1) against (t-1)^3") {
        auto rep = is_free<Rat>(builtin_boolean(3), ord);
        CHECK(terao_factorization_check(
            rep, characteristic_polynomial<Rat>(builtin_boolean(3))));
    }
    SECTION("non-free report is rejected") {
        auto rep = is_free<Rat>(builtin_nonfree_s6(), ord);
        CHECK_THROWS_AS(
            terao_factorization_check(rep,
                                      characteristic_polynomial<Rat>(builtin_nonfree_s6())),
            input_error);
    }
}

TEST_CASE("planar freeness criterion over F_p") {
    TermOrder ord = TermOrder::degrevlex();
    SECTION("sextic, |A| = 6 = 2p: case 1 predicts free") {
        auto y = yoshinaga_3d(builtin_sextic_f3(), 3);
        CHECK(y.applicable);
        CHECK(y.case_id == 1);
        CHECK(y.predicts_free);
        CHECK(is_free<Fp>(builtin_sextic_f3(), ord, 3).free_arrangement);
    }
    SECTION("nine lines, |A| = 9 >= 6: predicts non-free") {
        auto y = yoshinaga_3d(builtin_ziegler_f3(), 3);
        CHECK(y.applicable);
        CHECK(y.case_id == 1);
        CHECK(!y.predicts_free);
        CHECK(y.chi_at_p != 0);
        CHECK(!is_free<Fp>(builtin_ziegler_f3(), ord, 3).free_arrangement);
    }
    SECTION("|A| = 2 at p = 3 is outside all cases") {
        Arrangement a = new_arrangement({{1, 0, 0}, {0, 1, 0}});
        auto y = yoshinaga_3d(a, 3);
        CHECK(!y.applicable);
    }
    SECTION("dimension must be 3") {
        CHECK_THROWS_AS(yoshinaga_3d(builtin_pm2_lines(), 3), input_error);
    }
}

TEST_CASE("point-count freeness criterion in general dimension") {
    SECTION("sextic at p=3: chi(3)=0 predicts sorted exponents (1,2,3)") {
        auto y = yoshinaga_ld(builtin_sextic_f3(), 3);
        REQUIRE(y.concluded);
        CHECK(y.exponents == std::vector<int>{1, 2, 3});
    }
    SECTION("Boolean at p=3: chi(3) = 8, no prediction") {
        auto y = yoshinaga_ld(builtin_boolean(3), 3);
        CHECK(!y.concluded);
        CHECK(y.chi_value == 8);
    }
    SECTION("rank 2: chi(1) = 0 always, exponents (1, n-1)") {
        auto y = yoshinaga_ld(builtin_pm2_lines(), 3);
        REQUIRE(y.concluded);
        CHECK(y.exponents == std::vector<int>{1, 3});
    }
}

TEST_CASE("point-count law on all builtins within the enumeration bound") {
    for (auto& name : builtin_names()) {
        Arrangement a = builtin_arrangement(name);
        for (std::uint64_t p : primes_up_to(31)) {
            Int size = 1;
            for (int i = 0; i < a.dim; ++i) size *= static_cast<unsigned long>(p);
            if (size > 1000000) continue;
            if (!distinct_mod_p(a, p)) continue;
            INFO(name << " at p=" << p);
            Int brute = count_complement_points(a, p);
            Int chi = characteristic_polynomial<Fp>(a, p).evaluate(
                Int(static_cast<unsigned long>(p)));
            CHECK(brute == chi);
        }
    }
}
