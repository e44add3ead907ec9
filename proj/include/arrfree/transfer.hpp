#ifndef ARRFREE_TRANSFER_HPP
#define ARRFREE_TRANSFER_HPP

#include <optional>
#include <string>
#include <vector>

#include "arrfree/betti.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/zz_groebner.hpp"

namespace arrfree {

// --- prime classification -------------------------------------------------

struct PrimeReport {
    std::uint64_t p = 0;
    bool good = false;           // Q(A) stays reduced mod p
    bool divides_n = false;      // p | number of hyperplanes
    bool sigma_lucky = false;    // p divides no LC of the minimal strong GB of J
    bool zero_divisor = false;   // p is a zero divisor in Z[x]/J
    std::optional<Poly<Int>> zd_witness;
    std::string order_name;      // luckiness is order-dependent
};

// Candidate primes worth examining: everything below `bound`, plus the
// finite sets of non-good and non-lucky primes (so no bad prime above
// the bound is silently treated as harmless).
inline std::vector<std::uint64_t> candidate_primes(const Arrangement& a,
                                                   const TermOrder& ord,
                                                   std::uint64_t bound) {
    std::set<std::uint64_t> ps;
    for (std::uint64_t p : primes_up_to(bound)) ps.insert(p);
    for (auto& p : non_good_primes(a))
        if (mpz_fits_ulong_p(p.get_mpz_t())) ps.insert(p.get_ui());
    std::vector<Poly<Int>> j = jacobian_ideal<Int>(a, ord);
    for (auto& p : non_lucky_primes(j, ord))
        if (mpz_fits_ulong_p(p.get_mpz_t())) ps.insert(p.get_ui());
    return {ps.begin(), ps.end()};
}

inline std::vector<PrimeReport> classify_primes(const Arrangement& a,
                                                const std::vector<std::uint64_t>& primes,
                                                const TermOrder& ord) {
    std::vector<Poly<Int>> j = jacobian_ideal<Int>(a, ord);
    std::vector<Poly<Int>> gb = strong_groebner_z(j, ord);
    std::set<Int> non_lucky = non_lucky_primes_of_gb(gb);
    std::vector<PrimeReport> out;
    for (std::uint64_t p : primes) {
        if (!is_prime_u64(p)) throw input_error("classify_primes: " + std::to_string(p) +
                                                " is not prime");
        PrimeReport r;
        r.p = p;
        r.order_name = ord.name();
        r.good = distinct_mod_p(a, p);
        r.divides_n = (a.n() % static_cast<int>(p) == 0);
        r.sigma_lucky = !non_lucky.count(Int(static_cast<unsigned long>(p)));
        if (r.sigma_lucky) {
            r.zero_divisor = false;  // lucky primes are non-zero divisors
        } else {
            auto zd = is_zero_divisor_prime(j, ord, p, /*use_lucky_shortcut=*/false);
            r.zero_divisor = zd.zero_divisor;
            if (zd.zero_divisor) r.zd_witness = zd.witness;
        }
        out.push_back(std::move(r));
    }
    return out;
}

// --- transfer of freeness Q -> F_p -----------------------------------------

// If A is free over Q with an integer Saito basis of constant c, then
// for every good prime p not dividing c, A_p is free with the same
// exponents (the reduced basis still satisfies Saito's criterion).
struct TransferUpPrime {
    std::uint64_t p = 0;
    bool good = false;
    bool divides_c = false;
    bool certified = false;  // good && !divides_c
    std::optional<FreenessReport> fp_report;  // direct verification over F_p
    bool verified = false;   // certified and exponents match
};

struct TransferUpResult {
    FreenessReport q_report;
    Int saito_c;
    std::set<Int> c_prime_factors;
    std::vector<TransferUpPrime> primes;
};

inline TransferUpResult transfer_up(const Arrangement& a, const TermOrder& ord,
                                    const std::vector<std::uint64_t>& primes,
                                    bool verify = true) {
    TransferUpResult res;
    res.q_report = is_free<Rat>(a, ord);
    if (!res.q_report.free_arrangement)
        throw refusal_error("transfer_up: arrangement is not free over Q");
    res.saito_c = *res.q_report.saito_c;
    res.c_prime_factors = prime_factors(res.saito_c);
    for (std::uint64_t p : primes) {
        TransferUpPrime tp;
        tp.p = p;
        tp.good = distinct_mod_p(a, p);
        tp.divides_c = res.c_prime_factors.count(Int(static_cast<unsigned long>(p))) > 0;
        tp.certified = tp.good && !tp.divides_c;
        if (verify && tp.good) {
            tp.fp_report = is_free<Fp>(a, ord, p);
            if (tp.certified) {
                tp.verified = tp.fp_report->free_arrangement &&
                              tp.fp_report->exponents == res.q_report.exponents;
                if (!tp.verified)
                    throw internal_error("transfer_up: certificate contradicted at p=" +
                                         std::to_string(p));
            }
        }
        res.primes.push_back(std::move(tp));
    }
    return res;
}

// --- transfer of freeness F_p -> Q -----------------------------------------

// If p is good, p does not divide n = |A|, p is a non-zero divisor in
// S/J, and A_p is free, then A is free over Q with the same exponents.
// Evidence recorded: equal Betti tables of S/J over Q and F_p.
struct TransferDownResult {
    std::uint64_t p = 0;
    bool hyp_good = false;
    bool hyp_not_divides_n = false;
    bool hyp_non_zero_divisor = false;
    std::optional<Poly<Int>> zd_witness;
    bool refused = false;
    std::vector<std::string> failed_hypotheses;
    std::optional<FreenessReport> fp_report;
    std::optional<FreenessReport> q_report;   // direct verification
    std::optional<BettiTable> betti_fp, betti_q;
    bool certified = false;
    bool verified = false;
};

inline TransferDownResult transfer_down(const Arrangement& a, const TermOrder& ord,
                                        std::uint64_t p, bool verify = true,
                                        bool with_betti = true) {
    TransferDownResult res;
    res.p = p;
    res.hyp_good = distinct_mod_p(a, p);
    res.hyp_not_divides_n = (a.n() % static_cast<int>(p) != 0);
    if (!res.hyp_good) res.failed_hypotheses.push_back("p is not good");
    if (!res.hyp_not_divides_n) res.failed_hypotheses.push_back("p divides |A|");
    {
        // evaluated even when an earlier gate already failed, so the
        // certificate records every violated hypothesis with evidence
        std::vector<Poly<Int>> j = jacobian_ideal<Int>(a, ord);
        auto zd = is_zero_divisor_prime(j, ord, p);
        res.hyp_non_zero_divisor = !zd.zero_divisor;
        if (zd.zero_divisor) {
            res.zd_witness = zd.witness;
            res.failed_hypotheses.push_back("p is a zero divisor in S/J");
        }
    }
    if (!res.failed_hypotheses.empty()) {
        res.refused = true;
        if (res.hyp_good) res.fp_report = is_free<Fp>(a, ord, p);
        return res;
    }

    res.fp_report = is_free<Fp>(a, ord, p);
    if (!res.fp_report->free_arrangement) {
        res.refused = true;
        res.failed_hypotheses.push_back("A_p is not free");
        return res;
    }
    res.certified = true;
    if (with_betti) {
        res.betti_fp = minimal_free_resolution(jacobian_ideal<Fp>(a, ord, p), ord, a.dim);
        res.betti_q = minimal_free_resolution(jacobian_ideal<Rat>(a, ord), ord, a.dim);
        if (!(*res.betti_fp == *res.betti_q))
            throw internal_error("transfer_down: Betti tables differ at a non-zero divisor");
    }
    if (verify) {
        res.q_report = is_free<Rat>(a, ord);
        res.verified = res.q_report->free_arrangement &&
                       res.q_report->exponents == res.fp_report->exponents;
        if (!res.verified)
            throw internal_error("transfer_down: certificate contradicted over Q");
    }
    return res;
}

// --- point-count application ------------------------------------------------

// Combine the general-dimension point-count criterion over F_p with the
// downward transfer hypotheses to conclude freeness over Q.
struct ApplicationResult {
    std::uint64_t p = 0;
    YoshinagaLdResult criterion;
    bool refused = false;
    std::vector<std::string> failed_hypotheses;
    std::optional<FreenessReport> q_report;
    bool verified = false;
};

inline ApplicationResult applications_check(const Arrangement& a, const TermOrder& ord,
                                            std::uint64_t p, bool verify = true) {
    ApplicationResult res;
    res.p = p;
    if (!distinct_mod_p(a, p)) {
        res.refused = true;
        res.failed_hypotheses.push_back("p is not good");
        return res;
    }
    res.criterion = yoshinaga_ld(a, p);
    if (!res.criterion.concluded) {
        res.refused = true;
        res.failed_hypotheses.push_back("chi(A_p, p^(l-2)) != 0");
        return res;
    }
    if (a.n() % static_cast<int>(p) == 0) {
        res.refused = true;
        res.failed_hypotheses.push_back("p divides |A|");
        return res;
    }
    auto zd = is_zero_divisor_prime(jacobian_ideal<Int>(a, ord), ord, p);
    if (zd.zero_divisor) {
        res.refused = true;
        res.failed_hypotheses.push_back("p is a zero divisor in S/J");
        return res;
    }
    if (verify) {
        res.q_report = is_free<Rat>(a, ord);
        res.verified = res.q_report->free_arrangement &&
                       res.q_report->exponents == res.criterion.exponents;
        if (!res.verified)
            throw internal_error("applications_check: conclusion contradicted over Q");
    }
    return res;
}

}  // namespace arrfree

#endif
