#ifndef ARRFREE_JSON_IO_HPP
#define ARRFREE_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "arrfree/arrangement.hpp"
#include "arrfree/betti.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/text.hpp"
#include "arrfree/transfer.hpp"

namespace arrfree {

using json = nlohmann::ordered_json;

// Integers above 2^53 in magnitude are serialized as decimal strings to
// survive double-based JSON consumers.
inline json int_json(const Int& v) {
    static const Int bound = Int(1) << 53;
    Int a = v < 0 ? Int(-v) : v;
    if (a <= bound) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw input_error("expected an integer or decimal string");
}

// --- polynomials ----------------------------------------------------------

template <class C>
json poly_json(const Poly<C>& f) {
    json out = json::array();
    for (auto& t : f.terms) {
        json term;
        term["coeff"] = coeff_str(t.c);
        term["exps"] = t.m.e;
        out.push_back(std::move(term));
    }
    return out;
}

inline Poly<Rat> poly_from_json(const json& j, int nvars,
                                const TermOrder& ord = TermOrder::degrevlex()) {
    if (!j.is_array()) throw input_error("polynomial JSON must be an array of terms");
    std::vector<Term<Rat>> ts;
    for (auto& term : j) {
        if (!term.contains("coeff") || !term.contains("exps"))
            throw input_error("polynomial term needs 'coeff' and 'exps'");
        Rat c(term["coeff"].get<std::string>());
        c.canonicalize();
        std::vector<unsigned> e = term["exps"].get<std::vector<unsigned>>();
        if (static_cast<int>(e.size()) != nvars)
            throw input_error("polynomial term exponent length mismatch");
        ts.push_back({Monomial(std::move(e)), c});
    }
    return poly_from_terms(nvars, std::move(ts), ord);
}

// --- arrangements ----------------------------------------------------------

inline json arrangement_json(const Arrangement& a) {
    json out;
    out["name"] = a.name;
    out["dim"] = a.dim;
    out["hyperplanes"] = a.hyperplanes;
    return out;
}

inline Arrangement arrangement_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("hyperplanes"))
        throw input_error("arrangement JSON needs 'dim' and 'hyperplanes'");
    auto hyps = j["hyperplanes"].get<std::vector<std::vector<long long>>>();
    int dim = j["dim"].get<int>();
    for (auto& h : hyps)
        if (static_cast<int>(h.size()) != dim)
            throw input_error("arrangement JSON: form length differs from dim");
    return new_arrangement(std::move(hyps),
                           j.contains("name") ? j["name"].get<std::string>() : "");
}

inline Arrangement arrangement_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    return arrangement_from_json(j);
}

// --- reports ----------------------------------------------------------------

inline json betti_json(const BettiTable& b) {
    json entries = json::array();
    for (auto& [k, v] : b.entries)
        entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
    return json{{"entries", std::move(entries)}};
}

template <class C>
json derivation_json(const Derivation<C>& d) {
    json out = json::array();
    for (auto& f : d.comp) out.push_back(poly_str(f));
    return out;
}

inline json freeness_json(const FreenessReport& r) {
    json out;
    out["field"] = r.over_q ? "q" : ("fp(" + std::to_string(r.p) + ")");
    out["free"] = r.free_arrangement;
    out["exponents"] = r.exponents;
    out["generator_degrees"] = r.generator_degrees;
    if (r.saito_c) out["saito_c"] = int_json(*r.saito_c);
    out["method"] = r.method;
    return out;
}

inline json charpoly_json(const CharPoly& chi, std::uint64_t p = 0) {
    json out;
    json coeffs = json::array();
    for (auto& c : chi.c) coeffs.push_back(int_json(c));
    out["coefficients"] = std::move(coeffs);
    out["eval_at_minus_1"] = int_json(chi.evaluate(Int(-1)));
    out["eval_at_1"] = int_json(chi.evaluate(Int(1)));
    if (p) out["eval_at_p"] = int_json(chi.evaluate(Int(static_cast<unsigned long>(p))));
    return out;
}

inline json lattice_json(const IntersectionLattice& lat) {
    json flats = json::array();
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        std::vector<int> idx;
        for (int j = 0; j < lat.n; ++j)
            if (lat.flats[i].hyps & (1ull << j)) idx.push_back(j);
        flats.push_back({{"rank", lat.flats[i].rank},
                         {"hyperplanes", idx},
                         {"mobius", int_json(lat.mobius[i])}});
    }
    return json{{"dim", lat.dim}, {"n", lat.n}, {"flats", std::move(flats)}};
}

inline json groebner_report_json(const std::vector<Poly<Int>>& gb, const TermOrder& ord) {
    json out;
    out["order"] = ord.name();
    json gens = json::array(), lms = json::array(), lcs = json::array();
    for (auto& g : gb) {
        gens.push_back(poly_str(g));
        lms.push_back(mono_str(g.lm(), g.nv));
        lcs.push_back(int_json(g.lc()));
    }
    out["generators"] = std::move(gens);
    out["lm"] = std::move(lms);
    out["lc"] = std::move(lcs);
    return out;
}

inline json prime_report_json(const PrimeReport& r) {
    json out;
    out["p"] = static_cast<long long>(r.p);
    out["good"] = r.good;
    out["divides_n"] = r.divides_n;
    out["sigma_lucky"] = r.sigma_lucky;
    out["zero_divisor"] = r.zero_divisor;
    out["order"] = r.order_name;
    if (r.zd_witness) out["zero_divisor_witness"] = poly_str(*r.zd_witness);
    return out;
}

inline json transfer_up_json(const TransferUpResult& r) {
    json out;
    out["direction"] = "up";
    out["q_freeness"] = freeness_json(r.q_report);
    out["saito_c"] = int_json(r.saito_c);
    json factors = json::array();
    for (auto& f : r.c_prime_factors) factors.push_back(int_json(f));
    out["saito_c_prime_factors"] = std::move(factors);
    json primes = json::array();
    for (auto& tp : r.primes) {
        json pj;
        pj["p"] = static_cast<long long>(tp.p);
        pj["good"] = tp.good;
        pj["divides_c"] = tp.divides_c;
        pj["certified"] = tp.certified;
        pj["verified"] = tp.verified;
        if (tp.fp_report) pj["fp_freeness"] = freeness_json(*tp.fp_report);
        primes.push_back(std::move(pj));
    }
    out["primes"] = std::move(primes);
    return out;
}

inline json transfer_down_json(const TransferDownResult& r) {
    json out;
    out["direction"] = "down";
    out["p"] = static_cast<long long>(r.p);
    json hyp;
    hyp["good"] = r.hyp_good;
    hyp["not_divides_n"] = r.hyp_not_divides_n;
    hyp["non_zero_divisor"] = r.hyp_non_zero_divisor;
    if (r.zd_witness) hyp["zero_divisor_witness"] = poly_str(*r.zd_witness);
    out["hypotheses"] = std::move(hyp);
    out["refused"] = r.refused;
    out["failed_hypotheses"] = r.failed_hypotheses;
    if (r.fp_report) out["fp_freeness"] = freeness_json(*r.fp_report);
    if (r.q_report) out["q_freeness"] = freeness_json(*r.q_report);
    if (r.betti_fp) out["betti_fp"] = betti_json(*r.betti_fp);
    if (r.betti_q) out["betti_q"] = betti_json(*r.betti_q);
    out["certified"] = r.certified;
    out["verified"] = r.verified;
    return out;
}

inline json applications_json(const ApplicationResult& r) {
    json out;
    out["p"] = static_cast<long long>(r.p);
    out["chi_at_p_power"] = int_json(r.criterion.chi_value);
    out["concluded"] = r.criterion.concluded;
    out["refused"] = r.refused;
    out["failed_hypotheses"] = r.failed_hypotheses;
    if (r.criterion.concluded) out["exponents"] = r.criterion.exponents;
    if (r.q_report) out["q_freeness"] = freeness_json(*r.q_report);
    out["verified"] = r.verified;
    return out;
}

}  // namespace arrfree

#endif
