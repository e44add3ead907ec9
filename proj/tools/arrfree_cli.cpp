// Command-line surface: freeness, characteristic polynomials, prime
// classification and transfer certificates for central hyperplane
// arrangements with exact arithmetic over Q and F_p.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arrfree/arrfree.hpp"

namespace {

using namespace arrfree;

struct Options {
    std::string field = "q";
    std::uint64_t prime = 0;
    std::string order = "degrevlex";
    std::string builtin;
    std::string input;
    std::string output;
    std::uint64_t max_prime = 20;
    bool json_flag = false;  // output is always JSON; kept for scripting symmetry
    std::string gen_name;    // positional for `gen`
};

TermOrder term_order(const Options& o) {
    if (o.order == "degrevlex") return TermOrder::degrevlex();
    if (o.order == "lex") return TermOrder::lex();
    throw input_error("unknown term order: " + o.order);
}

Arrangement load_arrangement(const Options& o) {
    if (!o.builtin.empty() && !o.input.empty())
        throw input_error("give either --builtin or --input, not both");
    if (!o.builtin.empty()) return builtin_arrangement(o.builtin);
    if (!o.input.empty()) return arrangement_from_file(o.input);
    throw input_error("an arrangement is required: --builtin <name> or --input <path>");
}

void require_field(const Options& o) {
    if (o.field != "q" && o.field != "fp")
        throw input_error("--field must be q or fp");
    if (o.field == "fp" && o.prime == 0)
        throw input_error("--field fp requires --prime");
    if (o.field == "q" && o.prime != 0)
        throw input_error("--prime only applies with --field fp");
    if (o.prime != 0 && !is_prime_u64(o.prime))
        throw input_error("--prime must be a prime number");
}

json run_freeness(const Options& o, const Arrangement& a, const TermOrder& ord) {
    require_field(o);
    FreenessReport rep = (o.field == "q") ? is_free<Rat>(a, ord)
                                          : is_free<Fp>(a, ord, o.prime);
    return freeness_json(rep);
}

json run_charpoly(const Options& o, const Arrangement& a) {
    require_field(o);
    IntersectionLattice lat = (o.field == "q")
                                  ? intersection_lattice<Rat>(a)
                                  : intersection_lattice<Fp>(a, o.prime);
    CharPoly chi = characteristic_polynomial(lat);
    json out = charpoly_json(chi, o.prime);
    out["lattice"] = lattice_json(lat);
    return out;
}

json run_primes(const Options& o, const Arrangement& a, const TermOrder& ord) {
    std::vector<std::uint64_t> cand = candidate_primes(a, ord, o.max_prime);
    json out;
    out["candidates"] = cand;
    json reports = json::array();
    for (auto& r : classify_primes(a, cand, ord)) reports.push_back(prime_report_json(r));
    out["reports"] = std::move(reports);
    return out;
}

json run_reduce(const Options& o, const Arrangement& a) {
    if (o.prime == 0) throw input_error("reduce requires --prime");
    if (!is_prime_u64(o.prime)) throw input_error("--prime must be a prime number");
    if (!distinct_mod_p(a, o.prime))
        throw refusal_error("prime " + std::to_string(o.prime) + " not good");
    return arrangement_json(reduce_arrangement(a, o.prime));
}

template <class C>
json saito_report(const Arrangement& a, const std::vector<Derivation<C>>& cand,
                  const TermOrder& ord, std::uint64_t p) {
    auto res = saito_check<C>(a, cand, ord, p);
    json out;
    out["is_basis"] = res.is_basis;
    if (res.is_basis) out["c"] = coeff_str(res.c);
    return out;
}

// `saito` checks candidate derivations (from the input file's
// "derivations": list of lists of l polynomial strings); without
// candidates it uses the computed minimal generators.
json run_saito(const Options& o, const TermOrder& ord) {
    require_field(o);
    json in;
    Arrangement a = [&] {
        if (!o.input.empty()) {
            std::ifstream f(o.input);
            if (!f) throw input_error("cannot open input file: " + o.input);
            try {
                f >> in;
            } catch (const json::exception& e) {
                throw input_error(std::string("malformed JSON: ") + e.what());
            }
            if (in.contains("arrangement")) return arrangement_from_json(in["arrangement"]);
            return arrangement_from_json(in);
        }
        return load_arrangement(o);
    }();

    std::vector<std::vector<Poly<Rat>>> cand_q;
    if (in.contains("derivations")) {
        for (auto& d : in["derivations"]) {
            std::vector<Poly<Rat>> comp;
            for (auto& s : d) comp.push_back(parse_poly(s.get<std::string>(), a.dim, ord));
            if (static_cast<int>(comp.size()) != a.dim)
                throw input_error("each derivation needs exactly dim components");
            cand_q.push_back(std::move(comp));
        }
    }

    if (o.field == "q") {
        std::vector<Derivation<Rat>> cand;
        if (cand_q.empty()) {
            cand = derivation_module<Rat>(a, ord);
        } else {
            for (auto& comp : cand_q) cand.push_back({comp, 0});
        }
        return saito_report<Rat>(a, cand, ord, 0);
    }
    std::vector<Derivation<Fp>> cand;
    if (cand_q.empty()) {
        cand = derivation_module<Fp>(a, ord, o.prime);
    } else {
        for (auto& comp : cand_q) {
            Derivation<Fp> d;
            for (auto& f : comp) {
                auto [fz, den] = clear_denominators(f);
                if (Fp::from_int(den, o.prime).v == 0)
                    throw input_error("derivation has a denominator divisible by p");
                d.comp.push_back(poly_scalar_mul(reduce_mod_p(fz, o.prime),
                                                 inv(Fp::from_int(den, o.prime))));
            }
            cand.push_back(std::move(d));
        }
    }
    return saito_report<Fp>(a, cand, ord, o.prime);
}

json run_resolve(const Options& o, const Arrangement& a, const TermOrder& ord) {
    require_field(o);
    BettiTable b = (o.field == "q")
                       ? minimal_free_resolution(jacobian_ideal<Rat>(a, ord), ord, a.dim)
                       : minimal_free_resolution(jacobian_ideal<Fp>(a, ord, o.prime), ord,
                                                 a.dim);
    json out = betti_json(b);
    out["hdim"] = hdim(b);
    return out;
}

json run_analyze(const Options& o, const Arrangement& a, const TermOrder& ord) {
    json out;
    out["arrangement"] = arrangement_json(a);
    out["freeness"] = run_freeness(o, a, ord);
    out["charpoly"] = run_charpoly(o, a);
    out["primes"] = run_primes(o, a, ord);
    return out;
}

void emit(const Options& o, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.output);
        if (!f) throw input_error("cannot open output file: " + o.output);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact freeness computations for central hyperplane arrangements"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_field) {
        sub->add_option("--builtin", o.builtin, "built-in arrangement name");
        sub->add_option("--input", o.input, "arrangement JSON file");
        sub->add_option("--output", o.output, "write the report to this file");
        sub->add_option("--order", o.order, "term order: degrevlex or lex");
        sub->add_flag("--json", o.json_flag, "emit JSON (always on)");
        if (with_field) {
            sub->add_option("--field", o.field, "coefficient field: q or fp");
            sub->add_option("--prime", o.prime, "prime for --field fp");
        }
    };

    CLI::App* freeness = app.add_subcommand("freeness", "decide freeness and exponents");
    add_common(freeness, true);
    CLI::App* charpoly = app.add_subcommand("charpoly", "intersection lattice and chi");
    add_common(charpoly, true);
    CLI::App* primes = app.add_subcommand("primes", "classify candidate primes");
    add_common(primes, false);
    primes->add_option("--max-prime", o.max_prime, "classify all primes up to this bound");
    CLI::App* reduce = app.add_subcommand("reduce", "reduce the arrangement mod p");
    add_common(reduce, false);
    reduce->add_option("--prime", o.prime, "prime modulus")->required();
    CLI::App* saito = app.add_subcommand("saito", "determinant criterion for a basis");
    add_common(saito, true);
    CLI::App* gen = app.add_subcommand("gen", "emit a built-in arrangement");
    gen->add_option("name", o.gen_name, "built-in arrangement name")->required();
    gen->add_option("--output", o.output, "write the report to this file");
    CLI::App* resolve = app.add_subcommand("resolve", "Betti table of S/J");
    add_common(resolve, true);
    CLI::App* analyze = app.add_subcommand("analyze", "freeness + charpoly + primes");
    add_common(analyze, true);
    analyze->add_option("--max-prime", o.max_prime, "classify all primes up to this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // CLI11 prints help/errors; nonzero on failure
    }

    try {
        using arrfree::json;
        json out;
        if (gen->parsed()) {
            out = arrangement_json(builtin_arrangement(o.gen_name));
        } else if (saito->parsed()) {
            out = run_saito(o, term_order(o));
        } else {
            Arrangement a = load_arrangement(o);
            TermOrder ord = term_order(o);
            if (freeness->parsed()) out = run_freeness(o, a, ord);
            else if (charpoly->parsed()) out = run_charpoly(o, a);
            else if (primes->parsed()) out = run_primes(o, a, ord);
            else if (reduce->parsed()) out = run_reduce(o, a);
            else if (resolve->parsed()) out = run_resolve(o, a, ord);
            else if (analyze->parsed()) out = run_analyze(o, a, ord);
        }
        emit(o, out);
        return 0;
    } catch (const arrfree::refusal_error& e) {
        emit(o, arrfree::json{{"error", e.what()}});
        return 1;
    } catch (const arrfree::input_error& e) {
        emit(o, arrfree::json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
