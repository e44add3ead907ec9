#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace arrfree;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

json run_json(const std::string& args, int expect_status = 0) {
    RunResult r = run_cli(args);
    INFO(args << " -> " << r.out);
    REQUIRE(r.status == expect_status);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("JSON round trips") {
    SECTION("arrangement") {
        for (auto& name : builtin_names()) {
            Arrangement a = builtin_arrangement(name);
            Arrangement b = arrangement_from_json(arrangement_json(a));
            CHECK(b.hyperplanes == a.hyperplanes);
            CHECK(b.dim == a.dim);
            CHECK(b.name == a.name);
            // byte-identical regeneration
            CHECK(arrangement_json(a).dump() == arrangement_json(b).dump());
        }
    }
    SECTION("polynomial") {
        TermOrder ord = TermOrder::degrevlex();
        Poly<Rat> f = parse_poly("3/2x^2y - 7z + 1", 3, ord);
        CHECK(poly_from_json(poly_json(f), 3, ord) == f);
    }
    SECTION("large integers become decimal strings") {
        Int big("123456789123456789123456789");
        json j = int_json(big);
        CHECK(j.is_string());
        CHECK(int_from_json(j) == big);
        json small = int_json(Int(-42));
        CHECK(small.is_number_integer());
        CHECK(int_from_json(small) == -42);
    }
}

TEST_CASE("command line reports") {
    SECTION("freeness over Q") {
        json j = run_json("freeness --builtin example-435 --field q");
        CHECK(j["free"] == true);
        CHECK(j["exponents"] == json::array({1, 3, 3}));
    }
    SECTION("freeness over F_2") {
        json j = run_json("freeness --builtin example-435 --field fp --prime 2");
        CHECK(j["free"] == true);
        CHECK(j["exponents"] == json::array({1, 2, 4}));
    }
    SECTION("reduce refuses a non-good prime with exit 1") {
        RunResult r = run_cli("reduce --builtin pm2-lines --prime 2");
        CHECK(r.status == 1);
        json j = json::parse(r.out);
        CHECK(j["error"] == "prime 2 not good");
    }
    SECTION("gen emits the arrangement and round-trips through --input") {
        json j = run_json("gen boolean-3");
        CHECK(j["hyperplanes"].size() == 3);
        json b2 = run_json("gen shicatalan-b2-cone");
        CHECK(b2["dim"] == 3);
        CHECK(b2["hyperplanes"].size() == 21);
        json zg = run_json("gen ziegler-f3");
        CHECK(zg["hyperplanes"].size() == 9);

        std::string path = "cli_roundtrip_tmp.json";
        {
            std::ofstream f(path);
            f << b2.dump();
        }
        json again = run_json("freeness --input " + path + " --field q");
        CHECK(again["exponents"] == json::array({1, 9, 11}));
        std::remove(path.c_str());
    }
    SECTION("unknown builtin and missing options exit 2") {
        CHECK(run_cli("gen no-such-thing").status == 2);
        CHECK(run_cli("freeness --field q").status == 2);
        CHECK(run_cli("freeness --builtin boolean-2 --field fp").status == 2);
        CHECK(run_cli("freeness --builtin boolean-2 --field q --prime 3").status == 2);
    }
    SECTION("charpoly evaluations") {
        json j = run_json("charpoly --builtin sextic-f3 --field fp --prime 3");
        CHECK(j["eval_at_p"] == 0);
        CHECK(j["coefficients"].size() == 4);
    }
    SECTION("resolve reports the Betti table of S/J") {
        json j = run_json("resolve --builtin boolean-3 --field q");
        CHECK(j["hdim"] == 2);
    }
    SECTION("analyze composes the three verbs with identical sub-results") {
        json a = run_json("analyze --builtin nonfree-s6 --field q --max-prime 7");
        CHECK(a["freeness"] ==
              run_json("freeness --builtin nonfree-s6 --field q"));
        CHECK(a["charpoly"] == run_json("charpoly --builtin nonfree-s6 --field q"));
        CHECK(a["primes"] == run_json("primes --builtin nonfree-s6 --max-prime 7"));
    }
    SECTION("saito with the known cubic basis") {
        std::string path = "cli_saito_tmp.json";
        {
            json in;
            in["arrangement"] = arrangement_json(builtin_example_435());
            in["derivations"] = json::array({
                json::array({"x", "y", "z"}),
                json::array({"x*(x+z)*(x+y+z)", "y*(y+z)*(x+y+z)", "0"}),
                json::array({"x*(x+z)*(2y+z)", "y*(y+z)*(2x+z)", "0"}),
            });
            std::ofstream f(path);
            f << in.dump();
        }
        json j = run_json("saito --input " + path + " --field q");
        CHECK(j["is_basis"] == true);
        CHECK(j["c"] == "2");
        std::remove(path.c_str());
    }
}
