// Drives the built zmz binary end to end. The binary path comes from the
// ZMZ_CLI_BIN compile definition set by CMake.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zmz/crt.hpp"
#include "zmz/idempotents.hpp"
#include "zmz/lifting.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;
using namespace zmz;

namespace {

struct CliResult {
    std::string out;
    int code = -1;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("'") + ZMZ_CLI_BIN + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args) {
    CliResult r = run_cli("--json " + args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: factor record round-trips against the library") {
    json rec = run_json("factor 858");
    CHECK(rec["command"] == "factor");
    CHECK(rec["inputs"]["m"] == "858");
    Factorization expect = factor(858);
    auto& factors = rec["result"]["factors"];
    REQUIRE(factors.size() == expect.factors.size());
    for (std::size_t k = 0; k < expect.factors.size(); ++k) {
        CHECK(factors[k]["prime"] == expect.factors[k].prime.str());
        CHECK(factors[k]["exponent"] == std::to_string(expect.factors[k].exponent));
    }
    CHECK(run_json("factor 1")["result"]["factors"].empty());
}

TEST_CASE("cli: idempotents of 858 through the CLI path") {
    json rec = run_json("idempotents 858");
    CHECK(rec["result"]["count"] == "16");
    IdempotentSet set = enumerate_idempotents(factor(858));
    auto& members = rec["result"]["members"];
    REQUIRE(members.size() == set.members.size());
    for (std::size_t k = 0; k < set.members.size(); ++k)
        CHECK(members[k] == set.members[k].str());
    auto& basis = rec["result"]["basis"];
    REQUIRE(basis.size() == 4);
    CHECK(basis[0]["element"] == "429");
    CHECK(basis[0]["prime_power"] == "2");
}

TEST_CASE("cli: basis-only skips enumeration") {
    json rec = run_json("idempotents 765 --basis-only");
    CHECK(rec["result"]["count"] == "8");
    CHECK_FALSE(rec["result"].contains("members"));
    REQUIRE(rec["result"]["basis"].size() == 3);
    CHECK(rec["result"]["basis"][0]["element"] == "595");
    CHECK(rec["inputs"]["basis_only"] == true);
}

TEST_CASE("cli: crt accepts comma, space, and negative forms") {
    json rec = run_json("crt 2:3,3:5");
    CHECK(rec["result"]["solution"] == "8");
    CHECK(rec["result"]["modulus"] == "15");
    CHECK(rec["inputs"]["constraints"][1]["remainder"] == "3");

    CHECK(run_json("crt '2:3 3:5'")["result"]["solution"] == "8");
    CHECK(run_json("crt 2:3 3:5")["result"]["solution"] == "8");

    json neg = run_json("crt -- -1:3 -1:5");
    CHECK(neg["result"]["solution"] == "14");

    // Echo matches the library result exactly.
    Residue x = crt_solve({{{2, 3}, {3, 5}}});
    CHECK(rec["result"]["solution"] == x.value().str());
}

TEST_CASE("cli: lift and nilpotents records") {
    json rec = run_json("lift 10 12");
    CHECK(rec["result"]["lifted"] == "4");
    CHECK(rec["result"]["difference"] == "6");
    CHECK(rec["result"]["iterations"] == "1");

    rec = run_json("nilpotents 765");
    CHECK(rec["result"]["generator"] == "255");
    CHECK(rec["result"]["count"] == "3");
    Nilradical nil = nilradical(factor(765));
    CHECK(rec["result"]["generator"] == nil.generator.str());
}

TEST_CASE("cli: boolean subcommand") {
    CHECK(run_json("boolean join 66 78 858")["result"]["value"] == "144");
    CHECK(run_json("boolean meet 66 78 858")["result"]["value"] == "0");
    CHECK(run_json("boolean complement 66 858")["result"]["value"] == "793");
    CHECK(run_json("boolean xor 66 793 858")["result"]["value"] == "1");
    CHECK(run_json("boolean join 66 78 858")["result"]["value"] ==
          join(Residue(66, 858), Residue(78, 858)).value().str());
}

TEST_CASE("cli: identical invocations are byte-identical") {
    for (const char* args : {"factor 858", "idempotents 858", "crt 2:3,3:5", "lift 10 12",
                             "nilpotents 765", "boolean join 66 78 858"}) {
        CliResult a = run_cli(std::string("--json ") + args);
        CliResult b = run_cli(std::string("--json ") + args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("cli: human output for factor") {
    CliResult r = run_cli("factor 858");
    CHECK(r.code == 0);
    CHECK(r.out == "858 = 2 * 3 * 11 * 13\n");
    CHECK(run_cli("factor 765").out == "765 = 3^2 * 5 * 17\n");
    CHECK(run_cli("factor 1").out == "1 = (empty product)\n");
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("factor 0").code == 2);          // validation
    CHECK(run_cli("factor abc").code == 2);        // parse
    CHECK(run_cli("factor -5").code == 2);         // negative modulus
    CHECK(run_cli("crt 2:6,3:10").code == 3);      // non-coprime hypothesis
    CHECK(run_cli("boolean join 2 3 858").code == 3);  // not idempotent
    CHECK(run_cli("lift 4 765").code == 3);        // not liftable
    CHECK(run_cli("idempotents 9699690 --cap 3").code == 2);  // cap
    CHECK(run_cli("").code == 2);                  // missing subcommand
    CHECK(run_cli("boolean frob 1 2 12").code == 2);
    CHECK(run_cli("crt 2-3").code == 2);           // malformed pair
    CHECK(run_cli("--help").code == 0);
}
