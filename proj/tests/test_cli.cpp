#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "mhpoly/format.hpp"
#include "mhpoly/json_io.hpp"
#include "mhpoly/moduli.hpp"
#include "mhpoly/selfcheck.hpp"

using namespace mhpoly;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MHPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string normalized(std::string s) {
    std::erase(s, '{');
    std::erase(s, '}');
    std::erase(s, ' ');
    return s;
}

} // namespace

TEST_CASE("mhp text output matches the hand-derived value") {
    RunResult r = run_cli("mhp --family gl --n 2 --abelian-dim 1 --space char --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 2(tuv) + 2(tuv)^2 + 2(tuv)^3 + (tuv)^4\n");
}

TEST_CASE("hilb-poincare n=1 is the expanded (1+t)^2") {
    RunResult r = run_cli("hilb-poincare --n 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 2t + t^2\n");
}

TEST_CASE("mhp json output re-parses to the library value") {
    RunResult r = run_cli("mhp --family gl --n 2 --abelian-dim 1 --space higgs --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    MultiPoly parsed = poly_from_json(j);
    CHECK(parsed == mhp_higgs({{Family::GL, 2}, 1, Space::Higgs, {}}));
    CHECK(j["terms"].size() == 7);
    // the spec'd sample term is present
    bool found = false;
    for (const auto& term : j["terms"])
        if (term["e"] == json::array({2, 1, 1}) && term["c"] == "2")
            found = true;
    CHECK(found);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string args = "hilb-resolution --n 3 --abelian-dim 2 --space higgs --format json";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
    json j = json::parse(a.output);
    CHECK(j["routes_agree"] == true);
    CHECK(j["crepant"] == false);
    CHECK(j["euler"] == "0");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("mhp --family gl --n 2 --abelian-dim 1 --space nowhere").exit_code == 2);
    CHECK(run_cli("mhp --family qq --n 2 --abelian-dim 1").exit_code == 2);
    CHECK(run_cli("hilb-resolution --n 4 --abelian-dim 2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    // Higgs-side torus exponent override is rejected
    CHECK(run_cli("mhp --family gl --n 1 --abelian-dim 1 --space higgs --torus-exponent 3")
              .exit_code == 2);
}

TEST_CASE("weyl-table emits the documented schema") {
    RunResult r = run_cli("weyl-table --family gl --n 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["family"] == "gl");
    CHECK(j["n"] == 3);
    CHECK(j["order"] == "6");
    REQUIRE(j["classes"].size() == 3);
    Integer total = 0;
    for (const auto& cls : j["classes"])
        total += Integer(cls["size"].get<std::string>());
    CHECK(total == 6);
}

TEST_CASE("pexp subcommand round-trips through plog") {
    // selfcontained: pipe a series in, feed pexp output into plog
    YSeries f(6);
    f[1] = MultiPoly::var_u() * MultiPoly::var_v() + MultiPoly::one();
    std::string series = to_json(f).dump();
    std::string tmp = "/tmp/mhpoly_test_series.json";
    {
        std::FILE* out = std::fopen(tmp.c_str(), "w");
        REQUIRE(out);
        std::fwrite(series.data(), 1, series.size(), out);
        std::fclose(out);
    }
    RunResult e = run_cli("pexp --input " + tmp + " --order 6");
    REQUIRE(e.exit_code == 0);
    std::string tmp2 = "/tmp/mhpoly_test_series2.json";
    {
        std::FILE* out = std::fopen(tmp2.c_str(), "w");
        REQUIRE(out);
        std::fwrite(e.output.data(), 1, e.output.size(), out);
        std::fclose(out);
    }
    RunResult l = run_cli("plog --input " + tmp2 + " --order 6");
    REQUIRE(l.exit_code == 0);
    CHECK(series_from_json(json::parse(l.output)) == f);
}

TEST_CASE("latex and text emitters agree after normalization") {
    std::vector<MultiPoly> samples = {
        mhp_higgs({{Family::GL, 2}, 1, Space::Higgs, {}}),
        mhp_character({{Family::GL, 2}, 1, Space::Character, {}}),
        mhp_higgs({{Family::Sp, 2}, 1, Space::Higgs, {}}),
    };
    for (const MultiPoly& p : samples)
        CHECK(normalized(format_poly(p, TextStyle::Latex)) ==
              normalized(format_poly(p, TextStyle::Plain)));
}

TEST_CASE("selfcheck passes end to end") {
    RunResult r = run_cli("selfcheck");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    // one line per criterion
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 11);
}

TEST_CASE("fault injection trips the Molien oracle") {
    TableHook corrupt = [](WeylTable& table) {
        if (table.spec.family == Family::GL && table.spec.n == 3)
            table.classes[1].size += 1;
    };
    auto results = run_selfcheck(corrupt);
    bool molien_failed = false;
    for (const auto& r : results)
        if (r.name == "molien-vs-enumeration")
            molien_failed = !r.pass;
    CHECK(molien_failed);
}

TEST_CASE("selfcheck runtimes stay within budget") {
    for (const auto& r : run_selfcheck())
        CHECK(r.seconds < 60.0);
}
