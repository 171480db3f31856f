#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pseudohopf/cli.hpp"

using Catch::Matchers::ContainsSubstring;
using json = nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pseudohopf::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++n;
    return n;
}

json parse_file(const std::filesystem::path& p) {
    std::ifstream ifs(p);
    REQUIRE(ifs.good());
    return json::parse(ifs);
}

std::size_t line_count(const std::filesystem::path& p) {
    std::ifstream ifs(p);
    REQUIRE(ifs.good());
    std::size_t n = 0;
    std::string line;
    while (std::getline(ifs, line)) ++n;
    return n;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"verify-action"}).code == 2);          // --row is required
    CHECK(run_cli({"einstein"}).code == 2);               // --fibration is required
    CHECK(run_cli({"verify-action", "--table", "3", "--row", "1"}).code == 2);
    CHECK(run_cli({"dual"}).code == 2);                   // needs --row or --family
    CHECK(run_cli({"dual", "--row", "1", "--family", "so(2,1)"}).code == 2);

    // Domain validation from the engine surfaces as exit 2 with a message.
    CliResult bad = run_cli({"verify-action", "--table", "1", "--row", "1",
                             "--a", "25", "--b", "1"});
    CHECK(bad.code == 2);
    CHECK_THAT(bad.err, ContainsSubstring("error"));
    CHECK(run_cli({"dual", "--row", "1", "--a", "4", "--b", "4"}).code == 2);
    CHECK(run_cli({"enumerate", "--space", "XX:3:1"}).code == 2);
    CHECK(run_cli({"einstein", "--fibration", "nope"}).code == 2);
    CHECK(run_cli({"einstein", "--fibration", "piH", "--m", "1", "--t", "abc"}).code == 2);
    CHECK(run_cli({"einstein", "--fibration", "piH", "--m", "1", "--t", "1/0"}).code == 2);
    CHECK(run_cli({"einstein", "--fibration", "piH", "--m", "1", "--t", "0"}).code == 2);
}

TEST_CASE("help exits 0 and names every subcommand") {
    CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    for (const std::string& sub :
         {"tables", "verify-action", "einstein", "dual", "enumerate", "report"})
        CHECK_THAT(r.out, ContainsSubstring(sub));
}

TEST_CASE("a transitive action row verifies with its dimension counts") {
    CliResult r = run_cli({"verify-action", "--table", "1", "--row", "7"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("ambient=28"));
    CHECK_THAT(r.out, ContainsSubstring("g=21"));
    CHECK_THAT(r.out, ContainsSubstring("h=14"));
    CHECK_THAT(r.out, ContainsSubstring("sum=28"));
    CHECK_THAT(r.out, ContainsSubstring("PASS"));

    CliResult j = run_cli({"verify-action", "--table", "1", "--row", "7", "--json"});
    CHECK(j.code == 0);
    json rec = json::parse(j.out);
    CHECK(rec["dim_ambient"] == 28);
    CHECK(rec["dim_g"] == 21);
    CHECK(rec["dim_h"] == 14);
    CHECK(rec["dim_sum"] == 28);
    CHECK(rec["pass"] == true);
    CHECK(rec["failures"].empty());

    CliResult fib = run_cli({"verify-action", "--table", "2", "--row", "3",
                             "--a", "1", "--json"});
    CHECK(fib.code == 0);
    CHECK(json::parse(fib.out)["pass"] == true);
}

TEST_CASE("the quaternionic Hopf scan finds both Einstein parameters") {
    CliResult r = run_cli(
        {"einstein", "--fibration", "piH", "--m", "1", "--s", "0", "--scan"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("t in {1, 1/5}"));
    CHECK_THAT(r.out, ContainsSubstring("lambda_fibre = -2"));
    CHECK_THAT(r.out, ContainsSubstring("lambda_base = -12"));
    CHECK_THAT(r.out, ContainsSubstring("t0 = 1/5"));
    CHECK(count_occurrences(r.out, ", residual 0") == 2);
}

TEST_CASE("einstein json output carries exact values") {
    CliResult r = run_cli({"einstein", "--fibration", "piH", "--m", "1", "--s",
                           "0", "--scan", "--json", "--approx"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["fibration"] == "piH");
    CHECK(j["total"] == "H:7:3");
    CHECK(j["t0"] == "1/5");
    CHECK(j["lambda_base"] == "-12");
    CHECK(j["lambda_fibre"] == "-2");
    REQUIRE(j["scan"].size() == 2);
    CHECK(j["scan"][0]["t"] == "1");
    CHECK(j["scan"][1]["t"] == "1/5");
    CHECK(j["scan"][0]["residual"] == "0");
    CHECK(j["scan"][1]["residual"] == "0");
    CHECK(j["scan"][1]["t_approx"].get<double>() == 0.2);

    CliResult one = run_cli({"einstein", "--fibration", "piH", "--m", "1",
                             "--s", "0", "--t", "1/5", "--json"});
    CHECK(one.code == 0);
    CHECK(json::parse(one.out)["value"]["residual"] == "0");

    CliResult off = run_cli({"einstein", "--fibration", "piH", "--m", "1",
                             "--s", "0", "--t", "2", "--json"});
    CHECK(off.code == 0);
    CHECK(json::parse(off.out)["value"]["residual"] != "0");
}

TEST_CASE("enumerate reports every Einstein metric on a catalog space") {
    CliResult r = run_cli({"enumerate", "--space", "H:15:7"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("count 5"));

    CliResult j = run_cli({"enumerate", "--space", "H:15:7", "--json"});
    CHECK(j.code == 0);
    json rec = json::parse(j.out);
    CHECK(rec["count"] == 5);
    REQUIRE(rec["metrics"].size() == 5);
    for (const auto& m : rec["metrics"]) {
        CHECK(m.contains("kind"));
        CHECK(m.contains("t"));
    }

    CliResult flat = run_cli({"enumerate", "--space", "H:4:1", "--json"});
    CHECK(flat.code == 0);
    json frec = json::parse(flat.out);
    CHECK(frec["count"] == 1);
    CHECK(frec["metrics"][0]["kind"] == "canonical");
    CHECK(frec["metrics"][0]["t"] == "1");
}

TEST_CASE("duality rows and families are reachable from the command line") {
    CliResult r = run_cli({"dual", "--row", "1", "--a", "4", "--b", "1", "--json",
                           "--approx"});
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["pass"] == true);
    CHECK(rec["dim_g"] == 10);
    CHECK(rec["dim_h"] == 6);
    CHECK(rec["dim_m"] == 4);
    CHECK(rec["rank"] == 2);
    CHECK(rec["rank_checked"] == true);
    CHECK(rec["einstein_constant"] == "-3");
    CHECK(rec["einstein_constant_approx"].get<double>() == -3.0);
    CHECK(rec["killing_compact"] == true);
    CHECK(rec["dual_einstein"] == true);

    CliResult fam = run_cli({"dual", "--family", "so(2,1)"});
    CHECK(fam.code == 0);
    CHECK_THAT(fam.out, ContainsSubstring("rank 1"));
    CHECK_THAT(fam.out, ContainsSubstring("negative definite"));

    CliResult famj = run_cli({"dual", "--family", "su(2,1)", "--json"});
    CHECK(famj.code == 0);
    json fj = json::parse(famj.out);
    CHECK(fj["dim"] == 8);
    CHECK(fj["dim_plus"] == 4);
    CHECK(fj["dim_minus"] == 4);
    CHECK(fj["killing"]["positive"] == 0);
    CHECK(fj["killing"]["negative"] == 8);
    CHECK(fj["killing"]["null"] == 0);
    CHECK(fj["centre_dim"] == 0);
    CHECK(fj["rank"] == 2);
}

TEST_CASE("table sweeps are deterministic and machine-readable") {
    CliResult a = run_cli({"tables", "--table", "2", "--json"});
    CliResult b = run_cli({"tables", "--table", "2", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical across invocations
    json arr = json::parse(a.out);
    REQUIRE(arr.size() == 7);
    for (const auto& rec : arr) CHECK(rec["pass"] == true);

    CliResult human = run_cli({"tables", "--table", "2"});
    CHECK(human.code == 0);
    CHECK(count_occurrences(human.out, "PASS") == 7);
    CHECK(count_occurrences(human.out, "FAIL") == 0);
}

TEST_CASE("full verification reports land in the requested directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pseudohopf-cli-report-test";
    fs::remove_all(dir);

    CliResult r = run_cli({"report", "--dir", dir.string(), "--csv"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("all rows PASS"));

    json t1 = parse_file(dir / "table1.json");
    json t2 = parse_file(dir / "table2.json");
    json t3 = parse_file(dir / "table3.json");
    CHECK(t1.size() == 20);
    CHECK(t2.size() == 7);
    CHECK(t3.size() == 24);
    for (const auto& rec : t1) CHECK(rec["pass"] == true);
    for (const auto& rec : t2) CHECK(rec["pass"] == true);
    for (const auto& rec : t3) CHECK(rec["pass"] == true);

    CHECK(line_count(dir / "table1.csv") == 21);  // header + 20 rows
    CHECK(line_count(dir / "table2.csv") == 8);
    CHECK(line_count(dir / "table3.csv") == 25);

    // The directory can also come from the environment.
    fs::path envdir = fs::temp_directory_path() / "pseudohopf-cli-envdir-test";
    fs::remove_all(envdir);
    REQUIRE(setenv("PSEUDOHOPF_REPORT_DIR", envdir.string().c_str(), 1) == 0);
    CliResult re = run_cli({"report"});
    REQUIRE(unsetenv("PSEUDOHOPF_REPORT_DIR") == 0);
    CHECK(re.code == 0);
    CHECK(parse_file(envdir / "table3.json").size() == 24);
    CHECK_FALSE(fs::exists(envdir / "table3.csv"));  // csv only on request

    fs::remove_all(dir);
    fs::remove_all(envdir);
}
