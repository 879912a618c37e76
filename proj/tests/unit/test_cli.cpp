#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qvbs/cli.hpp"
#include "qvbs/qcore.hpp"

using namespace qvbs;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("list and grid parsing") {
    CHECK(cli::parse_int_list("2..6") == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(cli::parse_int_list("2..4,8") == std::vector<int>{2, 3, 4, 8});
    CHECK(cli::parse_int_list("4") == std::vector<int>{4});
    CHECK_THROWS_AS(cli::parse_int_list("5..2"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_int_list("x"), InvalidArgument);
    CHECK(cli::parse_q_list("0.5,1,2") == std::vector<double>{0.5, 1, 2});

    const auto g = cli::parse_q_grid("0.25:4:13:log");
    REQUIRE(g.size() == 13);
    CHECK(g.front() == 0.25);
    CHECK(g.back() == 4.0);
    CHECK(g[6] == doctest::Approx(1.0).epsilon(1e-14));
    const auto lin = cli::parse_q_grid("1:2:3:lin");
    CHECK(lin[1] == 1.5);
    CHECK_THROWS_AS(cli::parse_q_grid("0:4:3:log"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_q_grid("1:4:3:cubic"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_q_grid("1:4"), InvalidArgument);
}

TEST_CASE("number and csv formatting") {
    CHECK(cli::format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(cli::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(cli::format_double(3) == "3");
    CHECK(cli::csv_field("plain") == "plain");
    CHECK(cli::csv_field("a,b") == "\"a,b\"");
    CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("spectrum at S=1, q=1") {
    const auto r = run({"spectrum", "--spin", "1", "--q", "1"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "spectrum");
    CHECK(doc["passed"] == true);
    REQUIRE(doc["rows"].size() == 1);
    const auto& row = doc["rows"][0];
    CHECK(row["eigenvalues"][0].get<double>() == doctest::Approx(3.0));
    CHECK(row["eigenvalues"][1].get<double>() == doctest::Approx(-1.0));
    CHECK(row["degeneracies"] == nlohmann::json::array({1, 3}));
}

TEST_CASE("spectrum csv has a fixed header and one row per grid point") {
    const auto r = run({"spectrum", "--spin", "2", "--q-grid", "0.5:2:5:log", "--format", "csv"});
    REQUIRE(r.code == cli::kOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("spin,q,eigenvalues,degeneracies,max_eigenvalue_rel_error", 0) == 0);
    int rows = 0;
    while (std::getline(in, line)) rows += !line.empty();
    CHECK(rows == 5);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"spectrum", "--spin", "0", "--q", "1"}).code == cli::kUsage);
    CHECK(run({"spectrum", "--spin", "1", "--q", "-1"}).code == cli::kUsage);
    CHECK(run({"spectrum", "--spin", "1", "--q", "1", "--q-grid", "1:2:2:lin"}).code == cli::kUsage);
    CHECK(run({"correlate", "--spin", "1", "--pair", "pm", "--r", "1"}).code == cli::kUsage);
    CHECK(run({"correlate", "--spin", "1", "--mode", "finite", "--r", "2..5"}).code == cli::kUsage);
    CHECK(run({"correlate", "--spin", "1", "--mode", "finite", "--L", "4", "--r", "2..5"}).code == cli::kUsage);
    CHECK(run({"verify", "--spin", "2", "--L", "12"}).code == cli::kUsage);
    CHECK(run({"verify", "--spin", "1", "--tol", "nonsense=1"}).code == cli::kUsage);
    CHECK(run({"verify", "--spin", "1", "--coupling", "1=2"}).code == cli::kUsage);
    CHECK(run({"verify", "--spin", "1", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("thermo correlator column at S=1, q=1") {
    const auto r = run({"correlate", "--spin", "1", "--q", "1", "--pair", "zz", "--r", "2..10", "--mode", "thermo"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 9);
    for (const auto& row : doc["rows"]) {
        const int rr = row["r"];
        CHECK(row["distance"] == rr - 1);
        CHECK(row["value"].get<double>() == doctest::Approx(-4.0 * std::pow(-1.0 / 3.0, rr)).epsilon(1e-12));
        CHECK(row["fitted_zeta"].get<double>() == doctest::Approx(1.0 / std::log(3.0)).epsilon(1e-10));
    }
}

TEST_CASE("both mode gap shrinks with L") {
    const auto r = run({"correlate", "--spin", "2", "--q", "1.5", "--mode", "both", "--L", "12,16", "--r", "4"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    std::vector<double> gaps;
    for (const auto& row : doc["rows"])
        if (row["mode"] == "finite") gaps.push_back(row["gap"]);
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[1] < gaps[0]);
}

TEST_CASE("verify passes and failures exit with 1") {
    const auto ok = run({"verify", "--spin", "1", "--q", "0.5,1,2", "--L", "2..6"});
    CHECK(ok.code == cli::kOk);
    CHECK(nlohmann::json::parse(ok.out)["passed"] == true);

    const auto bad = run({"verify", "--spin", "1", "--q", "0.7", "--L", "5", "--tol", "norm_trace=1e-300"});
    CHECK(bad.code == cli::kCheckFailed);
    CHECK(bad.err.find("FAILED norm_trace") != std::string::npos);

    const auto p1 = run({"verify", "--prop1", "--spin", "2", "--n-max", "5", "--q", "0.5,2"});
    CHECK(p1.code == cli::kOk);
    for (const auto& row : nlohmann::json::parse(p1.out)["rows"])
        if (!row["n"].is_null()) CHECK(row["n"].get<int>() <= 5);

    const auto coupled = run({"verify", "--spin", "2", "--q", "1.3", "--L", "3", "--coupling", "3=0.5",
                              "--coupling", "4@1=2.5"});
    CHECK(coupled.code == cli::kOk);
}

TEST_CASE("output is byte-identical across runs and job counts") {
    const auto a = run({"verify", "--spin", "1", "--q", "0.5,2", "--L", "2..5", "--format", "csv", "--jobs", "1"});
    const auto b = run({"verify", "--spin", "1", "--q", "0.5,2", "--L", "2..5", "--format", "csv", "--jobs", "4"});
    CHECK(a.out == b.out);
    const auto c = run({"correlate", "--spin", "2", "--q-grid", "0.5:2:4:log", "--jobs", "3"});
    const auto d = run({"correlate", "--spin", "2", "--q-grid", "0.5:2:4:log"});
    CHECK(c.out == d.out);
}

TEST_CASE("output directory from the environment") {
    const auto dir = std::filesystem::temp_directory_path() / "qvbs_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv("QVBS_OUTPUT_DIR", dir.c_str(), 1);
    const auto r = run({"spectrum", "--spin", "1", "--q", "1", "--format", "csv"});
    const auto named = run({"spectrum", "--spin", "1", "--q", "1", "--output", "sub/s.json"});
    ::unsetenv("QVBS_OUTPUT_DIR");
    CHECK(r.code == cli::kOk);
    CHECK(r.out.empty());
    CHECK(std::filesystem::exists(dir / "spectrum.csv"));
    CHECK(named.code == cli::kOk);
    std::ifstream f(dir / "sub" / "s.json");
    CHECK(nlohmann::json::parse(f)["rows"].size() == 1);
    std::filesystem::remove_all(dir);
}
