#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "ptrig/special_core.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = ptrig_cli::run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> parse_lines(const std::string& text) {
    std::vector<json> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) rows.push_back(json::parse(line));
    return rows;
}

} // namespace

TEST_CASE("eval: worked examples") {
    SUBCASE("cosp at 0") {
        const auto r = cli({"eval", "--fn", "cosp", "--phi", "0"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rows[0]["residual"].get<double>() <= 1e-10);
        CHECK(rows[0]["status"] == "ok");
        CHECK(rows[0]["method"] == "closed_form");
        CHECK(rows[0].contains("elapsed_us"));
    }
    SUBCASE("cosm at 1.6 is zero") {
        const auto r = cli({"eval", "--fn", "cosm", "--phi", "1.6"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        CHECK(std::abs(rows[0]["value"].get<double>()) < 1e-12);
    }
    SUBCASE("genc (2,2) at pi/3") {
        const auto r = cli({"eval", "--fn", "genc", "--p", "2", "--q", "2", "--phi",
                            "1.0471975512"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        CHECK(rows[0]["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
    }
    SUBCASE("hps all branches at 0") {
        const auto r = cli({"eval", "--fn", "hps", "--phi", "0", "--branch", "all"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        REQUIRE(rows[0]["values"].size() == 3);
        CHECK(std::abs(rows[0]["values"][1].get<double>()) < 1e-15);
    }
    SUBCASE("cheb at 2") {
        const auto r = cli({"eval", "--fn", "cheb", "--phi", "2"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        CHECK(rows[0]["values"][0].get<double>() == doctest::Approx(2.0));
    }
}

TEST_CASE("solve: the three contract examples") {
    SUBCASE("cubic 0,3,-4") {
        const auto r = cli({"solve", "cubic", "--a", "0", "--b", "3", "--c", "-4"});
        REQUIRE(r.code == 0);
        const auto rows = parse_lines(r.out);
        const auto& roots = rows[0]["roots"];
        REQUIRE(roots.size() == 3);
        CHECK(roots[0]["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(roots[0]["im"].get<double>() == 0.0);
        const double im = std::sqrt(15.0) / 2.0;
        CHECK(std::abs(roots[1]["re"].get<double>() - (-0.5)) < 1e-10);
        CHECK(std::abs(std::abs(roots[1]["im"].get<double>()) - im) < 1e-10);
        for (const auto& root : roots) CHECK(root["residual"].get<double>() <= 1e-10);
    }
    SUBCASE("cubic -6,11,-6") {
        const auto r = cli({"solve", "cubic", "--a", "-6", "--b", "11", "--c", "-6"});
        REQUIRE(r.code == 0);
        const auto roots = parse_lines(r.out)[0]["roots"];
        std::vector<double> re;
        for (const auto& root : roots) {
            CHECK(root["im"].get<double>() == 0.0);
            re.push_back(root["re"].get<double>());
        }
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(1.0));
        CHECK(re[1] == doctest::Approx(2.0));
        CHECK(re[2] == doctest::Approx(3.0));
    }
    SUBCASE("quintic 5/3, 8/3 has the real root -1") {
        const auto r = cli({"solve", "quintic", "--p", "1.6666666667", "--lambda",
                            "2.6666666667"});
        REQUIRE(r.code == 0);
        const auto roots = parse_lines(r.out)[0]["roots"];
        REQUIRE(roots.size() == 5);
        CHECK(roots[0]["re"].get<double>() == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(roots[0]["im"].get<double>() == 0.0);
        int reals = 0;
        for (const auto& root : roots) reals += (root["im"].get<double>() == 0.0);
        CHECK(reals == 1);
    }
}

TEST_CASE("table: anchor rows and the row-wise parabola identity") {
    const auto r = cli({"table", "--fn", "cosp", "--from", "0", "--to", "2.6666666667",
                        "--steps", "3"});
    REQUIRE(r.code == 0);
    const auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["c"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(rows[1]["c"].get<double>()) < 1e-9);
    CHECK(rows[2]["c"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
    for (const auto& row : rows) {
        const double c = row["c"].get<double>(), s = row["s"].get<double>();
        CHECK(std::abs(s - (1.0 - c * c)) <= 1e-10);
    }
}

TEST_CASE("table: hps root counts over the fold") {
    const auto r = cli({"table", "--fn", "hps", "--branch", "all", "--from", "-0.2",
                        "--to", "0.2", "--steps", "5"});
    REQUIRE(r.code == 0);
    const auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        const size_t n = row["values"].size();
        CHECK((n == 1 || n == 3));
        for (const auto& res : row["residuals"])
            CHECK(res.get<double>() <= 1e-10);
    }
    // |phi| < 0.25198 throughout this grid, so every interior row has 3 roots
    CHECK(rows[2]["values"].size() == 3);
}

TEST_CASE("table: genc (4,1) carries the quintic residual column") {
    const auto r = cli({"table", "--fn", "genc", "--p", "4", "--q", "1", "--from", "0",
                        "--to", "3.2", "--steps", "9"});
    REQUIRE(r.code == 0);
    const auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) CHECK(row["residual"].get<double>() <= 1e-9);
}

TEST_CASE("csv output: header row and one line per record") {
    const auto r = cli({"--format", "csv", "table", "--fn", "cosp", "--from", "0", "--to",
                        "1", "--steps", "3"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "row,phi,c,s,residual,elapsed_us,status");
    int lines = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 3);

    const auto rs = cli({"--format", "csv", "solve", "cubic", "--a", "-6", "--b", "11",
                         "--c", "-6"});
    REQUIRE(rs.code == 0);
    std::istringstream is2(rs.out);
    std::getline(is2, header);
    CHECK(header == std::string("cmd,kind,a,b,c,index,re,im,residual,method,") +
                        "elapsed_us,status");
}

TEST_CASE("json round-trip is bit-lossless at 17 significant digits") {
    const auto r = cli({"eval", "--fn", "cosp", "--phi", "0.7"});
    REQUIRE(r.code == 0);
    const auto rows = parse_lines(r.out);
    const double parsed = rows[0]["value"].get<double>();
    CHECK(parsed == ptrig::cos_p(0.7)); // exact bit equality through the text form

    const auto rs = cli({"solve", "cubic", "--a", "0", "--b", "3", "--c", "-4"});
    const auto roots = parse_lines(rs.out)[0]["roots"];
    const double im = roots[2]["im"].get<double>();
    // re-rendering the parsed double reproduces the emitted token
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", im);
    CHECK(rs.out.find(buf) != std::string::npos);
}

TEST_CASE("exit codes: usage, domain, convergence, residual gate") {
    CHECK(cli({"eval", "--fn", "nosuch", "--phi", "1"}).code == 1);
    CHECK(cli({"bogus"}).code == 1);
    CHECK(cli({"table", "--fn", "cosp", "--from", "1", "--to", "0", "--steps", "3"}).code ==
          1);
    CHECK(cli({"table", "--fn", "cosp", "--from", "0", "--to", "1", "--steps", "1"}).code ==
          1);
    // series outside its disc (debug flag forces the series path)
    CHECK(cli({"eval", "--fn", "cosp", "--phi", "3", "--use-series"}).code == 1);
    // forced non-convergence via the term cap
    CHECK(cli({"--max-terms", "3", "eval", "--fn", "cosp", "--phi", "1", "--use-series"})
              .code == 2);
    // unreachable residual gate
    const auto r = cli({"--tol", "1e-30", "eval", "--fn", "cosp", "--phi", "0.9"});
    CHECK(r.code == 3);
    const auto rows = parse_lines(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["status"] == "failed");
    // singular tangent
    CHECK(cli({"eval", "--fn", "gent", "--p", "2", "--q", "1", "--phi", "1.3333333333333333"})
              .code == 1);
    // gen functions demand their exponents
    CHECK(cli({"eval", "--fn", "genc", "--phi", "0.5"}).code == 1);
    CHECK(cli({"eval", "--fn", "gens", "--phi", "0.5", "--p", "2"}).code == 1);
}

TEST_CASE("PTRIG_TOL environment variable, flag wins") {
    setenv("PTRIG_TOL", "1e-30", 1);
    CHECK(cli({"eval", "--fn", "cosp", "--phi", "0.9"}).code == 3);
    CHECK(cli({"--tol", "1e-10", "eval", "--fn", "cosp", "--phi", "0.9"}).code == 0);
    unsetenv("PTRIG_TOL");
    CHECK(cli({"eval", "--fn", "cosp", "--phi", "0.9"}).code == 0);
}

TEST_CASE("check subcommand emits one record per invariant") {
    const auto r = cli({"check", "--suite", "quadrature"});
    CHECK(r.code == 0);
    const auto rows = parse_lines(r.out);
    CHECK(rows.size() >= 4);
    for (const auto& row : rows) {
        CHECK(row.contains("max_error"));
        CHECK(row["status"] == "pass");
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
}
