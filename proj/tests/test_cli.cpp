#include "sierp/csv.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace sierp;

namespace test_util {

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SIERPCALC_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "SIERPCALC_CLI must point at the CLI binary");
    CliResult r;
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace test_util

namespace {

using test_util::run_cli;

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("cli map") {
    CHECK(trimmed(run_cli("map 2").output) == "(1, 1)+");
    CHECK(trimmed(run_cli("map 0").output) == "(0, 0)0");
    CHECK(trimmed(run_cli("map 2.5").output) == "(1, 1)-");
    CHECK(trimmed(run_cli("map --inverse \"(1, 1)-\"").output) == "5/2");
    CHECK(trimmed(run_cli("map --inverse \"(3, 0)+\"").output) == "7");
    CHECK(trimmed(run_cli("map 8/9 --digits 4").output) == "(0.7500, 0.2500)+");

    const auto bad = run_cli("map --inverse \"(1, 1)0\"");
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("side") != std::string::npos);
}

TEST_CASE("cli arith") {
    CHECK(trimmed(run_cli("arith \"3 (+) 4\"").output) == "(3, 0)+");
    CHECK(trimmed(run_cli("arith \"2 (*) 3\"").output) == "(2, 2)+");
    CHECK(trimmed(run_cli("arith \"1 (-) 1\"").output) == "(0, 0)0");
    CHECK(run_cli("arith \"1 (/) 0\"").exit_code != 0);
    CHECK(run_cli("arith \"1 (&) 2\"").exit_code != 0);
}

TEST_CASE("cli deriv and integrate") {
    CHECK(trimmed(run_cli("deriv \"t^2\" 3").output) == "(2, 2)+"); // forward(6)
    CHECK(trimmed(run_cli("deriv \"t^2\" 3 --mode numeric").output) == "(2, 2)+");
    CHECK(trimmed(run_cli("deriv t 5/7 --codomain R").output) == "1");
    CHECK(trimmed(run_cli("integrate 1 0 1").output) == "1");
    CHECK(trimmed(run_cli("integrate t 0 2 --codomain S").output) == "(1, 1)+"); // 2'
    CHECK(trimmed(run_cli("integrate step -1 1").output) == "0");
    const auto quad = run_cli("integrate step 0 1 --mode quad");
    CHECK(std::fabs(std::stod(trimmed(quad.output)) - 1.0) <= 1e-8);
}

TEST_CASE("cli fig1: cells, determinism, resolution validation") {
    const auto r = run_cli("fig1 --resolution 1 --out cli_fig1a.csv");
    CHECK(r.exit_code == 0);
    const CsvTable t = CsvTable::read("cli_fig1a.csv");
    CHECK(t.header == std::vector<std::string>{"k", "cell_x", "cell_y"});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0] == std::vector<std::string>{"1", "0", "0"});
    CHECK(t.rows[1] == std::vector<std::string>{"1", "0", "1"});
    CHECK(t.rows[2] == std::vector<std::string>{"1", "1", "0"});

    run_cli("fig1 --resolution 5 --out cli_fig1b.csv");
    run_cli("fig1 --resolution 5 --out cli_fig1c.csv");
    CHECK(slurp("cli_fig1b.csv") == slurp("cli_fig1c.csv"));
    CHECK(CsvTable::read("cli_fig1b.csv").rows.size() == 243);

    run_cli("fig1 --resolution 3 --format svg --out cli_fig1.svg");
    const std::string svg = slurp("cli_fig1.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);

    const auto bad = run_cli("fig1 --resolution 0");
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("resolution") != std::string::npos);
}

TEST_CASE("cli fig2: 200 naturals, all on the plus side") {
    REQUIRE(run_cli("fig2 --out cli_fig2.csv").exit_code == 0);
    const CsvTable t = CsvTable::read("cli_fig2.csv");
    REQUIRE(t.rows.size() == 200);
    for (const auto& row : t.rows) {
        REQUIRE(row.size() == 4);
        CHECK(row[3] == "+");
    }
    CHECK(t.rows[6][0] == "7");
    CHECK(t.rows[6][1] == "3");
    CHECK(t.rows[6][2] == "0");
}

TEST_CASE("cli fourier: coefficients, zero-term series, side filter") {
    REQUIRE(run_cli("fourier step --terms 5 --samples 65 --out cli_f5").exit_code == 0);
    const CsvTable coeffs = CsvTable::read("cli_f5_coeffs.csv");
    REQUIRE(coeffs.rows.size() == 6);
    const double pi = std::numbers::pi;
    const double expected[] = {4 / pi, 0.0, 4 / (3 * pi), 0.0, 4 / (5 * pi)};
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::fabs(std::stod(coeffs.rows[n][2]) - expected[n - 1]) <= 1e-8);
        CHECK(std::fabs(std::stod(coeffs.rows[n][1])) <= 1e-8);
    }

    REQUIRE(run_cli("fourier step --terms 0 --samples 33 --out cli_f0").exit_code == 0);
    const CsvTable recon0 = CsvTable::read("cli_f0_recon.csv");
    for (const auto& row : recon0.rows) CHECK(std::fabs(std::stod(row[2])) <= 1e-12);

    // the dyadic grid contains the half-integers +-1/2, which live on the minus sheet
    REQUIRE(run_cli("fourier step --terms 3 --samples 9 --out cli_fpos").exit_code == 0);
    const CsvTable pos = CsvTable::read("cli_fpos_recon.csv");
    REQUIRE(run_cli("fourier step --terms 3 --samples 9 --side both --out cli_fboth").exit_code == 0);
    const CsvTable both = CsvTable::read("cli_fboth_recon.csv");
    CHECK(both.rows.size() == 9);
    CHECK(pos.rows.size() == 7);
    int minus_rows = 0;
    for (const auto& row : both.rows) minus_rows += row[3] == "-";
    CHECK(minus_rows == 2);
    for (const auto& row : pos.rows) CHECK(row[3] != "-");

    // emitted CSVs round-trip through the parser
    const std::string text = slurp("cli_fboth_recon.csv");
    CHECK(CsvTable::parse(text).str() == text);

    REQUIRE(run_cli("fourier step --terms 4 --samples 33 --format svg --out cli_fsvg").exit_code == 0);
    REQUIRE(run_cli("fourier step --terms 4 --samples 33 --format svg --out cli_fsvg2").exit_code == 0);
    CHECK(slurp("cli_fsvg_recon.svg") == slurp("cli_fsvg2_recon.svg"));
}
