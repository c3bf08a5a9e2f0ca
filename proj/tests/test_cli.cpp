#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <sstream>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

#ifndef HYPERSTATE_CLI_PATH
#error "HYPERSTATE_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HYPERSTATE_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip_wall_time(std::string s) {
    return std::regex_replace(s, std::regex(",\"wall_time_ms\":[0-9]+"), "");
}

} // namespace

TEST_CASE("classify") {
    auto r = run("classify --n 6 --k 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["stabilizer"] == "+X");

    auto ry = run("classify --n 4 --k 3");
    CHECK(nlohmann::json::parse(ry.output)["stabilizer"] == "+Y");

    auto redges = run("classify --n 4 --edges [[1,2,3],[0,2,3]]");
    CHECK(redges.exit_code == 0);
    // the fig-1b state has no full local Pauli stabilizer
    CHECK(nlohmann::json::parse(redges.output)["stabilizer"] == "none");
}

TEST_CASE("geomeasure dual paths") {
    auto r = run("geomeasure --n 4 --k 3 --method oracle --restarts 32 --seed 7");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["value_oracle"].get<double>() - 0.5716186271) < 1e-8);

    auto rall = run("geomeasure --n 6 --k 3 --method all --restarts 16 --seed 7");
    CHECK(rall.exit_code == 0);
    auto jall = nlohmann::json::parse(rall.output);
    CHECK(std::abs(jall["value_closed"].get<double>() - 39.0 / 64.0) < 1e-12);
    CHECK(std::abs(jall["value_numeric"].get<double>() - 39.0 / 64.0) < 1e-9);
    CHECK(jall["residual_closed_numeric"].get<double>() < 1e-9);
}

TEST_CASE("robustness and mermin") {
    auto r = run("robustness --n 6 --lost 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["quantum_value"].get<double>() == doctest::Approx(4.0));
    CHECK(j["separability_bound"].get<double>() == doctest::Approx(1.41421356237309));

    auto rm = run("mermin --n 6 --k 3 --pauli x --method all");
    CHECK(rm.exit_code == 0);
    auto jm = nlohmann::json::parse(rm.output);
    CHECK(jm["quantum_value"].get<double>() == doctest::Approx(16.0));
    CHECK(jm["hypothesis_ok"] == true);
    CHECK(jm["residual_oracle"].get<double>() < 1e-9);
}

TEST_CASE("transform, decompose, families, verify, build") {
    auto rt = run("transform --n 6 --k 3");
    CHECK(rt.exit_code == 0);
    auto jt = nlohmann::json::parse(rt.output);
    CHECK(jt["closed_form_residual"].get<double>() < 1e-12);
    CHECK(jt["amp"][0]["re"].get<double>() == doctest::Approx(-0.5));

    auto rd = run("decompose --n 6 --k 3");
    CHECK(rd.exit_code == 0);
    auto jd = nlohmann::json::parse(rd.output);
    CHECK(jd["ghz_sign"] == -1);
    CHECK(jd["ghz_basis"] == "Z");
    CHECK(jd["residual"].get<double>() < 1e-12);
    CHECK(jd["three_uniform_residual"].get<double>() < 1e-12);

    auto rf = run("families --k 3,2");
    CHECK(rf.exit_code == 0);
    auto jf = nlohmann::json::parse(rf.output);
    CHECK(jf["stabilizer"] == "+X");
    CHECK(jf["modulus"] == 4);
    CHECK(jf["consistent"] == true);

    auto rv = run("verify --n 6 --k 3 --restarts 16 --seed 11");
    CHECK(rv.exit_code == 0);
    auto jv = nlohmann::json::parse(rv.output);
    CHECK(jv["ok"] == true);

    auto rb = run("build --n 4 --k 3 --method all");
    CHECK(rb.exit_code == 0);
    auto jb = nlohmann::json::parse(rb.output);
    CHECK(jb["amp"][3]["re"].get<double>() == doctest::Approx(-0.25));
    CHECK(jb["oracle_residual"].get<double>() < 1e-12);
}

TEST_CASE("single-edge command") {
    auto r = run("single-edge --n 5 --restarts 16 --seed 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["value"].get<double>() - 0.105572028) < 1e-7);
    CHECK(j["residual"].get<double>() < 1e-8);
}

TEST_CASE("deterministic output for identical argv and seed") {
    const std::string args = "geomeasure --n 4 --k 3 --method all --restarts 8 --seed 99";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(strip_wall_time(a.output) == strip_wall_time(b.output));

    auto s1 = run("sweep --fig fig2 --nmax 6 --restarts 8 --seed 5");
    auto s2 = run("sweep --fig fig2 --nmax 6 --restarts 8 --seed 5");
    CHECK(s1.exit_code == 0);
    CHECK(s1.output == s2.output);
}

TEST_CASE("sweeps") {
    auto r2 = run("sweep --fig fig2 --nmax 8 --restarts 8 --seed 5");
    CHECK(r2.exit_code == 0);
    // header + 6 rows, strictly decreasing values
    std::istringstream is(r2.output);
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,e_g,method,residual");
    double prev = 1.0;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        const double value = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(value < prev);
        prev = value;
        ++rows;
    }
    CHECK(rows == 6);

    auto r3 = run("sweep --fig fig3 --nmax 14 --seed 5");
    CHECK(r3.exit_code == 0);
    CHECK(r3.output.find("closed_form") == std::string::npos); // all points cross-checked
    CHECK(r3.output.find("contraction") != std::string::npos);

    auto rg = run("sweep --fig figGEM --nmax 8 --seed 5");
    CHECK(rg.exit_code == 0);
    CHECK(rg.output.find("numeric_opt") != std::string::npos);
    CHECK(rg.output.find("closed_form") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto bad = run("classify --n 6 --bogus");
    CHECK(bad.exit_code == 2);
    auto badval = run("geomeasure --n 2 --k 3 --method closed");
    CHECK(badval.exit_code == 2);
    auto norow = run("robustness --n 7 --lost 2");
    CHECK(norow.exit_code == 2);
    // cross-check breach forced by an absurd tolerance: JSON with both values
    // still lands on stdout, exit code 3
    auto forced = run("geomeasure --n 4 --k 3 --method all --restarts 8 --seed 1 --tol 1e-30");
    CHECK(forced.exit_code == 3);
    auto j = nlohmann::json::parse(forced.output);
    CHECK(j.contains("value_numeric"));
    CHECK(j.contains("value_oracle"));
}

TEST_CASE("dense cap honors the environment override") {
    const std::string cmd = "HYPERSTATE_DENSE_CAP=3 " + std::string(HYPERSTATE_CLI_PATH) +
                            " geomeasure --n 4 --k 3 --method oracle 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
}
