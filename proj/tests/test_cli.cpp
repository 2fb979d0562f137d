// End-to-end checks of the command-line tool: golden first rows, JSON shape,
// exit codes, and byte-for-byte reproducibility. The binary path comes in
// through MLQM_CLI_PATH at compile time.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output; // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + MLQM_CLI_PATH + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum emits the golden header and ground row") {
    const auto r = run_cli("spectrum --beta-tilde 0.2 --omega-tilde 0.5 --n-max 2 --tau both");
    REQUIRE(r.exitCode == 0);
    const auto rows = lines_of(r.output);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "n,tau,p0,e_shift,bound_ratio,energy");
    CHECK(rows[1] == "0,+1,1,0,0.447213595499958,1");
}

TEST_CASE("the missing lowest negative-branch row is skipped") {
    const auto r = run_cli("spectrum --beta-tilde 0.2 --omega-tilde 0.5 --n-max 0 --tau both");
    REQUIRE(r.exitCode == 0);
    CHECK(lines_of(r.output).size() == 2); // header plus the tau = +1 ground row
}

TEST_CASE("reruns are byte-identical") {
    const std::string args = "spectrum --beta-tilde 0.37 --omega-tilde 1.3 --n-max 40";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("spectrum json parses and scales by the rest energy") {
    const auto r = run_cli("spectrum --physical --mass 2 --omega 3 --beta-physical 0.005 "
                           "--c 5 --hbar 7 --n-max 1 --format json");
    REQUIRE(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["beta_tilde"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(j["omega_tilde"].get<double>() == doctest::Approx(0.42).epsilon(1e-15));
    REQUIRE(!j["levels"].empty());
    CHECK(j["levels"][0]["p0"].get<double>() == 1.0);
    CHECK(j["levels"][0]["energy"].get<double>() == doctest::Approx(50.0).epsilon(1e-15));
}

TEST_CASE("verify-algebra reports all relations ok") {
    const auto r = run_cli("verify-algebra --max-dimension 2 --family both --format json");
    REQUIRE(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["all_ok"].get<bool>());
    CHECK(j["reports"].size() >= 4);
    for (const auto& rep : j["reports"])
        for (const auto& rel : rep["relations"]) CHECK(rel["status"] == "ok");
}

TEST_CASE("verify-poincare carries the two-particle verdict") {
    const auto r = run_cli("verify-poincare --max-dimension 1 --two-particle --format json");
    REQUIRE(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["all_ok"].get<bool>());
    CHECK(!j["relative_coordinate_shift_vanishes"].get<bool>());
    CHECK(!j["relative_coordinate_residual"].get<std::string>().empty());
}

TEST_CASE("residuals pass at the documented tolerance and fail at an absurd one") {
    const auto ok = run_cli("residuals --beta-tilde 0.2 --omega-tilde 0.5 --n-max 3");
    CHECK(ok.exitCode == 0);
    const auto bad =
        run_cli("residuals --beta-tilde 0.2 --omega-tilde 0.5 --n-max 3 --tolerance 1e-20");
    CHECK(bad.exitCode == 1);
}

TEST_CASE("detuned residuals are reported without failing the run") {
    const auto r = run_cli("residuals --beta-tilde 0.2 --omega-tilde 0.5 --n-max 2 "
                           "--detune 0.01 --format json");
    REQUIRE(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["worst_residual"].get<double>() > 1e-3);
}

TEST_CASE("wavefunction tables carry header, rows, and a unit norm") {
    const auto csv = run_cli("wavefunction --beta-tilde 0.2 --omega-tilde 0.5 --n 2 --samples 5");
    REQUIRE(csv.exitCode == 0);
    const auto rows = lines_of(csv.output);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "p,z,psi1,psi2");

    const auto js = run_cli(
        "wavefunction --beta-tilde 0.2 --omega-tilde 0.5 --n 2 --samples 5 --format json");
    REQUIRE(js.exitCode == 0);
    const auto j = nlohmann::json::parse(js.output);
    CHECK(j["norm"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(j["lambda"].get<double>() == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(j["samples"].size() == 5);
}

TEST_CASE("uncertainty table ends with the tuned symmetry line") {
    const auto r = run_cli("uncertainty --beta-tilde 0.2 --omega-tilde 0.5 --n-max 3");
    REQUIRE(r.exitCode == 0);
    CHECK(r.output.find("# hermiticity") != std::string::npos);
    CHECK(r.output.find("ok=1") != std::string::npos);
}

TEST_CASE("orthogonality report freezes the off-parity overlap") {
    const auto r = run_cli("ortho-report --beta-tilde 0.2 --omega-tilde 0.5 --n-max 2");
    REQUIRE(r.exitCode == 0);
    CHECK(r.output.find("0,2,0.108596292721241") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("spectrum --beta-tilde 1.5").exitCode == 2);
    CHECK(run_cli("no-such-command").exitCode == 2);
    CHECK(run_cli("").exitCode == 2);
    const auto r = run_cli("spectrum --beta-tilde 1.5");
    CHECK(r.output.find("betaTilde") != std::string::npos);
}

TEST_CASE("help exits cleanly and names every subcommand") {
    const auto r = run_cli("--help");
    CHECK(r.exitCode == 0);
    for (const char* name : {"verify-algebra", "verify-poincare", "spectrum", "wavefunction",
                             "residuals", "uncertainty", "limits", "ortho-report"})
        CHECK(r.output.find(name) != std::string::npos);
}

} // TEST_SUITE
