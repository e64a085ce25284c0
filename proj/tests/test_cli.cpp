#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERVOL_CLI_PATH) + " " + args + " 2>&1";
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

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("volume command prints the reference value") {
    RunResult r = run_cli("volume --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0.443831"));
    CHECK(contains(r.output, "mu"));
}

TEST_CASE("angle literals accept pi fractions and decimals") {
    RunResult a = run_cli("volume --angles 1*pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870");
    RunResult b = run_cli("volume --angles 1.5707963267948966,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("volume --angles pi/2,pi/3 --ell 0").exit_code == 1);
    CHECK(run_cli("volume --angles pi/0,pi/3,pi/3,pi/2,pi/2 --ell 0").exit_code == 1);
    CHECK(run_cli("volume --angles 0.5x,pi/3,pi/3,pi/2,pi/2 --ell 0").exit_code == 1);
    CHECK(run_cli("bogus-command").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("regime rejection exits with code 2 and a cofactor diagnostic") {
    RunResult r = run_cli("volume --angles pi/3,pi/4,pi/4,pi/3,pi/3 --ell 0.5");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "c44"));
}

TEST_CASE("json report round-trips byte-identically") {
    RunResult r = run_cli(
        "volume --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.dump(2) + "\n" == r.output);
    // Frozen field surface.
    for (const char* key : {"params", "a", "gram", "z", "V", "W", "mu", "ell",
                            "edge_lengths", "volume", "diagnostics"})
        CHECK(j.contains(key));
    CHECK(j["volume"].get<double>() == doctest::Approx(0.4438311).epsilon(1e-5));
    CHECK(j["gram"].contains("det"));
    CHECK(j["gram"]["cofactors"].size() == 4);
    CHECK(j["W"]["branch_integers"].size() == 6);
    CHECK(j["diagnostics"]["regime_pass"].get<bool>());
}

TEST_CASE("csv report has the fixed header") {
    RunResult r = run_cli(
        "volume --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("theta1,theta2,theta3,theta5,theta6,ell,volume,mu,", 0) == 0);
    CHECK(contains(r.output, "0.443831247"));
}

TEST_CASE("classify reports vertex classes") {
    RunResult r = run_cli("classify --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "ultra_ideal"));
    CHECK(contains(r.output, "proper"));
    CHECK(contains(r.output, "pass"));
}

TEST_CASE("table command reproduces all rows") {
    RunResult r = run_cli("table --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["rows"].size() == 12);
    CHECK(j["max_abs_diff"].get<double>() < 1e-6);
}

TEST_CASE("table output is identical across runs") {
    RunResult a = run_cli("table");
    RunResult b = run_cli("table");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("check command passes") {
    RunResult r = run_cli("check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pass"));
    CHECK_FALSE(contains(r.output, "FAIL"));
}

TEST_CASE("oracle command honors seed controls") {
    RunResult a = run_cli(
        "oracle --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --samples 50000 --seed 7 --format json");
    CHECK(a.exit_code == 0);
    nlohmann::json ja = nlohmann::json::parse(a.output);
    CHECK(ja["seed"].get<unsigned long long>() == 7);
    CHECK(std::abs(ja["estimate"].get<double>() -
                   ja["formula_volume"].get<double>()) <
          5 * ja["std_error"].get<double>());
    // Env override for the default seed.
    RunResult b = run_cli(
        "oracle --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --samples 50000 --format json");
    const std::string cmd =
        std::string("HYPERVOL_SEED=7 ") + HYPERVOL_CLI_PATH +
        " oracle --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --samples 50000 --format json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string env_out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        env_out.append(buf, n);
    pclose(pipe);
    nlohmann::json jc = nlohmann::json::parse(env_out);
    CHECK(jc["seed"].get<unsigned long long>() == 7);
    CHECK(jc["estimate"].get<double>() == ja["estimate"].get<double>());
    (void)b;
}

TEST_CASE("oracle rejects tiny sample counts as a usage error") {
    RunResult r = run_cli(
        "oracle --angles pi/2,pi/3,pi/3,pi/2,pi/2 --ell 0.3164870 --samples 100");
    CHECK(r.exit_code == 1);
}
