// End-to-end tests of the command-line tool: exit codes, report determinism,
// and the shape of both human and JSON output.  Each case launches the real
// binary (path injected by the build as CPMAT_CLI_PATH).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "test_util.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(CPMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string data_path(const std::string& name) {
    return std::string(CPMAT_DATA_DIR) + "/" + name;
}

/// Writes `text` to a fresh file under the system temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
    const std::string path =
        (std::filesystem::temp_directory_path() / ("cpmat_cli_" + name)).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("exit codes separate established, undetermined and refuted verdicts") {
    // Established on both sides: the worked 5-state example.
    CHECK(run_cli("controllable " + data_path("example1.cpm")).exit_code == 0);

    // Sufficient test fails but sampling finds nothing: undetermined.
    CHECK(run_cli("controllable " + data_path("example4.cpm") + " --trials 25").exit_code == 2);

    // A system whose dashed classes admit an uncontrollable realization.
    const std::string refutable =
        temp_file("refutable.cpm", "dims 2 3 2\ng1 0 c1\n0 g2 c1\n");
    CHECK(run_cli("controllable " + refutable + " --trials 1000").exit_code == 3);

    // Pattern-level analogues.
    CHECK(run_cli("colorable " + data_path("example1.cpm")).exit_code == 0);
    CHECK(run_cli("colorable " + data_path("example9.cpm")).exit_code == 2);
    CHECK(run_cli("nonsingular " + data_path("example5.cpm")).exit_code == 0);
    const std::string singular = temp_file("singular.cpm", "dims 2 2\nc1 c2\nc2 c1\n");
    CHECK(run_cli("nonsingular " + singular).exit_code == 3);
    CHECK(run_cli("fullrank " + data_path("example9.cpm") + " --trials 25").exit_code == 2);
}

TEST_CASE("validate reports findings on stdout and exits 1") {
    CliResult clean = run_cli("validate " + data_path("example1.cpm"));
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("valid") != std::string::npos);

    const std::string gapped = temp_file("gapped.cpm", "dims 2 2\nc1 c3\nc1 0\n");
    CliResult bad = run_cli("validate " + gapped);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("gapped-color-index") != std::string::npos);

    CliResult bad_json = run_cli("validate " + gapped + " --json");
    CHECK(bad_json.exit_code == 1);
    nlohmann::json report = nlohmann::json::parse(bad_json.output);
    CHECK(report["result"]["valid"] == false);
    CHECK(report["result"]["diagnostics"].size() == 1);
    CHECK(report["result"]["diagnostics"][0]["code"] == "gapped-color-index");
}

TEST_CASE("unusable input exits 1 without a report on stdout") {
    CliResult missing = run_cli("det /nonexistent/input.cpm");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.empty());

    // A malformed file is a hard parse error for analysis commands.
    const std::string ragged = temp_file("ragged.cpm", "dims 2 2\nc1 c2 c1\nc2 c1\n");
    CHECK(run_cli("det " + ragged).exit_code == 1);

    // Usage errors (unknown subcommand / missing argument) also exit 1.
    CHECK(run_cli("frobnicate x.cpm").exit_code == 1);
    CHECK(run_cli("det").exit_code == 1);
}

TEST_CASE("exhausted budgets exit 1") {
    CHECK(run_cli("colorable " + data_path("example1.cpm") + " --budget 2").exit_code == 1);
}

TEST_CASE("json reports are byte-identical across runs") {
    for (const std::string invocation :
         {"controllable " + data_path("example4.cpm") + " --trials 20 --json",
          "controllable " + data_path("example1.cpm") + " --json",
          "nonsingular " + data_path("example5.cpm") + " --json",
          "det " + data_path("example5.cpm") + " --json",
          "bar " + data_path("example1.cpm") + " --json",
          "sample " + data_path("example4.cpm") + " --trials 3 --seed 11 --json"}) {
        CliResult first = run_cli(invocation);
        CliResult second = run_cli(invocation);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("bar prints the diagonally-perturbed companion with its color maps") {
    CliResult human = run_cli("bar " + data_path("example1.cpm"));
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("c3 0 c1 0 0 c1 0") != std::string::npos);
    CHECK(human.output.find("dropped g2") != std::string::npos);
    CHECK(human.output.find("fresh  c4 at diagonal position 5") != std::string::npos);

    CliResult report = run_cli("bar " + data_path("example1.cpm") + " --json");
    CHECK(report.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(report.output);
    CHECK(j["command"] == "bar");
    CHECK(j["result"]["dropped"] == nlohmann::json::array({"g2"}));
    CHECK(j["result"]["fresh"].size() == 5);
}

TEST_CASE("det prints the frozen symbolic determinant") {
    CliResult human = run_cli("det " + data_path("example5.cpm"));
    CHECK(human.exit_code == 0);
    CHECK(human.output == "-c1^2*c2\n");

    CliResult report = run_cli("det " + data_path("example5.cpm") + " --json");
    nlohmann::json j = nlohmann::json::parse(report.output);
    CHECK(j["result"]["text"] == "-c1^2*c2");
    CHECK(j["result"]["single_solid_monomial"] == true);
}

TEST_CASE("controllable --json carries the verdict, traces and sampling report") {
    CliResult established = run_cli("controllable " + data_path("example1.cpm") + " --json");
    nlohmann::json j = nlohmann::json::parse(established.output);
    CHECK(j["result"]["conclusion"] == "established");
    CHECK(j["result"]["verdict"]["status"] == "sufficient-controllable");
    CHECK(j["result"]["verdict"]["composite_side"]["colorable"] == true);
    CHECK(j["result"]["verdict"]["barred_side"]["colorable"] == true);
    CHECK_FALSE(j["result"].contains("sampling"));
    CHECK(j["input"]["digest"].get<std::string>().size() == 16);

    CliResult undetermined =
        run_cli("controllable " + data_path("example4.cpm") + " --trials 25 --json");
    nlohmann::json u = nlohmann::json::parse(undetermined.output);
    CHECK(u["result"]["conclusion"] == "undetermined");
    CHECK(u["result"]["sampling"]["trials_run"] == 25);
    CHECK(u["result"]["sampling"]["counterexample"].is_null());
}

TEST_CASE("sample output is reproducible for a fixed seed and differs across seeds") {
    const std::string args = "sample " + data_path("example4.cpm") + " --trials 5 --seed 42";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CliResult c = run_cli("sample " + data_path("example4.cpm") + " --trials 5 --seed 43");
    CHECK(a.output != c.output);
}
