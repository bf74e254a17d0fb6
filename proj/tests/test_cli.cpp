#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the built binary through the shell. stderr is dropped unless
/// merge_stderr is set, so byte-comparison tests see stdout alone.
CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string("\"") + QWKB_CLI_PATH + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cli: closed-form spectrum emits the known first linear level") {
    const CommandResult r = run_cli(
        "spectrum --potential linear --mu 1 --Q 1 --n 1:3 --l 0 --method closed-form");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.output) lines += ch == '\n';
    CHECK(lines == 4);  // header + 3 rows
    CHECK(r.output.find("1.40539183320e+00") != std::string::npos);
}

TEST_CASE("cli: published log variant reproduces its first level") {
    const CommandResult r = run_cli(
        "spectrum --potential log --E0 1 --r0 1 --Q 1 --n 1:1 --method closed-form "
        "--log-variant paper");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-3.10391118818e-01") != std::string::npos);
}

TEST_CASE("cli: default log variant announces itself on stderr") {
    const CommandResult merged = run_cli(
        "spectrum --potential log --n 1:1 --method closed-form", true);
    CHECK(merged.exit_code == 0);
    CHECK(merged.output.find("rederived") != std::string::npos);

    const CommandResult quiet = run_cli(
        "spectrum --potential log --n 1:1 --method closed-form --log-variant rederived",
        true);
    CHECK(quiet.output.find("note:") == std::string::npos);
}

TEST_CASE("cli: usage errors exit 1") {
    CHECK(run_cli("spectrum --potential bogus").exit_code == 1);
    CHECK(run_cli("spectrum --method \"\"").exit_code == 1);
    CHECK(run_cli("spectrum --l 1 --method closed-form").exit_code == 1);
    CHECK(run_cli("spectrum --n 0:3 --method closed-form").exit_code == 1);
    CHECK(run_cli("spectrum --n 5:1 --method closed-form").exit_code == 1);
    CHECK(run_cli("spectrum --n 1:300 --method closed-form").exit_code == 1);
    CHECK(run_cli("spectrum --maslov 0.3").exit_code == 1);
    CHECK(run_cli("wavefunction --n 1:3").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);  // a subcommand is required
    // Langer off at l = 0 is an unsupported configuration, not a numerics bug.
    CHECK(run_cli("spectrum --potential linear --langer off --l 0 --n 1:1 "
                  "--method wkb-numeric")
              .exit_code == 1);
}

TEST_CASE("cli: numerical failures exit 2") {
    // p = 0 passes the flag checks but the constant potential confines
    // nothing, so the turning-point bracket must fail.
    CHECK(run_cli("phase --potential power --A 1 --p 0 --n 1:1").exit_code == 2);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("spectrum --help").exit_code == 0);
}

TEST_CASE("cli: config file and flags produce identical bytes") {
    const auto path = temp_file("qwkb_cli_config_test.txt");
    {
        std::ofstream out(path);
        out << "# cubic closed forms, first two levels\n"
               "potential = cubic\n"
               "nu = 1.0\n"
               "Q = 1.0\n"
               "n = 1:2\n"
               "method = closed-form\n";
    }
    const CommandResult from_config =
        run_cli("spectrum --config " + path.string());
    const CommandResult from_flags = run_cli(
        "spectrum --potential cubic --nu 1.0 --Q 1.0 --n 1:2 --method closed-form");

    // Explicit flags beat file values no matter where --config sits.
    const CommandResult overridden =
        run_cli("spectrum --n 1:1 --config " + path.string());
    std::filesystem::remove(path);
    CHECK(from_config.exit_code == 0);
    CHECK(from_flags.exit_code == 0);
    CHECK(from_config.output == from_flags.output);
    CHECK(!from_config.output.empty());

    CHECK(overridden.exit_code == 0);
    int lines = 0;
    for (char ch : overridden.output) lines += ch == '\n';
    CHECK(lines == 2);  // header + the single overridden row
}

TEST_CASE("cli: unreadable config file exits 1") {
    CHECK(run_cli("spectrum --config /nonexistent/qwkb.cfg").exit_code == 1);
}

TEST_CASE("cli: identical runs are byte-identical") {
    const std::string args =
        "spectrum --potential linear --n 1:2 --method all --jobs 2";
    const CommandResult a = run_cli(args);
    const CommandResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("E_wkb") != std::string::npos);
}

TEST_CASE("cli: json output parses and echoes the run") {
    const CommandResult r = run_cli(
        "spectrum --potential linear --n 1:2 --method closed-form --output json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["meta"]["potential"] == "linear");
    CHECK(doc["meta"]["n"] == "1:2");
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["E_closed"].get<double>() ==
          doctest::Approx(1.40539183320095454).epsilon(1e-14));
    CHECK(doc["rows"][0]["E_wkb"].is_null());
}

TEST_CASE("cli: --out writes the same bytes a pipe would carry") {
    const auto path = temp_file("qwkb_cli_out_test.csv");
    const CommandResult to_file = run_cli(
        "spectrum --potential linear --n 1:1 --method closed-form --out " + path.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());

    std::ifstream in(path, std::ios::binary);
    std::string written((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::filesystem::remove(path);

    const CommandResult to_stdout =
        run_cli("spectrum --potential linear --n 1:1 --method closed-form");
    CHECK(written == to_stdout.output);

    CHECK(run_cli("spectrum --n 1:1 --method closed-form --out "
                  "/nonexistent-dir-qwkb/table.csv")
              .exit_code == 1);
}

TEST_CASE("cli: phase table reports targets and residuals") {
    const CommandResult r = run_cli("phase --potential linear --n 1:2 --output json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["rows"].size() == 2);
    for (const auto& row : doc["rows"]) {
        CHECK(std::abs(row["phase"].get<double>() - row["target"].get<double>()) < 1e-8);
        CHECK(row["residual"].get<double>() < 1e-9);
    }
}

TEST_CASE("cli: wavefunction table flags the forbidden tail") {
    const CommandResult r =
        run_cli("wavefunction --potential linear --n 3 --samples 200 --output json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["rows"].size() == 200);
    CHECK(doc["rows"].back()["valid"].get<int>() == 0);  // beyond the turning point
    bool saw_valid = false;
    for (const auto& row : doc["rows"])
        if (row["valid"].get<int>() == 1) {
            saw_valid = true;
            CHECK(row["u"].is_number());
        }
    CHECK(saw_valid);
}

TEST_CASE("cli: field table pairs the coupling with the canonical preset") {
    // Linear mapping is exact: V_coupling == V_preset on the grid.
    const CommandResult lin = run_cli(
        "field --potential linear --mu 1 --Q 1 --rmin 0.5 --rmax 2.0 --samples 4 "
        "--output json");
    CHECK(lin.exit_code == 0);
    const auto lin_doc = nlohmann::json::parse(lin.output);
    for (const auto& row : lin_doc["rows"]) {
        CHECK(row["V_coupling"].get<double>() ==
              doctest::Approx(row["V_preset"].get<double>()).epsilon(1e-13));
    }

    // The cubic density carries twice the preset strength; the table shows it.
    const CommandResult cub = run_cli(
        "field --potential cubic --nu 1 --Q 1 --rmin 1.0 --rmax 1.0001 --samples 2 "
        "--output json");
    CHECK(cub.exit_code == 0);
    const auto cub_doc = nlohmann::json::parse(cub.output);
    const auto& row = cub_doc["rows"][0];
    CHECK(row["V_coupling"].get<double>() ==
          doctest::Approx(2.0 * row["V_preset"].get<double>()).epsilon(1e-12));
}
