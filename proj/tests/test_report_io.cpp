#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qmeas/report_io.hpp"

using namespace qmeas;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("doubles render with 17 significant digits") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
}

TEST_CASE("frequency CSV carries one row per assignment plus header") {
    ExperimentConfig cfg;
    cfg.scenario = Scenario::kSinglet;
    cfg.phi = pi / 4;
    cfg.trials = 10000;
    cfg.seed = 5;
    const FrequencyReport report = run_trials(cfg);
    const std::string csv = frequency_report_csv(report);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "assignment,expected,observed_count,observed_freq,z");
    CHECK(rows[1].starts_with("00,")); // sin^2(pi/4)/2 with 17 significant digits
    {
        std::istringstream row(rows[1]);
        std::string field;
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        CHECK(field.size() >= 17); // full precision, not a rounded rendering
        CHECK(std::stod(field) == doctest::Approx(0.25).epsilon(1e-12));
    }
    CHECK(csv.back() == '\n');
}

TEST_CASE("frequency JSON mirrors the report fields") {
    ExperimentConfig cfg;
    cfg.scenario = Scenario::kOneQubit;
    cfg.alpha = 0.0;
    cfg.beta = 1.0;
    cfg.trials = 50;
    cfg.seed = 2;
    const FrequencyReport report = run_trials(cfg);
    const auto j = nlohmann::json::parse(frequency_report_json(report));
    CHECK(j["trials"] == 50);
    CHECK(j["pass"] == true);
    CHECK(j["outcomes"].size() == 2);
    CHECK(j["outcomes"][1]["assignment"] == "1");
    CHECK(j["outcomes"][1]["observed_count"] == 50);
    CHECK(j["outcomes"][1]["expected"] == 1.0);
}

TEST_CASE("trajectory CSV emits two rows per grid point") {
    const Preparation prep(1.0 / sqrt2, 1.0 / sqrt2);
    const auto points = rho_trajectory(prep, phase_grid(11));
    const std::string csv = trajectory_csv(points);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 23);
    CHECK(rows[0] == "s,gamma,rho00_re,rho01_re,rho01_im,rho11_re");
    CHECK(csv.back() == '\n');

    // Final grid point, raised branch: the outcome is read off exactly.
    const auto last = rows[22];
    CHECK(last.find(",1,") != std::string::npos);
    const auto cols = [&] {
        std::vector<std::string> out;
        std::istringstream in(last);
        std::string field;
        while (std::getline(in, field, ','))
            out.push_back(field);
        return out;
    }();
    REQUIRE(cols.size() == 6);
    CHECK(std::stod(cols[2]) == doctest::Approx(0.0).epsilon(1e-12)); // rho00_re
    CHECK(std::stod(cols[3]) == doctest::Approx(0.0).epsilon(1e-12)); // rho01_re
    CHECK(std::stod(cols[5]) == doctest::Approx(1.0).epsilon(1e-12)); // rho11_re
}

TEST_CASE("trajectory JSON keeps the full 2x2 matrices") {
    const Preparation prep(0.6, 0.8);
    const auto points = rho_trajectory(prep, phase_grid(3));
    const auto j = nlohmann::json::parse(trajectory_json(points));
    REQUIRE(j["points"].size() == 6);
    CHECK(j["points"][0]["gamma"] == 0);
    CHECK(j["points"][0]["rho"].size() == 2);
    CHECK(j["points"][0]["rho"][0][0][0].get<double>() == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("branched state JSON lists branches, distribution and reductions") {
    const BranchedState out = branched_measurement(Preparation(0.6, 0.8));
    const std::string text = branched_state_json(out, {{wires::q}});
    const auto j = nlohmann::json::parse(text);
    CHECK(j["register"] == nlohmann::json::array({"e", "p", "q", "a"}));
    CHECK(j["branches"].size() == 2);
    CHECK(j["branches"]["1"].size() == 16);
    // Branch 1 amplitude at word 1110 is alpha = 0.6.
    CHECK(j["branches"]["1"][14][0].get<double>() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(j["distribution"]["probs"]["1"].get<double>() == doctest::Approx(0.64).epsilon(1e-12));
    REQUIRE(j["reduced"].size() == 1);
    CHECK(j["reduced"][0]["keep"] == nlohmann::json::array({"q"}));
    CHECK(j["reduced"][0]["branches"]["0"][0][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(text.back() == '\n');
}

TEST_CASE("emit_report writes files and surfaces I/O failures") {
    const auto dir = std::filesystem::temp_directory_path() / "qmeas_report_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "report.csv";

    ExperimentConfig cfg;
    cfg.scenario = Scenario::kOneQubit;
    cfg.alpha = 0.0;
    cfg.beta = 1.0;
    cfg.trials = 10;
    const FrequencyReport report = run_trials(cfg);
    emit_report(report, ReportFormat::kCsv, path);

    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == frequency_report_csv(report));

    CHECK_THROWS_AS(emit_report(report, ReportFormat::kCsv, dir / "missing" / "report.csv"),
                    std::runtime_error);
    std::filesystem::remove_all(dir);
}
