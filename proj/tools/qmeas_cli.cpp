// Command-line front end: Monte Carlo verification of the branched
// measurement scenarios plus gate-table inspection.

#include <complex>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmeas/measurement_gates.hpp"
#include "qmeas/measurement_model.hpp"
#include "qmeas/monte_carlo.hpp"
#include "qmeas/report_io.hpp"
#include "qmeas/truth_table.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIoError = 3;

struct CommonOptions {
    std::string format = "csv";
    std::string out_path;
    double tolerance_sigmas = 4.0;
};

void add_common(CLI::App *sub, CommonOptions &common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out_path, "Write the report to this path (default: stdout)");
    sub->add_option("--tolerance-sigmas", common.tolerance_sigmas,
                    "Per-outcome z-score gate for statistical checks");
}

int deliver(const std::string &content, const CommonOptions &common) {
    if (common.out_path.empty()) {
        std::cout << content;
        return kExitPass;
    }
    try {
        qmeas::write_file(common.out_path, content);
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitIoError;
    }
    return kExitPass;
}

nlohmann::json config_json(const qmeas::ExperimentConfig &cfg, const std::string &name) {
    nlohmann::json j;
    j["scenario"] = name;
    if (cfg.scenario != qmeas::Scenario::kSinglet) {
        j["alpha"] = {cfg.alpha.real(), cfg.alpha.imag()};
        j["beta"] = {cfg.beta.real(), cfg.beta.imag()};
    } else {
        j["phi"] = cfg.phi;
    }
    if (cfg.scenario == qmeas::Scenario::kContinuous) {
        j["s_grid"] = cfg.s_grid;
    } else {
        j["trials"] = cfg.trials;
        j["seed"] = cfg.seed;
        j["tolerance_sigmas"] = cfg.tolerance_sigmas;
    }
    return j;
}

int run_sampled(const qmeas::ExperimentConfig &cfg, const std::string &name,
                const CommonOptions &common) {
    const qmeas::FrequencyReport report = qmeas::run_trials(cfg);

    std::string content;
    if (common.format == "csv") {
        content = qmeas::frequency_report_csv(report);
    } else {
        nlohmann::json j;
        j["config"] = config_json(cfg, name);
        j["report"] = nlohmann::json::parse(qmeas::frequency_report_json(report));
        const auto scenario_state =
            cfg.scenario == qmeas::Scenario::kOneQubit
                ? qmeas::branched_measurement(qmeas::Preparation(cfg.alpha, cfg.beta))
                : qmeas::pair_branched_measurement(qmeas::SingletPreparation(cfg.phi));
        j["scenario"] = nlohmann::json::parse(qmeas::branched_state_json(scenario_state));
        content = j.dump(2) + "\n";
    }

    const int delivery = deliver(content, common);
    if (delivery != kExitPass)
        return delivery;
    if (!report.pass) {
        std::cerr << (report.impossible_outcome
                          ? "statistical gate failed: impossible outcome observed\n"
                          : "statistical gate failed: outcome z-score beyond tolerance\n");
        return kExitStatFail;
    }
    return kExitPass;
}

int run_continuous(const qmeas::ExperimentConfig &cfg, const CommonOptions &common) {
    const qmeas::Preparation prep(cfg.alpha, cfg.beta);
    const auto points = qmeas::rho_trajectory(prep, cfg.s_grid);

    // Cross-check the partial-trace route against the closed form at every
    // emitted point.
    bool consistent = true;
    for (const auto &pt : points) {
        const qmeas::DensityMatrix formula =
            qmeas::reduced_qubit_density_formula(prep, qmeas::ContinuousParams(pt.s), pt.gamma);
        if ((pt.rho - formula.matrix()).cwiseAbs().maxCoeff() > qmeas::kAlgebraTol)
            consistent = false;
    }

    std::string content;
    if (common.format == "csv") {
        content = qmeas::trajectory_csv(points);
    } else {
        nlohmann::json j = nlohmann::json::parse(qmeas::trajectory_json(points));
        j["config"] = config_json(cfg, "continuous");
        content = j.dump(2) + "\n";
    }

    const int delivery = deliver(content, common);
    if (delivery != kExitPass)
        return delivery;
    if (!consistent) {
        std::cerr << "consistency check failed: partial trace deviates from closed form\n";
        return kExitStatFail;
    }
    return kExitPass;
}

int run_gate_dump(const std::string &completion, const CommonOptions &common) {
    const auto strategy = completion == "plain" ? qmeas::CompletionStrategy::kPlainAscending
                                                : qmeas::CompletionStrategy::kPreserveEBlock;
    return deliver(qmeas::to_text(qmeas::completed_measurement_table(strategy)), common);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum measurement as a reversible logic gate: scenario simulation "
                 "and Monte Carlo verification"};
    app.require_subcommand(1);

    CommonOptions common;
    qmeas::ExperimentConfig cfg;
    double alpha_re = 1.0 / std::numbers::sqrt2, alpha_im = 0.0;
    double beta_re = 1.0 / std::numbers::sqrt2, beta_im = 0.0;
    int s_steps = 11;
    std::string completion = "e-block";

    CLI::App *one_qubit = app.add_subcommand("one-qubit", "Measure a|0> + b|1> many times");
    one_qubit->add_option("--alpha-re", alpha_re, "Re(alpha)");
    one_qubit->add_option("--alpha-im", alpha_im, "Im(alpha)");
    one_qubit->add_option("--beta-re", beta_re, "Re(beta)");
    one_qubit->add_option("--beta-im", beta_im, "Im(beta)");
    one_qubit->add_option("--trials", cfg.trials, "Number of sampled outcomes");
    one_qubit->add_option("--seed", cfg.seed, "Stream seed");
    add_common(one_qubit, common);

    CLI::App *singlet = app.add_subcommand("singlet", "Measure both qubits of a rotated singlet");
    singlet->add_option("--phi", cfg.phi, "Reference rotation in radians");
    singlet->add_option("--trials", cfg.trials, "Number of sampled outcomes");
    singlet->add_option("--seed", cfg.seed, "Stream seed");
    add_common(singlet, common);

    CLI::App *continuous =
        app.add_subcommand("continuous", "Reduced-density trajectory of the measured qubit");
    continuous->add_option("--alpha-re", alpha_re, "Re(alpha)");
    continuous->add_option("--alpha-im", alpha_im, "Im(alpha)");
    continuous->add_option("--beta-re", beta_re, "Re(beta)");
    continuous->add_option("--beta-im", beta_im, "Im(beta)");
    continuous->add_option("--s-steps", s_steps, "Grid points covering [0, pi/2]");
    add_common(continuous, common);

    CLI::App *gate_dump = app.add_subcommand("gate-dump", "Print the completed gate truth table");
    gate_dump->add_option("--completion", completion, "Completion strategy")
        ->check(CLI::IsMember({"e-block", "plain"}));
    gate_dump->add_option("--out", common.out_path, "Write to this path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitBadConfig;
    }

    cfg.alpha = {alpha_re, alpha_im};
    cfg.beta = {beta_re, beta_im};
    cfg.tolerance_sigmas = common.tolerance_sigmas;

    try {
        if (gate_dump->parsed())
            return run_gate_dump(completion, common);

        if (one_qubit->parsed()) {
            cfg.scenario = qmeas::Scenario::kOneQubit;
            cfg.validate();
            return run_sampled(cfg, "one-qubit", common);
        }
        if (singlet->parsed()) {
            cfg.scenario = qmeas::Scenario::kSinglet;
            cfg.validate();
            return run_sampled(cfg, "singlet", common);
        }
        cfg.scenario = qmeas::Scenario::kContinuous;
        if (s_steps < 2) {
            std::cerr << "error: --s-steps must be at least 2\n";
            return kExitBadConfig;
        }
        cfg.s_grid = qmeas::phase_grid(s_steps);
        cfg.validate();
        return run_continuous(cfg, common);
    } catch (const std::invalid_argument &ex) {
        std::cerr << "invalid configuration: " << ex.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitIoError;
    }
}
