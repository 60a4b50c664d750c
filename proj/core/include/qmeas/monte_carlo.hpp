#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qmeas/measurement_model.hpp"
#include "qmeas/stochastic.hpp"

namespace qmeas {

enum class Scenario { kOneQubit, kSinglet, kContinuous };

/// Parameters of one verification run.
struct ExperimentConfig {
    Scenario scenario = Scenario::kOneQubit;
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};
    double phi = 0.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::vector<double> s_grid;
    double tolerance_sigmas = 4.0;

    /// Throws std::invalid_argument on a malformed configuration.
    void validate() const;

    /// Outcome distribution the scenario predicts (one-qubit and singlet).
    JointDistribution predicted_distribution() const;
};

struct OutcomeStat {
    std::string assignment;
    double expected = 0.0;
    std::uint64_t observed_count = 0;
    double observed_freq = 0.0;
    double z = 0.0;
};

/**
 * Empirical outcome frequencies versus the predicted distribution. The gate
 * passes when every per-outcome |z| stays within tolerance_sigmas and no
 * zero-probability outcome was observed.
 */
struct FrequencyReport {
    std::vector<OutcomeStat> outcomes;
    std::uint64_t trials = 0;
    double tolerance_sigmas = 4.0;
    /// Computed over outcomes with expected probability > 0 only.
    double chi_square = 0.0;
    bool impossible_outcome = false;
    bool pass = false;
};

/**
 * Tally observed counts against an expected distribution.
 * z = (observed_freq - expected) / sqrt(expected * (1 - expected) / trials);
 * an observed count on a zero-probability outcome is flagged as an
 * impossible outcome and fails the report.
 */
FrequencyReport tally(const JointDistribution &expected, const std::vector<std::uint64_t> &counts,
                      double tolerance_sigmas);

/**
 * Draw cfg.trials assignments from the scenario's predicted distribution and
 * tally them. Trial i consumes exactly the counter-derived value
 * SplitMix64::at(seed, i), so the result is independent of any partitioning
 * of the trial range and byte-reproducible per (seed, config).
 */
FrequencyReport run_trials(const ExperimentConfig &cfg);

} // namespace qmeas
