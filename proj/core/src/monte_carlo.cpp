#include "qmeas/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmeas {

void ExperimentConfig::validate() const {
    switch (scenario) {
    case Scenario::kOneQubit:
        Preparation(alpha, beta); // throws when not normalized
        if (trials < 1)
            throw std::invalid_argument("trials must be >= 1");
        break;
    case Scenario::kSinglet:
        if (!std::isfinite(phi))
            throw std::invalid_argument("phi must be finite");
        if (trials < 1)
            throw std::invalid_argument("trials must be >= 1");
        break;
    case Scenario::kContinuous:
        Preparation(alpha, beta);
        if (s_grid.size() < 2)
            throw std::invalid_argument("continuous scenario needs an s-grid of >= 2 points");
        for (double s : s_grid)
            ContinuousParams{s}; // range check
        break;
    }
    if (!(tolerance_sigmas > 0.0))
        throw std::invalid_argument("tolerance_sigmas must be positive");
}

JointDistribution ExperimentConfig::predicted_distribution() const {
    switch (scenario) {
    case Scenario::kOneQubit:
        return Preparation(alpha, beta).outcome_distribution();
    case Scenario::kSinglet:
        return singlet_outcome_distribution(phi);
    case Scenario::kContinuous:
        break;
    }
    throw std::invalid_argument("continuous scenario has no sampled outcome distribution");
}

FrequencyReport tally(const JointDistribution &expected, const std::vector<std::uint64_t> &counts,
                      double tolerance_sigmas) {
    if (counts.size() != expected.assignment_count())
        throw std::invalid_argument("counts length must be 2^#vars");

    FrequencyReport report;
    report.tolerance_sigmas = tolerance_sigmas;
    for (std::uint64_t c : counts)
        report.trials += c;
    if (report.trials == 0)
        throw std::invalid_argument("at least one trial required");

    bool all_within = true;
    for (std::uint64_t a = 0; a < counts.size(); ++a) {
        OutcomeStat stat;
        stat.assignment = expected.assignment_bits(a);
        stat.expected = expected.prob(a);
        stat.observed_count = counts[a];
        stat.observed_freq = static_cast<double>(counts[a]) / static_cast<double>(report.trials);
        if (stat.expected == 0.0) {
            if (stat.observed_count > 0) {
                report.impossible_outcome = true;
                stat.z = std::numeric_limits<double>::infinity();
            }
        } else {
            const double se =
                std::sqrt(stat.expected * (1.0 - stat.expected) / static_cast<double>(report.trials));
            const double diff = stat.observed_freq - stat.expected;
            if (se == 0.0)
                stat.z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            else
                stat.z = diff / se;
            const double mean_count = stat.expected * static_cast<double>(report.trials);
            const double dev = static_cast<double>(stat.observed_count) - mean_count;
            report.chi_square += dev * dev / mean_count;
            if (std::abs(stat.z) > tolerance_sigmas)
                all_within = false;
        }
        report.outcomes.push_back(std::move(stat));
    }
    report.pass = all_within && !report.impossible_outcome;
    return report;
}

FrequencyReport run_trials(const ExperimentConfig &cfg) {
    cfg.validate();
    const JointDistribution dist = cfg.predicted_distribution();
    std::vector<std::uint64_t> counts(dist.assignment_count(), 0);
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        SplitMix64 stream(SplitMix64::at(cfg.seed, i));
        ++counts[dist.sample(stream)];
    }
    return tally(dist, counts, cfg.tolerance_sigmas);
}

} // namespace qmeas
