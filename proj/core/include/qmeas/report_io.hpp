#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qmeas/branched_state.hpp"
#include "qmeas/measurement_model.hpp"
#include "qmeas/monte_carlo.hpp"

namespace qmeas {

enum class ReportFormat { kCsv, kJson };

/// One double as text with 17 significant digits.
std::string format_double(double value);

/// Columns: assignment,expected,observed_count,observed_freq,z.
std::string frequency_report_csv(const FrequencyReport &report);
std::string frequency_report_json(const FrequencyReport &report);

/// Columns: s,gamma,rho00_re,rho01_re,rho01_im,rho11_re. Two rows per grid
/// point, one per branch.
std::string trajectory_csv(const std::vector<RhoTrajectoryPoint> &points);
std::string trajectory_json(const std::vector<RhoTrajectoryPoint> &points);

/**
 * Scenario output as JSON: branch assignments with per-branch amplitude
 * [re, im] pairs, the joint distribution, and one reduced-density block per
 * requested keep set.
 */
std::string branched_state_json(const BranchedState &state,
                                const std::vector<std::vector<QubitLabel>> &reduced_keeps = {});

/// Write `content` to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path &path, const std::string &content);

void emit_report(const FrequencyReport &report, ReportFormat format,
                 const std::filesystem::path &path);
void emit_report(const std::vector<RhoTrajectoryPoint> &points, ReportFormat format,
                 const std::filesystem::path &path);

} // namespace qmeas
