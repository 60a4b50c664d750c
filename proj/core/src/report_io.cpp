#include "qmeas/report_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace qmeas {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string frequency_report_csv(const FrequencyReport &report) {
    std::string out = "assignment,expected,observed_count,observed_freq,z\n";
    for (const auto &stat : report.outcomes) {
        out += stat.assignment;
        out += ',';
        out += format_double(stat.expected);
        out += ',';
        out += std::to_string(stat.observed_count);
        out += ',';
        out += format_double(stat.observed_freq);
        out += ',';
        out += format_double(stat.z);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json frequency_report_to_json(const FrequencyReport &report) {
    nlohmann::json j;
    j["trials"] = report.trials;
    j["tolerance_sigmas"] = report.tolerance_sigmas;
    j["chi_square"] = report.chi_square;
    j["impossible_outcome"] = report.impossible_outcome;
    j["pass"] = report.pass;
    j["outcomes"] = nlohmann::json::array();
    for (const auto &stat : report.outcomes) {
        j["outcomes"].push_back({{"assignment", stat.assignment},
                                 {"expected", stat.expected},
                                 {"observed_count", stat.observed_count},
                                 {"observed_freq", stat.observed_freq},
                                 {"z", stat.z}});
    }
    return j;
}

nlohmann::json trajectory_to_json(const std::vector<RhoTrajectoryPoint> &points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &pt : points) {
        nlohmann::json rho = nlohmann::json::array();
        for (int r = 0; r < 2; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < 2; ++c)
                row.push_back({pt.rho(r, c).real(), pt.rho(r, c).imag()});
            rho.push_back(std::move(row));
        }
        arr.push_back({{"s", pt.s}, {"gamma", pt.gamma}, {"rho", std::move(rho)}});
    }
    return nlohmann::json{{"points", std::move(arr)}};
}

} // namespace

std::string frequency_report_json(const FrequencyReport &report) {
    return frequency_report_to_json(report).dump(2) + "\n";
}

std::string trajectory_csv(const std::vector<RhoTrajectoryPoint> &points) {
    std::string out = "s,gamma,rho00_re,rho01_re,rho01_im,rho11_re\n";
    for (const auto &pt : points) {
        out += format_double(pt.s);
        out += ',';
        out += std::to_string(pt.gamma);
        out += ',';
        out += format_double(pt.rho(0, 0).real());
        out += ',';
        out += format_double(pt.rho(0, 1).real());
        out += ',';
        out += format_double(pt.rho(0, 1).imag());
        out += ',';
        out += format_double(pt.rho(1, 1).real());
        out += '\n';
    }
    return out;
}

std::string trajectory_json(const std::vector<RhoTrajectoryPoint> &points) {
    return trajectory_to_json(points).dump(2) + "\n";
}

std::string branched_state_json(const BranchedState &state,
                                const std::vector<std::vector<QubitLabel>> &reduced_keeps) {
    nlohmann::json j;
    j["register"] = nlohmann::json::array();
    for (const auto &q : state.reg().qubits())
        j["register"].push_back(q.name());
    j["distribution"] = nlohmann::json::parse(state.distribution().to_json_string());

    nlohmann::json branches = nlohmann::json::object();
    for (std::uint64_t a = 0; a < state.branch_count(); ++a) {
        nlohmann::json amps = nlohmann::json::array();
        const auto &v = state.branch(a).amplitudes();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            amps.push_back({v(i).real(), v(i).imag()});
        branches[state.distribution().assignment_bits(a)] = std::move(amps);
    }
    j["branches"] = std::move(branches);

    if (!reduced_keeps.empty()) {
        j["reduced"] = nlohmann::json::array();
        for (const auto &keep : reduced_keeps) {
            nlohmann::json block;
            block["keep"] = nlohmann::json::array();
            for (const auto &q : keep)
                block["keep"].push_back(q.name());
            nlohmann::json per_branch = nlohmann::json::object();
            for (std::uint64_t a = 0; a < state.branch_count(); ++a) {
                const DensityMatrix rho = partial_trace(state.branch(a), keep);
                nlohmann::json m = nlohmann::json::array();
                for (Eigen::Index r = 0; r < rho.matrix().rows(); ++r) {
                    nlohmann::json row = nlohmann::json::array();
                    for (Eigen::Index c = 0; c < rho.matrix().cols(); ++c)
                        row.push_back({rho.matrix()(r, c).real(), rho.matrix()(r, c).imag()});
                    m.push_back(std::move(row));
                }
                per_branch[state.distribution().assignment_bits(a)] = std::move(m);
            }
            block["branches"] = std::move(per_branch);
            j["reduced"].push_back(std::move(block));
        }
    }
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

void emit_report(const FrequencyReport &report, ReportFormat format,
                 const std::filesystem::path &path) {
    write_file(path, format == ReportFormat::kCsv ? frequency_report_csv(report)
                                                  : frequency_report_json(report));
}

void emit_report(const std::vector<RhoTrajectoryPoint> &points, ReportFormat format,
                 const std::filesystem::path &path) {
    write_file(path, format == ReportFormat::kCsv ? trajectory_csv(points)
                                                  : trajectory_json(points));
}

} // namespace qmeas
