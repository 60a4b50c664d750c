#include "qmeas/stochastic.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qmeas/ket.hpp" // kAlgebraTol
#include "qmeas/qubit.hpp"

namespace qmeas {

GammaVar::GammaVar(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw std::invalid_argument("outcome variable name must not be empty");
}

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * kGolden);
}

JointDistribution::JointDistribution(std::vector<GammaVar> vars, std::vector<double> probs)
    : vars_(std::move(vars)), probs_(std::move(probs)) {
    if (vars_.empty() || vars_.size() > 62)
        throw std::invalid_argument("distribution needs between 1 and 62 variables");
    std::set<GammaVar> seen;
    for (const auto &v : vars_)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate outcome variable: " + v.name());
    if (probs_.size() != assignment_count())
        throw std::invalid_argument("probability vector length must be 2^#vars");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0))
            throw std::invalid_argument("probabilities must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kAlgebraTol)
        throw std::invalid_argument("probabilities must sum to 1");
}

JointDistribution JointDistribution::bernoulli(GammaVar var, double p_one) {
    return JointDistribution({std::move(var)}, {1.0 - p_one, p_one});
}

double JointDistribution::prob(std::uint64_t assignment) const {
    if (assignment >= assignment_count())
        throw std::out_of_range("assignment word out of range");
    return probs_[assignment];
}

int JointDistribution::var_index(const std::string &name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name() == name)
            return static_cast<int>(i);
    throw std::invalid_argument("unknown outcome variable: " + name);
}

bool JointDistribution::matches(std::uint64_t assignment, const Event &event) const {
    for (const auto &[name, value] : event) {
        const int idx = var_index(name);
        const int bit = static_cast<int>((assignment >> (var_count() - 1 - idx)) & 1u);
        if (bit != value)
            return false;
    }
    return true;
}

double JointDistribution::probability(const Event &event) const {
    for (const auto &[name, value] : event) {
        var_index(name); // validate
        if (value != 0 && value != 1)
            throw std::invalid_argument("outcome variable values are 0 or 1");
    }
    double sum = 0.0;
    for (std::uint64_t a = 0; a < assignment_count(); ++a)
        if (matches(a, event))
            sum += probs_[a];
    return sum;
}

double JointDistribution::conditional(const Event &target, const Event &given) const {
    const double denom = probability(given);
    if (denom == 0.0)
        throw std::domain_error("conditioning on a zero-probability event");
    Event both = target;
    both.insert(both.end(), given.begin(), given.end());
    return probability(both) / denom;
}

std::uint64_t JointDistribution::sample(SplitMix64 &rng) const {
    const double u = rng.next_double();
    double cum = 0.0;
    std::uint64_t last_positive = 0;
    bool any_positive = false;
    for (std::uint64_t a = 0; a < assignment_count(); ++a) {
        if (probs_[a] > 0.0) {
            last_positive = a;
            any_positive = true;
        }
        cum += probs_[a];
        if (u < cum)
            return a;
    }
    // u fell past the accumulated mass (rounding); never return a
    // zero-probability assignment.
    if (!any_positive)
        throw std::logic_error("distribution has no positive-probability assignment");
    return last_positive;
}

std::string JointDistribution::assignment_bits(std::uint64_t assignment) const {
    return word_bits(assignment, var_count());
}

std::string JointDistribution::to_json_string() const {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (const auto &v : vars_)
        j["vars"].push_back(v.name());
    nlohmann::json probs = nlohmann::json::object();
    for (std::uint64_t a = 0; a < assignment_count(); ++a)
        probs[assignment_bits(a)] = probs_[a];
    j["probs"] = std::move(probs);
    return j.dump();
}

JointDistribution JointDistribution::from_json_string(const std::string &text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<GammaVar> vars;
    for (const auto &name : j.at("vars"))
        vars.emplace_back(name.get<std::string>());
    std::vector<double> probs(std::size_t{1} << vars.size(), 0.0);
    for (const auto &[bits, p] : j.at("probs").items()) {
        if (bits.size() != vars.size())
            throw std::invalid_argument("assignment bit string has wrong length: " + bits);
        probs.at(parse_word_bits(bits)) = p.get<double>();
    }
    return JointDistribution(std::move(vars), std::move(probs));
}

} // namespace qmeas
