#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qmeas {

/// {0,1}-valued outcome variable; its complement is 1 - value.
class GammaVar {
  public:
    explicit GammaVar(std::string name);

    const std::string &name() const noexcept { return name_; }

    auto operator<=>(const GammaVar &) const = default;

  private:
    std::string name_;
};

/// Partial assignment of outcome variables: (variable name, 0/1 value).
using Event = std::vector<std::pair<std::string, int>>;

/**
 * Fixed-sequence 64-bit generator (SplitMix64). The output sequence depends
 * only on the seed, never on the platform, which is what makes Monte Carlo
 * runs byte-reproducible.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// The value a fresh SplitMix64(seed) would produce as its (index+1)-th
    /// output; O(1), used to give every Monte Carlo trial its own counter-
    /// derived draw.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

/**
 * Joint probability distribution over an ordered list of outcome variables.
 * Assignments are packed into words: variable 0 is the most significant bit,
 * matching register word order.
 */
class JointDistribution {
  public:
    /// `probs[word]` is the probability of that assignment; must be
    /// non-negative and sum to 1 within 1e-12.
    JointDistribution(std::vector<GammaVar> vars, std::vector<double> probs);

    /// Point mass on |0> vs |1> of a single variable: p(1) = p_one.
    static JointDistribution bernoulli(GammaVar var, double p_one);

    const std::vector<GammaVar> &vars() const noexcept { return vars_; }
    int var_count() const noexcept { return static_cast<int>(vars_.size()); }
    std::uint64_t assignment_count() const noexcept { return std::uint64_t{1} << vars_.size(); }

    double prob(std::uint64_t assignment) const;
    const std::vector<double> &probs() const noexcept { return probs_; }

    /// Probability of a partial assignment (marginalization).
    double probability(const Event &event) const;
    /// P(target | given); throws when the conditioning event has
    /// probability zero.
    double conditional(const Event &target, const Event &given) const;

    /// Draw one full assignment by inverse CDF; consumes one uniform.
    std::uint64_t sample(SplitMix64 &rng) const;

    /// Assignment word of variable index -> bit string, e.g. "01".
    std::string assignment_bits(std::uint64_t assignment) const;

    std::string to_json_string() const;
    static JointDistribution from_json_string(const std::string &text);

    bool operator==(const JointDistribution &) const = default;

  private:
    int var_index(const std::string &name) const;
    bool matches(std::uint64_t assignment, const Event &event) const;

    std::vector<GammaVar> vars_;
    std::vector<double> probs_;
};

} // namespace qmeas
