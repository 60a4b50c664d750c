#pragma once

#include <functional>
#include <vector>

#include "qmeas/density_matrix.hpp"
#include "qmeas/ket.hpp"
#include "qmeas/permutation_gate.hpp"
#include "qmeas/stochastic.hpp"

namespace qmeas {

/**
 * Family of kets indexed by full assignments of the outcome variables,
 * together with the joint distribution over those assignments. Each
 * assignment selects one coherent history; the distribution carries the
 * randomness, so every branch ket must be unit norm. An assignment may have
 * probability zero and still keep its branch (degenerate preparations).
 */
class BranchedState {
  public:
    /// `branches[word]` is the ket of that assignment. All branches share
    /// one register and must be normalized.
    BranchedState(JointDistribution dist, std::vector<Ket> branches);

    const JointDistribution &distribution() const noexcept { return dist_; }
    const Register &reg() const { return branches_.front().reg(); }
    std::uint64_t branch_count() const noexcept { return branches_.size(); }

    const Ket &branch(std::uint64_t assignment) const;

    /// Branch selected by a named assignment; the event must cover every
    /// variable ("substitute the sampled values everywhere").
    const Ket &substitute(const Event &assignment) const;

    /// Apply `f` to every branch; the distribution is unchanged.
    BranchedState map(const std::function<Ket(const Ket &)> &f) const;

    bool operator==(const BranchedState &) const = default;

  private:
    JointDistribution dist_;
    std::vector<Ket> branches_;
};

/// Gate applied branch-wise.
BranchedState apply(const PermutationGate &gate, const BranchedState &state);

/**
 * Probability-weighted average of the branches' reduced density matrices:
 * sum over assignments of p(assignment) * partial_trace(branch, keep).
 * This is the conventional density matrix; mutual exclusivity between the
 * branches is no longer visible in it.
 */
DensityMatrix average_over_outcomes(const BranchedState &state,
                                    const std::vector<QubitLabel> &keep);

/**
 * Input state family of the outcome ancilla e: branch 0 is |0>_e, branch 1
 * is |1>_e, weighted by `dist`. Requires exactly one variable.
 */
BranchedState outcome_ancilla_state(const JointDistribution &dist);

/// Two-variable analogue on (e1, e2): branch (x, y) is |x>_e1 |y>_e2.
BranchedState outcome_ancilla_pair(const JointDistribution &dist);

} // namespace qmeas
