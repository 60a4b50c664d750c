#pragma once

#include <complex>
#include <vector>

#include "qmeas/branched_state.hpp"
#include "qmeas/density_matrix.hpp"
#include "qmeas/ket.hpp"
#include "qmeas/measurement_gates.hpp"
#include "qmeas/stochastic.hpp"

namespace qmeas {

/// Outcome variable names used by the scenarios.
namespace outcome_vars {
inline const GammaVar gamma{"gamma"};
inline const GammaVar gamma1{"gamma1"};
inline const GammaVar gamma2{"gamma2"};
} // namespace outcome_vars

/**
 * Pre-measurement state a|0>_q + b|1>_q of one qubit, written in the basis
 * of the immediately following measurement.
 */
class Preparation {
  public:
    /// Requires |a|^2 + |b|^2 = 1 within 1e-12.
    Preparation(std::complex<double> alpha, std::complex<double> beta);

    std::complex<double> alpha() const noexcept { return alpha_; }
    std::complex<double> beta() const noexcept { return beta_; }

    /// The preparation as a ket on `qubit`.
    Ket ket(const QubitLabel &qubit) const;

    /// Born-rule outcome distribution: p(0) = |a|^2, p(1) = |b|^2.
    JointDistribution outcome_distribution() const;

  private:
    std::complex<double> alpha_;
    std::complex<double> beta_;
};

/// Singlet pair with one measurement reference rotated by phi.
class SingletPreparation {
  public:
    explicit SingletPreparation(double phi) : phi_(phi) {}

    double phi() const noexcept { return phi_; }

    /// (-sin phi |00> + cos phi |01> - cos phi |10> - sin phi |11>) / sqrt(2)
    /// on (q1, q2); the plain singlet at phi = 0.
    Ket ket() const;

    /// Joint outcome distribution: p(0,0) = p(1,1) = sin^2(phi)/2,
    /// p(0,1) = p(1,0) = cos^2(phi)/2.
    JointDistribution outcome_distribution() const;

  private:
    double phi_;
};

/// Dimensionless phase s = omega*t of the continuous model, in [0, pi/2].
class ContinuousParams {
  public:
    explicit ContinuousParams(double phase);

    double phase() const noexcept { return phase_; }

  private:
    double phase_;
};

/**
 * Baseline pointer-entangling step on (p, q):
 * |0>_p (a|0> + b|1>)_q -> a|00> + b|11>.
 */
Ket von_neumann_step(const Preparation &prep);

/**
 * The unified measurement transition on (e, p, q, a): the measurement gate
 * applied branch-wise to psi_e x |0>_p x prep_q x |0>_a. Branch x of the
 * output is |x>_e |x>_p |x>_q (a|0> + b|1>)_a, weighted by the Born rule,
 * so the pointer and qubit read the sampled outcome while a keeps memory of
 * the preparation.
 */
BranchedState branched_measurement(const Preparation &prep,
                                   CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

/// Input family of branched_measurement (before the gate).
BranchedState branched_measurement_input(const Preparation &prep);

/**
 * The directly comparable fully-dynamical transition: the same gate applied
 * to (a|0> + b|1>)_e x |0>_p x prep_q x |0>_a, giving
 * (a|000> + b|111>)_{e,p,q} (a|0> + b|1>)_a.
 */
Ket superposed_measurement(const Preparation &prep,
                           CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

/// Input of superposed_measurement.
Ket superposed_measurement_input(const Preparation &prep);

/**
 * Branch-wise scaling operator on qubit e relating the superposed transition
 * to branch `gamma` of the branched one: gamma = 0 rescales the |0><0|
 * projector by 1/a, gamma = 1 rescales |1><1| by 1/b. Throws when the active
 * branch amplitude is zero. Non-unitary; commutes exactly with any gate that
 * never changes the e bit.
 */
Eigen::Matrix2cd scaling_operator(const Preparation &prep, int gamma);

/**
 * Continuous interpolation of the branched transition at phase s: branch 0
 * rotates the |1>_q weight into the memory ancilla, branch 1 rotates toward
 * the raised pointer. At s = 0 it equals the branched input, at s = pi/2 the
 * branched output; every branch stays unit norm for all s.
 */
BranchedState continuous_measurement(const Preparation &prep, const ContinuousParams &params);

/// Reduced state of q in branch `gamma` at phase s, by partial trace over
/// (e, p, a) of continuous_measurement.
DensityMatrix reduced_qubit_density(const Preparation &prep, const ContinuousParams &params,
                                    int gamma);

/// Same matrix from the closed-form expressions; independent algebraic route
/// kept alongside the partial-trace computation so the two can be checked
/// against each other.
DensityMatrix reduced_qubit_density_formula(const Preparation &prep,
                                            const ContinuousParams &params, int gamma);

/// Rotated singlet preparation on (q1, q2).
Ket rotated_singlet(double phi);

/// Outcome distribution of measuring both singlet qubits.
JointDistribution singlet_outcome_distribution(double phi);

/**
 * Measurement of both singlet qubits on the 8-qubit register
 * (e1,e2,p1,p2,q1,q2,a1,a2): the pair gate applied branch-wise to
 * psi_{e1,e2} x |00>_p x singlet(phi)_q x |00>_a. Branch (x, y) of the
 * output reads |x>_e1 |y>_e2 |x>_p1 |y>_p2 |x>_q1 |y>_q2 with the rotated
 * singlet moved onto (a1, a2).
 */
BranchedState pair_branched_measurement(const SingletPreparation &prep,
                                        CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

/// Input family of pair_branched_measurement.
BranchedState pair_branched_measurement_input(const SingletPreparation &prep);

/// One point of a reduced-density trajectory.
struct RhoTrajectoryPoint {
    double s;
    int gamma;
    Eigen::Matrix2cd rho;
};

/// Reduced q densities (partial-trace route) over a phase grid, gamma-major
/// within each grid point: (s0,0), (s0,1), (s1,0), ...
std::vector<RhoTrajectoryPoint> rho_trajectory(const Preparation &prep,
                                               const std::vector<double> &s_grid);

/// n evenly spaced phases covering [0, pi/2]; n >= 2.
std::vector<double> phase_grid(int points);

} // namespace qmeas
