#include "qmeas/measurement_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmeas {

using std::numbers::pi;

Preparation::Preparation(std::complex<double> alpha, std::complex<double> beta)
    : alpha_(alpha), beta_(beta) {
    const double norm2 = std::norm(alpha_) + std::norm(beta_);
    if (std::abs(norm2 - 1.0) > kAlgebraTol)
        throw std::invalid_argument("preparation amplitudes must satisfy |a|^2 + |b|^2 = 1");
}

Ket Preparation::ket(const QubitLabel &qubit) const { return Ket::single(qubit, alpha_, beta_); }

JointDistribution Preparation::outcome_distribution() const {
    return JointDistribution({outcome_vars::gamma}, {std::norm(alpha_), std::norm(beta_)});
}

Ket SingletPreparation::ket() const { return rotated_singlet(phi_); }

JointDistribution SingletPreparation::outcome_distribution() const {
    return singlet_outcome_distribution(phi_);
}

ContinuousParams::ContinuousParams(double phase) : phase_(phase) {
    if (!(phase_ >= 0.0 && phase_ <= pi / 2))
        throw std::invalid_argument("phase must lie in [0, pi/2]");
}

Ket von_neumann_step(const Preparation &prep) {
    const Ket input = tensor(Ket::basis(Register({wires::p}), 0), prep.ket(wires::q));
    return apply(von_neumann_gate(), input);
}

BranchedState branched_measurement_input(const Preparation &prep) {
    const Ket rest = tensor(tensor(Ket::basis(Register({wires::p}), 0), prep.ket(wires::q)),
                            Ket::basis(Register({wires::a}), 0));
    return outcome_ancilla_state(prep.outcome_distribution()).map([&rest](const Ket &e_branch) {
        return tensor(e_branch, rest);
    });
}

BranchedState branched_measurement(const Preparation &prep, CompletionStrategy strategy) {
    return apply(measurement_gate(strategy), branched_measurement_input(prep));
}

Ket superposed_measurement_input(const Preparation &prep) {
    return tensor(tensor(tensor(prep.ket(wires::e), Ket::basis(Register({wires::p}), 0)),
                         prep.ket(wires::q)),
                  Ket::basis(Register({wires::a}), 0));
}

Ket superposed_measurement(const Preparation &prep, CompletionStrategy strategy) {
    return apply(measurement_gate(strategy), superposed_measurement_input(prep));
}

Eigen::Matrix2cd scaling_operator(const Preparation &prep, int gamma) {
    if (gamma != 0 && gamma != 1)
        throw std::invalid_argument("branch value must be 0 or 1");
    const std::complex<double> active = gamma == 0 ? prep.alpha() : prep.beta();
    if (active == 0.0)
        throw std::domain_error("scaling operator undefined: active branch amplitude is zero");
    Eigen::Matrix2cd op = Eigen::Matrix2cd::Zero();
    op(gamma, gamma) = 1.0 / active;
    return op;
}

BranchedState continuous_measurement(const Preparation &prep, const ContinuousParams &params) {
    const double c = std::cos(params.phase());
    const double s = std::sin(params.phase());
    const std::complex<double> a = prep.alpha();
    const std::complex<double> b = prep.beta();
    const Register reg = wires::epqa();

    // Branch 0 stays at pointer 0 while the |1>_q weight rotates into a;
    // branch 1 rotates the whole preparation toward the raised pointer.
    Eigen::VectorXcd amps0 = Eigen::VectorXcd::Zero(16);
    amps0(0b0000) = a;
    amps0(0b0010) = b * c;
    amps0(0b0001) = b * s;

    Eigen::VectorXcd amps1 = Eigen::VectorXcd::Zero(16);
    amps1(0b1000) = a * c;
    amps1(0b1010) = b * c;
    amps1(0b1110) = a * s;
    amps1(0b1111) = b * s;

    std::vector<Ket> branches;
    branches.emplace_back(reg, std::move(amps0));
    branches.emplace_back(reg, std::move(amps1));
    return BranchedState(prep.outcome_distribution(), std::move(branches));
}

DensityMatrix reduced_qubit_density(const Preparation &prep, const ContinuousParams &params,
                                    int gamma) {
    if (gamma != 0 && gamma != 1)
        throw std::invalid_argument("branch value must be 0 or 1");
    const BranchedState state = continuous_measurement(prep, params);
    return partial_trace(state.branch(static_cast<std::uint64_t>(gamma)), {wires::q});
}

DensityMatrix reduced_qubit_density_formula(const Preparation &prep,
                                            const ContinuousParams &params, int gamma) {
    if (gamma != 0 && gamma != 1)
        throw std::invalid_argument("branch value must be 0 or 1");
    const double c = std::cos(params.phase());
    const double s = std::sin(params.phase());
    const std::complex<double> a = prep.alpha();
    const std::complex<double> b = prep.beta();
    const double a2 = std::norm(a);
    const double b2 = std::norm(b);
    Eigen::Matrix2cd rho;
    if (gamma == 0) {
        rho << a2 + b2 * s * s, a * std::conj(b) * c, std::conj(a) * b * c, b2 * c * c;
    } else {
        rho << a2 * c * c, a * std::conj(b) * c * c, std::conj(a) * b * c * c, b2 * c * c + s * s;
    }
    return DensityMatrix(Register({wires::q}), rho);
}

Ket rotated_singlet(double phi) {
    const double c = std::cos(phi) / std::numbers::sqrt2;
    const double s = std::sin(phi) / std::numbers::sqrt2;
    Eigen::VectorXcd amps(4);
    amps << -s, c, -c, -s;
    return Ket(Register({wires::q1, wires::q2}), std::move(amps));
}

JointDistribution singlet_outcome_distribution(double phi) {
    const double half_sin2 = 0.5 * std::sin(phi) * std::sin(phi);
    const double half_cos2 = 0.5 * std::cos(phi) * std::cos(phi);
    return JointDistribution({outcome_vars::gamma1, outcome_vars::gamma2},
                             {half_sin2, half_cos2, half_cos2, half_sin2});
}

BranchedState pair_branched_measurement_input(const SingletPreparation &prep) {
    const Ket rest = tensor(tensor(Ket::basis(Register({wires::p1, wires::p2}), 0), prep.ket()),
                            Ket::basis(Register({wires::a1, wires::a2}), 0));
    return outcome_ancilla_pair(prep.outcome_distribution()).map([&rest](const Ket &e_branch) {
        return tensor(e_branch, rest);
    });
}

BranchedState pair_branched_measurement(const SingletPreparation &prep,
                                        CompletionStrategy strategy) {
    return apply(pair_measurement_gate(strategy), pair_branched_measurement_input(prep));
}

std::vector<RhoTrajectoryPoint> rho_trajectory(const Preparation &prep,
                                               const std::vector<double> &s_grid) {
    std::vector<RhoTrajectoryPoint> points;
    points.reserve(s_grid.size() * 2);
    for (double s : s_grid) {
        const ContinuousParams params(s);
        for (int gamma = 0; gamma < 2; ++gamma) {
            const DensityMatrix rho = reduced_qubit_density(prep, params, gamma);
            points.push_back({s, gamma, Eigen::Matrix2cd(rho.matrix())});
        }
    }
    return points;
}

std::vector<double> phase_grid(int points) {
    if (points < 2)
        throw std::invalid_argument("phase grid needs at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = (pi / 2) * i / (points - 1);
    return grid;
}

} // namespace qmeas
