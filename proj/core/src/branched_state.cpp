#include "qmeas/branched_state.hpp"

#include <stdexcept>

#include "qmeas/measurement_gates.hpp"

namespace qmeas {

BranchedState::BranchedState(JointDistribution dist, std::vector<Ket> branches)
    : dist_(std::move(dist)), branches_(std::move(branches)) {
    if (branches_.size() != dist_.assignment_count())
        throw std::invalid_argument("need one branch ket per assignment");
    const Register &reg = branches_.front().reg();
    for (const auto &b : branches_) {
        if (b.reg() != reg)
            throw std::invalid_argument("branch kets must share one register");
        if (!b.normalized())
            throw std::invalid_argument("branch kets must be unit norm");
    }
}

const Ket &BranchedState::branch(std::uint64_t assignment) const {
    if (assignment >= branches_.size())
        throw std::out_of_range("assignment word out of range");
    return branches_[assignment];
}

const Ket &BranchedState::substitute(const Event &assignment) const {
    std::vector<bool> covered(static_cast<std::size_t>(dist_.var_count()), false);
    std::uint64_t word = 0;
    for (const auto &[name, value] : assignment) {
        if (value != 0 && value != 1)
            throw std::invalid_argument("outcome variable values are 0 or 1");
        int idx = -1;
        for (int i = 0; i < dist_.var_count(); ++i)
            if (dist_.vars()[static_cast<std::size_t>(i)].name() == name)
                idx = i;
        if (idx < 0)
            throw std::invalid_argument("unknown outcome variable: " + name);
        covered[static_cast<std::size_t>(idx)] = true;
        if (value)
            word |= std::uint64_t{1} << (dist_.var_count() - 1 - idx);
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i])
            throw std::invalid_argument("assignment does not cover variable " +
                                        dist_.vars()[i].name());
    return branch(word);
}

BranchedState BranchedState::map(const std::function<Ket(const Ket &)> &f) const {
    std::vector<Ket> mapped;
    mapped.reserve(branches_.size());
    for (const auto &b : branches_)
        mapped.push_back(f(b));
    return BranchedState(dist_, std::move(mapped));
}

BranchedState apply(const PermutationGate &gate, const BranchedState &state) {
    return state.map([&gate](const Ket &k) { return apply(gate, k); });
}

DensityMatrix average_over_outcomes(const BranchedState &state,
                                    const std::vector<QubitLabel> &keep) {
    Eigen::MatrixXcd acc;
    Register out_reg;
    for (std::uint64_t a = 0; a < state.branch_count(); ++a) {
        const DensityMatrix reduced = partial_trace(state.branch(a), keep);
        if (acc.size() == 0) {
            out_reg = reduced.reg();
            acc = Eigen::MatrixXcd::Zero(reduced.matrix().rows(), reduced.matrix().cols());
        }
        acc += state.distribution().prob(a) * reduced.matrix();
    }
    return DensityMatrix(std::move(out_reg), std::move(acc));
}

BranchedState outcome_ancilla_state(const JointDistribution &dist) {
    if (dist.var_count() != 1)
        throw std::invalid_argument("outcome ancilla state requires exactly one variable");
    std::vector<Ket> branches;
    branches.push_back(Ket::basis(Register({wires::e}), 0));
    branches.push_back(Ket::basis(Register({wires::e}), 1));
    return BranchedState(dist, std::move(branches));
}

BranchedState outcome_ancilla_pair(const JointDistribution &dist) {
    if (dist.var_count() != 2)
        throw std::invalid_argument("outcome ancilla pair requires exactly two variables");
    const Register reg({wires::e1, wires::e2});
    std::vector<Ket> branches;
    for (std::uint64_t word = 0; word < 4; ++word)
        branches.push_back(Ket::basis(reg, word));
    return BranchedState(dist, std::move(branches));
}

} // namespace qmeas
