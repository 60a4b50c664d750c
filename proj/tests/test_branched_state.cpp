#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qmeas/branched_state.hpp"
#include "qmeas/measurement_gates.hpp"
#include "test_helpers.hpp"

using namespace qmeas;
using wires::e;
using wires::e1;
using wires::e2;

namespace {
const GammaVar gvar{"gvar"};
const GammaVar gvar1{"gvar1"};
const GammaVar gvar2{"gvar2"};
} // namespace

TEST_CASE("outcome ancilla branches are the basis states of e") {
    const auto s = outcome_ancilla_state(JointDistribution::bernoulli(gvar, 0.64));
    CHECK(s.branch(0).amplitude(0) == std::complex<double>(1.0));
    CHECK(s.branch(1).amplitude(1) == std::complex<double>(1.0));
    CHECK(s.branch(0).normalized());
    CHECK(s.branch(1).normalized());
}

TEST_CASE("a forced distribution keeps a single effective branch") {
    const auto s = outcome_ancilla_state(JointDistribution::bernoulli(gvar, 1.0));
    CHECK(s.distribution().prob(1) == 1.0);
    CHECK(s.distribution().prob(0) == 0.0);
    CHECK(s.branch(1).amplitude(1) == std::complex<double>(1.0));
}

TEST_CASE("outcome ancilla state requires exactly one variable") {
    const JointDistribution two({gvar1, gvar2}, {0.25, 0.25, 0.25, 0.25});
    CHECK_THROWS_AS(outcome_ancilla_state(two), std::invalid_argument);
    CHECK_THROWS_AS(outcome_ancilla_pair(JointDistribution::bernoulli(gvar, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("ancilla pair branches are the four basis words of (e1, e2)") {
    const JointDistribution d({gvar1, gvar2}, {0.25, 0.25, 0.25, 0.25});
    const auto s = outcome_ancilla_pair(d);
    CHECK(s.branch(0b10).amplitude(0b10) == std::complex<double>(1.0));
    CHECK(s.branch(0b00).amplitude(0b00) == std::complex<double>(1.0));
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j)
            if (i != j)
                CHECK(std::abs(inner(s.branch(i), s.branch(j))) == 0.0);
}

TEST_CASE("branch kets must be unit norm") {
    Eigen::VectorXcd half(2);
    half << 0.5, 0.5;
    std::vector<Ket> branches{Ket::basis(Register({e}), 0), Ket(Register({e}), half)};
    CHECK_THROWS_AS(BranchedState(JointDistribution::bernoulli(gvar, 0.5), std::move(branches)),
                    std::invalid_argument);
}

TEST_CASE("gvar averaging reproduces the expected mixed state of e") {
    const double beta2 = 0.64;
    const auto s = outcome_ancilla_state(JointDistribution::bernoulli(gvar, beta2));
    const DensityMatrix rho = average_over_outcomes(s, {e});
    Eigen::Matrix2cd expected;
    expected << 1.0 - beta2, 0.0, 0.0, beta2;
    CHECK(test::max_abs_diff(rho.matrix(), expected) <= kAlgebraTol);
}

TEST_CASE("point-mass averaging is the projector of the forced branch") {
    const auto s = outcome_ancilla_state(JointDistribution::bernoulli(gvar, 1.0));
    const DensityMatrix rho = average_over_outcomes(s, {e});
    Eigen::Matrix2cd expected;
    expected << 0.0, 0.0, 0.0, 1.0;
    CHECK(test::max_abs_diff(rho.matrix(), expected) == 0.0);
}

TEST_CASE("a phase on one branch disappears in the averaged density matrix") {
    const double beta2 = 0.36;
    const auto s = outcome_ancilla_state(JointDistribution::bernoulli(gvar, beta2));
    for (double delta : {0.3, 1.1, std::numbers::pi / 2, 2.7}) {
        const std::complex<double> phase = std::exp(std::complex<double>(0.0, delta));
        const auto phased = BranchedState(
            s.distribution(),
            {s.branch(0), Ket(s.branch(1).reg(), phase * s.branch(1).amplitudes())});
        CHECK(test::max_abs_diff(average_over_outcomes(phased, {e}).matrix(),
                                 average_over_outcomes(s, {e}).matrix()) <= kAlgebraTol);
    }
}

TEST_CASE("averaging with a point mass equals the branch partial trace") {
    // Linearity in the distribution, probed at each vertex.
    const JointDistribution quarter({gvar1, gvar2}, {0.25, 0.25, 0.25, 0.25});
    const auto s = outcome_ancilla_pair(quarter);
    for (std::uint64_t forced = 0; forced < 4; ++forced) {
        std::vector<double> probs(4, 0.0);
        probs[forced] = 1.0;
        const BranchedState point(JointDistribution({gvar1, gvar2}, probs),
                                  {s.branch(0), s.branch(1), s.branch(2), s.branch(3)});
        const DensityMatrix averaged = average_over_outcomes(point, {e1});
        const DensityMatrix direct = partial_trace(point.substitute({{"gvar1", static_cast<int>(forced >> 1)},
                                                                     {"gvar2", static_cast<int>(forced & 1)}}),
                                                   {e1});
        CHECK(test::max_abs_diff(averaged.matrix(), direct.matrix()) <= kAlgebraTol);
    }
}

TEST_CASE("substitute requires a complete assignment") {
    const JointDistribution d({gvar1, gvar2}, {0.25, 0.25, 0.25, 0.25});
    const auto s = outcome_ancilla_pair(d);
    CHECK_THROWS_AS(s.substitute({{"gvar1", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(s.substitute({{"gvar1", 1}, {"other", 0}}), std::invalid_argument);
    const Ket &b = s.substitute({{"gvar1", 1}, {"gvar2", 0}});
    CHECK(b.amplitude(0b10) == std::complex<double>(1.0));
}
