#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "qmeas/qubit.hpp"

namespace qmeas {

/// Absolute tolerance used for exact-algebra checks.
inline constexpr double kAlgebraTol = 1e-12;

/**
 * Complex amplitude vector over the computational basis of a labeled
 * register. Basis index i assigns bit (i >> (n-1-k)) & 1 to the qubit at
 * register position k.
 *
 * A ket is labeled normalized when its squared norm is 1 within 1e-12 at
 * construction; intermediates that fail this carry normalized() == false.
 */
class Ket {
  public:
    Ket(Register reg, Eigen::VectorXcd amplitudes);

    /// Basis state |word> on `reg`.
    static Ket basis(Register reg, std::uint64_t word);
    /// Single-qubit state a0|0> + a1|1>.
    static Ket single(QubitLabel qubit, std::complex<double> a0, std::complex<double> a1);

    const Register &reg() const noexcept { return reg_; }
    const Eigen::VectorXcd &amplitudes() const noexcept { return amplitudes_; }
    std::complex<double> amplitude(std::uint64_t word) const;
    std::uint64_t dim() const noexcept { return static_cast<std::uint64_t>(amplitudes_.size()); }

    double squared_norm() const { return amplitudes_.squaredNorm(); }
    bool normalized() const noexcept { return normalized_; }

  private:
    Register reg_;
    Eigen::VectorXcd amplitudes_;
    bool normalized_;
};

/**
 * Kronecker product; the resulting register is lhs then rhs, lhs qubits more
 * significant. Throws on a qubit label common to both registers.
 */
Ket tensor(const Ket &lhs, const Ket &rhs);

/// Apply a dense operator; throws on dimension mismatch. The result is not
/// normalized in general (the operator need not be unitary).
Ket apply_operator(const Eigen::MatrixXcd &op, const Ket &state);

/// <lhs|rhs>; registers must match.
std::complex<double> inner(const Ket &lhs, const Ket &rhs);

/**
 * Extend a single-qubit operator to the full register of `reg` by tensoring
 * identities on every other qubit.
 */
Eigen::MatrixXcd embed_one_qubit_op(const Eigen::Matrix2cd &op, const Register &reg,
                                    const QubitLabel &target);

} // namespace qmeas
