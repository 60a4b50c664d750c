#pragma once

#include <Eigen/Dense>

#include "qmeas/ket.hpp"
#include "qmeas/qubit.hpp"

namespace qmeas {

/**
 * Hermitian trace-1 matrix on a labeled subregister. Construction checks
 * Hermiticity and unit trace within 1e-12; positive semidefiniteness is a
 * class invariant of every value produced by partial_trace and can be probed
 * with min_eigenvalue().
 */
class DensityMatrix {
  public:
    DensityMatrix(Register reg, Eigen::MatrixXcd matrix);

    /// |state><state| on the full register.
    static DensityMatrix pure(const Ket &state);

    const Register &reg() const noexcept { return reg_; }
    const Eigen::MatrixXcd &matrix() const noexcept { return matrix_; }

    /// Smallest eigenvalue (self-adjoint solve); >= -1e-10 for valid states.
    double min_eigenvalue() const;

  private:
    Register reg_;
    Eigen::MatrixXcd matrix_;
};

/**
 * Reduced density matrix of the qubits in `keep`, tracing out the rest.
 * The result register preserves the source register's order. Throws on an
 * empty keep set or a label not present in the state's register.
 */
DensityMatrix partial_trace(const Ket &state, const std::vector<QubitLabel> &keep);
DensityMatrix partial_trace(const DensityMatrix &state, const std::vector<QubitLabel> &keep);

} // namespace qmeas
