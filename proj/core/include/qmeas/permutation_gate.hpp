#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qmeas/ket.hpp"
#include "qmeas/qubit.hpp"

namespace qmeas {

/**
 * Bijection on the 2^n basis words of an n-qubit register, acting as a
 * unitary 0/1 matrix: column i carries its 1 in row map(i).
 */
class PermutationGate {
  public:
    /// `permutation[i]` is the image of basis word i; must be a bijection.
    PermutationGate(int width, std::vector<std::uint64_t> permutation);

    static PermutationGate identity(int width);

    int width() const noexcept { return width_; }
    std::uint64_t dim() const noexcept { return std::uint64_t{1} << width_; }
    std::uint64_t map(std::uint64_t word) const;

    PermutationGate inverse() const;
    /// Composition: first this gate, then `next`.
    PermutationGate then(const PermutationGate &next) const;

    /// Tensor product; `*this` acts on the more significant qubits.
    static PermutationGate kron(const PermutationGate &high, const PermutationGate &low);

    /// Dense 0/1 matrix representation.
    Eigen::MatrixXcd matrix() const;

    bool operator==(const PermutationGate &) const = default;

  private:
    int width_;
    std::vector<std::uint64_t> permutation_;
};

/**
 * Relabeling gate that moves the qubit at `source_position[k]` to position k.
 * Basis word w maps to w' with bit_k(w') = bit_{source_position[k]}(w).
 */
PermutationGate qubit_reorder(int width, const std::vector<int> &source_position);

/// Reorder gate mapping basis words of `from` to basis words of `to`
/// (same labels, possibly different order).
PermutationGate reorder_gate(const Register &from, const Register &to);

/// Apply by amplitude relocation; exact (no arithmetic on amplitudes).
Ket apply(const PermutationGate &gate, const Ket &state);

} // namespace qmeas
