#include "qmeas/permutation_gate.hpp"

#include <numeric>
#include <stdexcept>

namespace qmeas {

PermutationGate::PermutationGate(int width, std::vector<std::uint64_t> permutation)
    : width_(width), permutation_(std::move(permutation)) {
    if (width_ < 1 || width_ > 32)
        throw std::invalid_argument("gate width out of range");
    const std::uint64_t d = dim();
    if (permutation_.size() != d)
        throw std::invalid_argument("permutation length does not match gate width");
    std::vector<bool> seen(d, false);
    for (std::uint64_t image : permutation_) {
        if (image >= d || seen[image])
            throw std::invalid_argument("permutation is not a bijection on basis words");
        seen[image] = true;
    }
}

PermutationGate PermutationGate::identity(int width) {
    std::vector<std::uint64_t> perm(std::uint64_t{1} << width);
    std::iota(perm.begin(), perm.end(), std::uint64_t{0});
    return PermutationGate(width, std::move(perm));
}

std::uint64_t PermutationGate::map(std::uint64_t word) const {
    if (word >= dim())
        throw std::out_of_range("basis word out of range");
    return permutation_[word];
}

PermutationGate PermutationGate::inverse() const {
    std::vector<std::uint64_t> inv(permutation_.size());
    for (std::uint64_t i = 0; i < permutation_.size(); ++i)
        inv[permutation_[i]] = i;
    return PermutationGate(width_, std::move(inv));
}

PermutationGate PermutationGate::then(const PermutationGate &next) const {
    if (next.width_ != width_)
        throw std::invalid_argument("composed gates must have equal width");
    std::vector<std::uint64_t> composed(permutation_.size());
    for (std::uint64_t i = 0; i < permutation_.size(); ++i)
        composed[i] = next.permutation_[permutation_[i]];
    return PermutationGate(width_, std::move(composed));
}

PermutationGate PermutationGate::kron(const PermutationGate &high, const PermutationGate &low) {
    const int width = high.width_ + low.width_;
    const std::uint64_t low_dim = low.dim();
    std::vector<std::uint64_t> perm(std::uint64_t{1} << width);
    for (std::uint64_t h = 0; h < high.dim(); ++h)
        for (std::uint64_t l = 0; l < low_dim; ++l)
            perm[h * low_dim + l] = high.permutation_[h] * low_dim + low.permutation_[l];
    return PermutationGate(width, std::move(perm));
}

Eigen::MatrixXcd PermutationGate::matrix() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint64_t col = 0; col < dim(); ++col)
        m(static_cast<Eigen::Index>(permutation_[col]), static_cast<Eigen::Index>(col)) = 1.0;
    return m;
}

PermutationGate qubit_reorder(int width, const std::vector<int> &source_position) {
    if (static_cast<int>(source_position.size()) != width)
        throw std::invalid_argument("source_position length must equal width");
    std::vector<bool> used(static_cast<std::size_t>(width), false);
    for (int src : source_position) {
        if (src < 0 || src >= width || used[static_cast<std::size_t>(src)])
            throw std::invalid_argument("source_position is not a permutation of positions");
        used[static_cast<std::size_t>(src)] = true;
    }
    const std::uint64_t d = std::uint64_t{1} << width;
    std::vector<std::uint64_t> perm(d);
    for (std::uint64_t w = 0; w < d; ++w) {
        std::uint64_t out = 0;
        for (int k = 0; k < width; ++k) {
            const std::uint64_t b = (w >> (width - 1 - source_position[static_cast<std::size_t>(k)])) & 1u;
            out |= b << (width - 1 - k);
        }
        perm[w] = out;
    }
    return PermutationGate(width, std::move(perm));
}

PermutationGate reorder_gate(const Register &from, const Register &to) {
    if (from.size() != to.size())
        throw std::invalid_argument("reorder requires registers of equal size");
    std::vector<int> source_position;
    source_position.reserve(static_cast<std::size_t>(to.size()));
    for (int k = 0; k < to.size(); ++k)
        source_position.push_back(from.position_of(to.at(k)));
    return qubit_reorder(from.size(), source_position);
}

Ket apply(const PermutationGate &gate, const Ket &state) {
    if (gate.dim() != state.dim())
        throw std::invalid_argument("gate dimension does not match register dimension");
    Eigen::VectorXcd out(static_cast<Eigen::Index>(state.dim()));
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        out(static_cast<Eigen::Index>(gate.map(i))) = state.amplitudes()(static_cast<Eigen::Index>(i));
    return Ket(state.reg(), std::move(out));
}

} // namespace qmeas
