#include "qmeas/ket.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeas {

Ket::Ket(Register reg, Eigen::VectorXcd amplitudes)
    : reg_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::uint64_t>(amplitudes_.size()) != reg_.dim())
        throw std::invalid_argument("amplitude vector length does not match register dimension");
    normalized_ = std::abs(amplitudes_.squaredNorm() - 1.0) <= kAlgebraTol;
}

Ket Ket::basis(Register reg, std::uint64_t word) {
    if (word >= reg.dim())
        throw std::invalid_argument("basis word out of range for register " + reg.str());
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.dim()));
    amps(static_cast<Eigen::Index>(word)) = 1.0;
    return Ket(std::move(reg), std::move(amps));
}

Ket Ket::single(QubitLabel qubit, std::complex<double> a0, std::complex<double> a1) {
    Eigen::VectorXcd amps(2);
    amps << a0, a1;
    return Ket(Register({std::move(qubit)}), std::move(amps));
}

std::complex<double> Ket::amplitude(std::uint64_t word) const {
    if (word >= dim())
        throw std::out_of_range("basis word out of range");
    return amplitudes_(static_cast<Eigen::Index>(word));
}

Ket tensor(const Ket &lhs, const Ket &rhs) {
    Register reg = Register::concat(lhs.reg(), rhs.reg());
    const auto dl = static_cast<Eigen::Index>(lhs.dim());
    const auto dr = static_cast<Eigen::Index>(rhs.dim());
    Eigen::VectorXcd amps(dl * dr);
    for (Eigen::Index i = 0; i < dl; ++i)
        amps.segment(i * dr, dr) = lhs.amplitudes()(i) * rhs.amplitudes();
    return Ket(std::move(reg), std::move(amps));
}

Ket apply_operator(const Eigen::MatrixXcd &op, const Ket &state) {
    const auto d = static_cast<Eigen::Index>(state.dim());
    if (op.rows() != d || op.cols() != d)
        throw std::invalid_argument("operator dimension does not match register dimension");
    return Ket(state.reg(), op * state.amplitudes());
}

std::complex<double> inner(const Ket &lhs, const Ket &rhs) {
    if (lhs.reg() != rhs.reg())
        throw std::invalid_argument("inner product requires matching registers");
    return lhs.amplitudes().dot(rhs.amplitudes());
}

Eigen::MatrixXcd embed_one_qubit_op(const Eigen::Matrix2cd &op, const Register &reg,
                                    const QubitLabel &target) {
    const int pos = reg.position_of(target);
    const auto dim = static_cast<Eigen::Index>(reg.dim());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t col = 0; col < reg.dim(); ++col) {
        const int b = reg.bit(col, pos);
        for (int r = 0; r < 2; ++r) {
            const std::complex<double> v = op(r, b);
            if (v == 0.0)
                continue;
            const std::uint64_t row = reg.with_bit(col, pos, r);
            full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
        }
    }
    return full;
}

} // namespace qmeas
