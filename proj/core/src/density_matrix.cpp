#include "qmeas/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeas {

namespace {

// Split the register into kept and traced positions (register order), and
// return a scatter table: full_index(keep_word, rest_word).
struct TraceIndexing {
    std::vector<int> keep_positions;
    std::vector<int> rest_positions;
    std::uint64_t keep_dim = 1;
    std::uint64_t rest_dim = 1;
    int width = 0;

    std::uint64_t full_index(std::uint64_t keep_word, std::uint64_t rest_word) const {
        std::uint64_t word = 0;
        const int nk = static_cast<int>(keep_positions.size());
        for (int i = 0; i < nk; ++i) {
            const std::uint64_t b = (keep_word >> (nk - 1 - i)) & 1u;
            word |= b << (width - 1 - keep_positions[static_cast<std::size_t>(i)]);
        }
        const int nr = static_cast<int>(rest_positions.size());
        for (int i = 0; i < nr; ++i) {
            const std::uint64_t b = (rest_word >> (nr - 1 - i)) & 1u;
            word |= b << (width - 1 - rest_positions[static_cast<std::size_t>(i)]);
        }
        return word;
    }
};

TraceIndexing make_indexing(const Register &reg, const std::vector<QubitLabel> &keep) {
    if (keep.empty())
        throw std::invalid_argument("partial trace requires a non-empty keep set");
    std::vector<bool> kept(static_cast<std::size_t>(reg.size()), false);
    for (const auto &label : keep) {
        const int pos = reg.position_of(label); // throws on unknown label
        if (kept[static_cast<std::size_t>(pos)])
            throw std::invalid_argument("duplicate label in keep set: " + label.name());
        kept[static_cast<std::size_t>(pos)] = true;
    }
    TraceIndexing ix;
    ix.width = reg.size();
    for (int p = 0; p < reg.size(); ++p) {
        if (kept[static_cast<std::size_t>(p)])
            ix.keep_positions.push_back(p);
        else
            ix.rest_positions.push_back(p);
    }
    ix.keep_dim = std::uint64_t{1} << ix.keep_positions.size();
    ix.rest_dim = std::uint64_t{1} << ix.rest_positions.size();
    return ix;
}

Register kept_register(const Register &reg, const TraceIndexing &ix) {
    std::vector<QubitLabel> labels;
    labels.reserve(ix.keep_positions.size());
    for (int p : ix.keep_positions)
        labels.push_back(reg.at(p));
    return Register(std::move(labels));
}

} // namespace

DensityMatrix::DensityMatrix(Register reg, Eigen::MatrixXcd matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {
    const auto dim = static_cast<Eigen::Index>(reg_.dim());
    if (matrix_.rows() != dim || matrix_.cols() != dim)
        throw std::invalid_argument("density matrix dimension does not match register");
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(matrix_.trace() - std::complex<double>(1.0)) > kAlgebraTol)
        throw std::invalid_argument("density matrix trace is not 1");
}

DensityMatrix DensityMatrix::pure(const Ket &state) {
    return DensityMatrix(state.reg(), state.amplitudes() * state.amplitudes().adjoint());
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix partial_trace(const Ket &state, const std::vector<QubitLabel> &keep) {
    const TraceIndexing ix = make_indexing(state.reg(), keep);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ix.keep_dim),
                                                  static_cast<Eigen::Index>(ix.keep_dim));
    const auto &amps = state.amplitudes();
    for (std::uint64_t i = 0; i < ix.keep_dim; ++i) {
        for (std::uint64_t j = 0; j < ix.keep_dim; ++j) {
            std::complex<double> sum = 0.0;
            for (std::uint64_t r = 0; r < ix.rest_dim; ++r) {
                sum += amps(static_cast<Eigen::Index>(ix.full_index(i, r))) *
                       std::conj(amps(static_cast<Eigen::Index>(ix.full_index(j, r))));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
        }
    }
    return DensityMatrix(kept_register(state.reg(), ix), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &state, const std::vector<QubitLabel> &keep) {
    const TraceIndexing ix = make_indexing(state.reg(), keep);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ix.keep_dim),
                                                  static_cast<Eigen::Index>(ix.keep_dim));
    const auto &m = state.matrix();
    for (std::uint64_t i = 0; i < ix.keep_dim; ++i) {
        for (std::uint64_t j = 0; j < ix.keep_dim; ++j) {
            std::complex<double> sum = 0.0;
            for (std::uint64_t r = 0; r < ix.rest_dim; ++r) {
                sum += m(static_cast<Eigen::Index>(ix.full_index(i, r)),
                         static_cast<Eigen::Index>(ix.full_index(j, r)));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
        }
    }
    return DensityMatrix(kept_register(state.reg(), ix), std::move(out));
}

} // namespace qmeas
