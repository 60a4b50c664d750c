#include "qmeas/qubit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmeas {

QubitLabel::QubitLabel(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw std::invalid_argument("qubit label must not be empty");
}

Register::Register(std::vector<QubitLabel> qubits) : qubits_(std::move(qubits)) {
    std::set<QubitLabel> seen;
    for (const auto &q : qubits_) {
        if (!seen.insert(q).second)
            throw std::invalid_argument("duplicate qubit label in register: " + q.name());
    }
    if (qubits_.size() > 63)
        throw std::invalid_argument("register too large");
}

Register::Register(std::initializer_list<QubitLabel> qubits)
    : Register(std::vector<QubitLabel>(qubits)) {}

const QubitLabel &Register::at(int position) const {
    if (position < 0 || position >= size())
        throw std::out_of_range("register position out of range");
    return qubits_[static_cast<std::size_t>(position)];
}

bool Register::contains(const QubitLabel &label) const {
    return std::find(qubits_.begin(), qubits_.end(), label) != qubits_.end();
}

int Register::position_of(const QubitLabel &label) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), label);
    if (it == qubits_.end())
        throw std::invalid_argument("label not in register: " + label.name());
    return static_cast<int>(it - qubits_.begin());
}

int Register::bit(std::uint64_t word, int position) const {
    if (position < 0 || position >= size())
        throw std::out_of_range("register position out of range");
    return static_cast<int>((word >> (size() - 1 - position)) & 1u);
}

std::uint64_t Register::with_bit(std::uint64_t word, int position, int value) const {
    if (position < 0 || position >= size())
        throw std::out_of_range("register position out of range");
    const std::uint64_t mask = std::uint64_t{1} << (size() - 1 - position);
    return value ? (word | mask) : (word & ~mask);
}

Register Register::concat(const Register &lhs, const Register &rhs) {
    std::vector<QubitLabel> all = lhs.qubits_;
    all.insert(all.end(), rhs.qubits_.begin(), rhs.qubits_.end());
    return Register(std::move(all)); // ctor reports label collisions
}

std::string Register::str() const {
    std::string out;
    for (const auto &q : qubits_) {
        if (!out.empty())
            out += ' ';
        out += q.name();
    }
    return out;
}

std::string word_bits(std::uint64_t word, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((word >> (width - 1 - i)) & 1u)
            out[static_cast<std::size_t>(i)] = '1';
    return out;
}

std::uint64_t parse_word_bits(const std::string &bits) {
    std::uint64_t word = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("expected binary word, got: " + bits);
        word = (word << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return word;
}

} // namespace qmeas
