#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qmeas {

/// Symbolic name of one qubit wire (e.g. "e", "p1", "q2").
class QubitLabel {
  public:
    explicit QubitLabel(std::string name);

    const std::string &name() const noexcept { return name_; }

    auto operator<=>(const QubitLabel &) const = default;

  private:
    std::string name_;
};

/**
 * Ordered list of distinct qubit labels. Position 0 is the most significant
 * bit of a basis index, so the basis word reads left-to-right in register
 * order ("big-endian").
 */
class Register {
  public:
    Register() = default;
    explicit Register(std::vector<QubitLabel> qubits);
    Register(std::initializer_list<QubitLabel> qubits);

    int size() const noexcept { return static_cast<int>(qubits_.size()); }
    std::uint64_t dim() const noexcept { return std::uint64_t{1} << size(); }

    const QubitLabel &at(int position) const;
    const std::vector<QubitLabel> &qubits() const noexcept { return qubits_; }

    bool contains(const QubitLabel &label) const;
    /// Position of `label`; throws std::invalid_argument if absent.
    int position_of(const QubitLabel &label) const;

    /// Bit of `word` belonging to the qubit at `position`.
    int bit(std::uint64_t word, int position) const;
    /// Word with the qubit at `position` set to `value` (0 or 1).
    std::uint64_t with_bit(std::uint64_t word, int position, int value) const;

    /// Concatenation; throws on duplicate labels ("label collision").
    static Register concat(const Register &lhs, const Register &rhs);

    bool operator==(const Register &) const = default;

    /// Space-separated label names, for error messages.
    std::string str() const;

  private:
    std::vector<QubitLabel> qubits_;
};

/// `word` rendered as `width` binary digits, most significant first.
std::string word_bits(std::uint64_t word, int width);
/// Inverse of word_bits; throws on non-binary characters.
std::uint64_t parse_word_bits(const std::string &bits);

} // namespace qmeas
