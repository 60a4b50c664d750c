#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "qmeas/permutation_gate.hpp"

namespace qmeas {

/**
 * Partial injective map from n-bit input words to n-bit output words.
 * Rows are kept sparse; a total table can be synthesized into a
 * PermutationGate.
 */
class TruthTable {
  public:
    explicit TruthTable(int width);

    int width() const noexcept { return width_; }
    std::uint64_t word_count() const noexcept { return std::uint64_t{1} << width_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool total() const noexcept { return rows_.size() == word_count(); }

    /// Add a row; throws if the input is already defined, the output is
    /// already used (injectivity), or a word is out of range.
    void set(std::uint64_t input, std::uint64_t output);

    std::optional<std::uint64_t> lookup(std::uint64_t input) const;
    const std::map<std::uint64_t, std::uint64_t> &rows() const noexcept { return rows_; }

    bool operator==(const TruthTable &) const = default;

  private:
    int width_;
    std::map<std::uint64_t, std::uint64_t> rows_;
};

/**
 * Deterministically extend a partial injective table to a bijection on all
 * n-bit words: unused inputs in ascending order are matched to unused
 * outputs in ascending order.
 *
 * With `preserve_bit` (a bit position, 0 = most significant), matching runs
 * separately inside the block of words with that bit 0 and the block with it
 * 1, so the completed gate never changes that bit. Requires every existing
 * row to preserve the bit and, per block, equally many unused inputs and
 * outputs.
 */
TruthTable complete_reversible(const TruthTable &table, std::optional<int> preserve_bit = {});

/// Synthesize the permutation gate of a total injective table.
PermutationGate to_gate(const TruthTable &table);

/// Plain text form: header `width: n`, then one `input -> output` pair of
/// binary words per row, inputs ascending.
std::string to_text(const TruthTable &table);
TruthTable parse_truth_table(std::istream &in);
TruthTable parse_truth_table(const std::string &text);

} // namespace qmeas
