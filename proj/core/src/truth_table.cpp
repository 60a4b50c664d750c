#include "qmeas/truth_table.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qmeas {

TruthTable::TruthTable(int width) : width_(width) {
    if (width_ < 1 || width_ > 32)
        throw std::invalid_argument("truth table width out of range");
}

void TruthTable::set(std::uint64_t input, std::uint64_t output) {
    if (input >= word_count() || output >= word_count())
        throw std::invalid_argument("truth table word out of range");
    if (rows_.contains(input))
        throw std::invalid_argument("input word already defined: " + word_bits(input, width_));
    for (const auto &[in, out] : rows_)
        if (out == output)
            throw std::invalid_argument("table not injective: output word reused: " +
                                        word_bits(output, width_));
    rows_.emplace(input, output);
}

std::optional<std::uint64_t> TruthTable::lookup(std::uint64_t input) const {
    auto it = rows_.find(input);
    if (it == rows_.end())
        return std::nullopt;
    return it->second;
}

namespace {

int word_bit(std::uint64_t word, int position, int width) {
    return static_cast<int>((word >> (width - 1 - position)) & 1u);
}

} // namespace

TruthTable complete_reversible(const TruthTable &table, std::optional<int> preserve_bit) {
    const int width = table.width();
    if (preserve_bit && (*preserve_bit < 0 || *preserve_bit >= width))
        throw std::invalid_argument("preserve_bit position out of range");

    std::set<std::uint64_t> used_inputs;
    std::set<std::uint64_t> used_outputs;
    for (const auto &[in, out] : table.rows()) {
        if (preserve_bit && word_bit(in, *preserve_bit, width) != word_bit(out, *preserve_bit, width))
            throw std::invalid_argument("existing row does not preserve bit " +
                                        std::to_string(*preserve_bit) + ": " +
                                        word_bits(in, width) + " -> " + word_bits(out, width));
        used_inputs.insert(in);
        used_outputs.insert(out);
    }

    // One block when unconstrained, two value-blocks of the preserved bit
    // otherwise; ascending-to-ascending matching within each block.
    const int blocks = preserve_bit ? 2 : 1;
    TruthTable completed = table;
    for (int block = 0; block < blocks; ++block) {
        std::vector<std::uint64_t> free_inputs;
        std::vector<std::uint64_t> free_outputs;
        for (std::uint64_t w = 0; w < table.word_count(); ++w) {
            if (preserve_bit && word_bit(w, *preserve_bit, width) != block)
                continue;
            if (!used_inputs.contains(w))
                free_inputs.push_back(w);
            if (!used_outputs.contains(w))
                free_outputs.push_back(w);
        }
        if (free_inputs.size() != free_outputs.size())
            throw std::invalid_argument("infeasible completion: block has " +
                                        std::to_string(free_inputs.size()) + " unused inputs but " +
                                        std::to_string(free_outputs.size()) + " unused outputs");
        for (std::size_t i = 0; i < free_inputs.size(); ++i)
            completed.set(free_inputs[i], free_outputs[i]);
    }
    return completed;
}

PermutationGate to_gate(const TruthTable &table) {
    if (!table.total())
        throw std::invalid_argument("cannot synthesize a gate from a partial truth table (" +
                                    std::to_string(table.row_count()) + " of " +
                                    std::to_string(table.word_count()) + " rows)");
    std::vector<std::uint64_t> perm(table.word_count());
    for (const auto &[in, out] : table.rows())
        perm[in] = out;
    return PermutationGate(table.width(), std::move(perm));
}

std::string to_text(const TruthTable &table) {
    std::ostringstream out;
    out << "width: " << table.width() << '\n';
    for (const auto &[in, o] : table.rows())
        out << word_bits(in, table.width()) << " -> " << word_bits(o, table.width()) << '\n';
    return out.str();
}

TruthTable parse_truth_table(std::istream &in) {
    std::string line;
    int width = -1;
    std::optional<TruthTable> table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        if (width < 0) {
            std::string header;
            ls >> header >> width;
            if (header != "width:" || width < 1)
                throw std::invalid_argument("truth table text must start with 'width: n'");
            table.emplace(width);
            continue;
        }
        std::string in_word, arrow, out_word;
        ls >> in_word >> arrow >> out_word;
        if (arrow != "->" || in_word.size() != static_cast<std::size_t>(width) ||
            out_word.size() != static_cast<std::size_t>(width))
            throw std::invalid_argument("malformed truth table row: " + line);
        table->set(parse_word_bits(in_word), parse_word_bits(out_word));
    }
    if (!table)
        throw std::invalid_argument("empty truth table text");
    return *table;
}

TruthTable parse_truth_table(const std::string &text) {
    std::istringstream in(text);
    return parse_truth_table(in);
}

} // namespace qmeas
