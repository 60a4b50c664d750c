#include <stdexcept>
#include <doctest.h>

#include <random>
#include <set>

#include "qmeas/measurement_gates.hpp"
#include "qmeas/truth_table.hpp"

using namespace qmeas;

TEST_CASE("measurement table holds exactly the four specified rows") {
    const TruthTable t = measurement_truth_table();
    CHECK(t.width() == 4);
    CHECK(t.row_count() == 4);
    CHECK(t.lookup(0b1000) == 0b1110);
    CHECK(t.lookup(0b0000) == 0b0000);
    CHECK(t.lookup(0b0010) == 0b0001);
    CHECK(t.lookup(0b1010) == 0b1111);
    CHECK_FALSE(t.lookup(0b0001).has_value());
}

TEST_CASE("truth table rejects non-injective rows") {
    TruthTable t(2);
    t.set(0b00, 0b01);
    CHECK_THROWS_AS(t.set(0b10, 0b01), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0b00, 0b10), std::invalid_argument); // input redefined
    CHECK_THROWS_AS(t.set(0b100, 0b00), std::invalid_argument);
}

TEST_CASE("e-block completion matches lowest unused input to lowest unused output") {
    // Oracle: enumerate the e=0 block of the four specified rows by hand.
    const TruthTable base = measurement_truth_table();
    std::set<std::uint64_t> used_inputs, used_outputs;
    for (const auto &[in, out] : base.rows()) {
        used_inputs.insert(in);
        used_outputs.insert(out);
    }
    std::uint64_t lowest_unused_input = 0, lowest_unused_output = 0;
    for (std::uint64_t w = 0; w < 8; ++w) // e = 0 block
        if (!used_inputs.contains(w)) {
            lowest_unused_input = w;
            break;
        }
    for (std::uint64_t w = 0; w < 8; ++w)
        if (!used_outputs.contains(w)) {
            lowest_unused_output = w;
            break;
        }
    CHECK(lowest_unused_input == 0b0001);
    CHECK(lowest_unused_output == 0b0010);

    const TruthTable completed = complete_reversible(base, 0);
    CHECK(completed.lookup(lowest_unused_input) == lowest_unused_output);
}

TEST_CASE("completing the empty width-2 table yields the identity") {
    const TruthTable completed = complete_reversible(TruthTable(2));
    for (std::uint64_t w = 0; w < 4; ++w)
        CHECK(completed.lookup(w) == w);
}

TEST_CASE("completed measurement table is a bijection on 16 words") {
    for (auto strategy : {CompletionStrategy::kPreserveEBlock, CompletionStrategy::kPlainAscending}) {
        const TruthTable completed = completed_measurement_table(strategy);
        CHECK(completed.total());
        std::set<std::uint64_t> image;
        for (const auto &[in, out] : completed.rows())
            image.insert(out);
        CHECK(image.size() == 16);
    }
}

TEST_CASE("completion preserves the original rows and is deterministic") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int width = 2 + static_cast<int>(rng() % 4);
        const std::uint64_t words = std::uint64_t{1} << width;
        TruthTable t(width);
        // Random partial injective table.
        std::set<std::uint64_t> outs;
        for (std::uint64_t in = 0; in < words; ++in) {
            if (rng() % 3 != 0)
                continue;
            std::uint64_t out = rng() % words;
            while (outs.contains(out))
                out = (out + 1) % words;
            outs.insert(out);
            t.set(in, out);
        }
        const TruthTable completed = complete_reversible(t);
        const TruthTable again = complete_reversible(t);
        CHECK(completed == again);
        CHECK(completed.total());
        for (const auto &[in, out] : t.rows())
            CHECK(completed.lookup(in) == out);
        std::set<std::uint64_t> image;
        for (const auto &[in, out] : completed.rows())
            image.insert(out);
        CHECK(image.size() == words);
    }
}

TEST_CASE("block-preserving completion keeps the chosen bit fixed") {
    const TruthTable completed = completed_measurement_table(CompletionStrategy::kPreserveEBlock);
    for (const auto &[in, out] : completed.rows())
        CHECK(((in >> 3) & 1u) == ((out >> 3) & 1u));
}

TEST_CASE("preserve-bit completion rejects rows that flip the bit") {
    TruthTable t(2);
    t.set(0b00, 0b10);
    CHECK_THROWS_AS(complete_reversible(t, 0), std::invalid_argument);
}

TEST_CASE("the two strategies can genuinely differ on other tables") {
    // Preserving the least significant bit forces a different matching than
    // the global ascending one.
    TruthTable t(2);
    t.set(0b00, 0b10);
    const TruthTable blocked = complete_reversible(t, 1);
    const TruthTable plain = complete_reversible(t);
    CHECK(blocked.lookup(0b10) == 0b00);
    CHECK(plain.lookup(0b01) == 0b00);
    CHECK(blocked != plain);
}

TEST_CASE("text format round-trips and matches the printed layout") {
    const TruthTable t = measurement_truth_table();
    const std::string text = to_text(t);
    CHECK(text == "width: 4\n"
                  "0000 -> 0000\n"
                  "0010 -> 0001\n"
                  "1000 -> 1110\n"
                  "1010 -> 1111\n");
    CHECK(parse_truth_table(text) == t);
    CHECK_THROWS_AS(parse_truth_table(std::string{"width: 2\n00 -> 3\n"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_truth_table(std::string{""}), std::invalid_argument);
}
