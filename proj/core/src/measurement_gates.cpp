#include "qmeas/measurement_gates.hpp"

namespace qmeas {

namespace wires {

Register epqa() { return Register({e, p, q, a}); }

Register pair_register() { return Register({e1, e2, p1, p2, q1, q2, a1, a2}); }

} // namespace wires

TruthTable measurement_truth_table() {
    TruthTable t(4);
    t.set(0b0000, 0b0000);
    t.set(0b0010, 0b0001);
    t.set(0b1000, 0b1110);
    t.set(0b1010, 0b1111);
    return t;
}

TruthTable completed_measurement_table(CompletionStrategy strategy) {
    const std::optional<int> preserve =
        strategy == CompletionStrategy::kPreserveEBlock ? std::optional<int>(0) : std::nullopt;
    return complete_reversible(measurement_truth_table(), preserve);
}

PermutationGate measurement_gate(CompletionStrategy strategy) {
    return to_gate(completed_measurement_table(strategy));
}

PermutationGate von_neumann_gate() {
    TruthTable t(2);
    t.set(0b00, 0b00);
    t.set(0b01, 0b11);
    return to_gate(complete_reversible(t));
}

PermutationGate pair_measurement_gate(CompletionStrategy strategy) {
    const PermutationGate one = measurement_gate(strategy);
    const PermutationGate both = PermutationGate::kron(one, one);
    // kron order is (e1,p1,q1,a1,e2,p2,q2,a2); conjugate onto the interleaved
    // register order.
    const Register grouped({wires::e1, wires::p1, wires::q1, wires::a1, wires::e2, wires::p2,
                            wires::q2, wires::a2});
    const PermutationGate gather = reorder_gate(wires::pair_register(), grouped);
    return gather.then(both).then(gather.inverse());
}

} // namespace qmeas
