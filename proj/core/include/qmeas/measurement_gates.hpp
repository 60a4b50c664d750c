#pragma once

#include "qmeas/qubit.hpp"
#include "qmeas/truth_table.hpp"

namespace qmeas {

/// Canonical qubit labels of the measurement scenarios.
namespace wires {
inline const QubitLabel e{"e"}, p{"p"}, q{"q"}, a{"a"};
inline const QubitLabel e1{"e1"}, e2{"e2"}, p1{"p1"}, p2{"p2"};
inline const QubitLabel q1{"q1"}, q2{"q2"}, a1{"a1"}, a2{"a2"};

/// (e, p, q, a) — ancilla, pointer, measured qubit, memory ancilla.
Register epqa();
/// (e1, e2, p1, p2, q1, q2, a1, a2) — the two-qubit measurement register.
Register pair_register();
} // namespace wires

/// How the unspecified rows of a partial table are filled in.
enum class CompletionStrategy {
    /// Per-block ascending match that never changes the e bit; keeps the
    /// gate block-diagonal in e, so per-branch scaling operators commute
    /// with it exactly.
    kPreserveEBlock,
    /// Global ascending match over all unused words.
    kPlainAscending,
};

/**
 * The four-row partial truth table of the measurement gate on (e, p, q, a):
 * e passes through, the pointer p and qubit q both end in the e value, and
 * a records the q input so the gate stays reversible.
 *
 *   0000 -> 0000
 *   0010 -> 0001
 *   1000 -> 1110
 *   1010 -> 1111
 */
TruthTable measurement_truth_table();

/// Completed measurement table under the given strategy.
TruthTable completed_measurement_table(CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

/// 16x16 measurement gate synthesized from the completed table.
PermutationGate measurement_gate(CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

/**
 * Two-qubit pointer-copy gate on (p, q): |0>_p |x>_q -> |x>_p |x>_q,
 * completed reversibly. Sends |0>_p (a|0> + b|1>)_q to a|00> + b|11>.
 */
PermutationGate von_neumann_gate();

/**
 * 256x256 gate for measuring two qubits at once: the tensor product of two
 * measurement gates on (e1,p1,q1,a1) and (e2,p2,q2,a2), conjugated with the
 * wire reorder onto the (e1,e2,p1,p2,q1,q2,a1,a2) register order.
 */
PermutationGate pair_measurement_gate(CompletionStrategy strategy = CompletionStrategy::kPreserveEBlock);

} // namespace qmeas
