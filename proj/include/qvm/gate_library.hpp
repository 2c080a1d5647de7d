#pragma once

#include <cstdint>
#include <vector>

#include "qvm/circuit.hpp"
#include "qvm/gate_matrix.hpp"
#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

// An ordered list of gate applications; the product is read left to right in
// time (element 0 is applied first).
struct GateSequence {
    struct Item {
        GateMatrix gate;
        std::vector<std::size_t> targets;
    };
    std::vector<Item> items;

    std::size_t size() const { return items.size(); }
    void apply_to(StateVector& state) const;
    // Dense product as a unitary on `num_qubits` qubits.
    GateMatrix unitary(std::size_t num_qubits) const;
};

// Barenco's two-qubit-gate realization of the doubly controlled Q on three
// qubits: CV(1->2), CNOT(0->1), CV+(1->2), CNOT(0->1), CV(0->2), V = sqrt(Q).
GateSequence barenco_decompose(const GateMatrix& q);

// A fresh |0> qubit through H and a measurement.
int quantum_random_bit(RandomSource& rng);

// ---- Classical circuits and reversible compilation ----

enum class ClassicalGateKind { Not, And, Or, Xor };

struct ClassicalGate {
    ClassicalGateKind kind;
    std::vector<std::size_t> inputs;  // existing wire ids (1 for NOT, 2 otherwise)
};

// Acyclic classical circuit in single-assignment form: wires 0..n-1 are the
// inputs; each gate appends one new wire carrying its result; `outputs` names
// the m wires whose values form f(i).
struct ClassicalCircuit {
    std::size_t num_inputs = 0;
    std::vector<ClassicalGate> gates;
    std::vector<std::size_t> outputs;

    std::size_t num_wires() const { return num_inputs + gates.size(); }
    // Reference evaluation: input bits MSB-first packed in `input`.
    std::uint64_t evaluate(std::uint64_t input) const;
};

void validate_classical_circuit(const ClassicalCircuit& circuit);

struct ReversibleProgram {
    Circuit circuit;        // on b + n + m qubits
    std::size_t num_work;   // b, qubits 0..b-1
    std::size_t num_inputs; // qubits b..b+n-1
    std::size_t num_outputs;// qubits b+n..b+n+m-1
};

// Lemma-1 compilation: |0^b, i, j> -> |0^b, i, f(i) xor j> on every basis
// input, with b and the gate count linear in the classical gate count.
ReversibleProgram compile_reversible(const ClassicalCircuit& circuit);

// ---- Universal-set synthesis ----

struct SynthesisOptions {
    double alpha;                 // quadratic irrational driving U/W
    std::uint64_t scan_cap;       // largest repetition count scanned per step
    SynthesisOptions();
};

struct SynthesisResult {
    GateSequence sequence;        // items are du/dw applications on (0,1,2) wirings
    double achieved_distance;     // verified phase-aligned operator distance
    double per_step_tolerance;    // angle budget used per ideal step
    std::uint64_t scan_cap;       // cap in force
};

// Approximates a three-qubit target by a word in {U3, W3} applied on the
// three wirings of (0,1,2). The generated subgroup fixes every basis state
// with fewer than two 1-bits, so the target must act as the identity there
// (up to global phase); doubly controlled gates all qualify. Throws
// std::domain_error for targets outside that family and std::runtime_error
// if the verified distance cannot be brought below epsilon under the cap.
SynthesisResult synthesize_uw(const GateMatrix& target, double epsilon,
                              const SynthesisOptions& options = SynthesisOptions());

}  // namespace qvm
