#include <stdexcept>

#include "qvm/gate_library.hpp"

namespace qvm {

std::uint64_t ClassicalCircuit::evaluate(std::uint64_t input) const {
    std::vector<int> wire(num_wires(), 0);
    for (std::size_t b = 0; b < num_inputs; ++b) {
        wire[b] = int((input >> (num_inputs - 1 - b)) & 1u);
    }
    std::size_t next = num_inputs;
    for (const auto& g : gates) {
        int a = wire[g.inputs[0]];
        int b = g.inputs.size() > 1 ? wire[g.inputs[1]] : 0;
        int r = 0;
        switch (g.kind) {
            case ClassicalGateKind::Not: r = 1 - a; break;
            case ClassicalGateKind::And: r = a & b; break;
            case ClassicalGateKind::Or: r = a | b; break;
            case ClassicalGateKind::Xor: r = a ^ b; break;
        }
        wire[next++] = r;
    }
    std::uint64_t out = 0;
    for (std::size_t w : outputs) out = (out << 1) | std::uint64_t(wire[w]);
    return out;
}

void validate_classical_circuit(const ClassicalCircuit& circuit) {
    if (circuit.num_inputs == 0) throw std::runtime_error("classical circuit needs inputs");
    if (circuit.outputs.empty()) throw std::runtime_error("classical circuit needs outputs");
    std::size_t next = circuit.num_inputs;
    for (const auto& g : circuit.gates) {
        std::size_t want = g.kind == ClassicalGateKind::Not ? 1 : 2;
        if (g.inputs.size() != want) {
            throw std::runtime_error("classical gate has wrong input count");
        }
        for (std::size_t in : g.inputs) {
            if (in >= next) throw std::runtime_error("classical gate reads a later wire");
        }
        ++next;
    }
    for (std::size_t w : circuit.outputs) {
        if (w >= circuit.num_wires()) throw std::runtime_error("output wire out of range");
    }
}

ReversibleProgram compile_reversible(const ClassicalCircuit& classical) {
    validate_classical_circuit(classical);

    const std::size_t b = classical.gates.size();
    const std::size_t n = classical.num_inputs;
    const std::size_t m = classical.outputs.size();

    ReversibleProgram prog;
    prog.num_work = b;
    prog.num_inputs = n;
    prog.num_outputs = m;
    prog.circuit.num_qubits = b + n + m;

    // Wire w lives on qubit: inputs at b..b+n-1, gate results on the work
    // ancillas 0..b-1 in creation order.
    auto qubit_of = [&](std::size_t wire) {
        return wire < n ? b + wire : wire - n;
    };

    // Each classical gate g becomes its reversible extension writing
    // result xor ancilla onto a fresh |0> ancilla.
    std::vector<CircuitOp> compute;
    Circuit& c = prog.circuit;
    std::size_t next_wire = n;
    auto emit = [&](const char* name, std::vector<std::size_t> targets) {
        c.add_gate(name, {}, targets);
        compute.push_back(c.operations.back());
    };
    for (const auto& g : classical.gates) {
        std::size_t out = qubit_of(next_wire++);
        std::size_t a = qubit_of(g.inputs[0]);
        switch (g.kind) {
            case ClassicalGateKind::Not:
                emit("cnot", {a, out});
                emit("x", {out});
                break;
            case ClassicalGateKind::And:
                emit("toffoli", {a, qubit_of(g.inputs[1]), out});
                break;
            case ClassicalGateKind::Xor:
                emit("cnot", {a, out});
                emit("cnot", {qubit_of(g.inputs[1]), out});
                break;
            case ClassicalGateKind::Or: {
                // u or v = u xor v xor uv
                std::size_t v = qubit_of(g.inputs[1]);
                emit("cnot", {a, out});
                emit("cnot", {v, out});
                emit("toffoli", {a, v, out});
                break;
            }
        }
    }

    // Copy the result wires onto the output register...
    for (std::size_t j = 0; j < m; ++j) {
        c.add_gate("cnot", {}, {qubit_of(classical.outputs[j]), b + n + j});
    }

    // ...then run the compute gates backwards to restore the ancillas.
    // Every emitted gate is an involution.
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
        c.operations.push_back(*it);
    }
    validate_circuit(c);
    return prog;
}

}  // namespace qvm
