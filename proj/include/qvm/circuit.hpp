#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qvm/gate_matrix.hpp"
#include "qvm/oracle.hpp"

namespace qvm {

struct GateApplication {
    std::string name;             // mnemonic for rendering
    std::vector<double> params;
    std::vector<std::size_t> targets;
    GateMatrix gate;
};

struct OracleQuery {
    std::string oracle_id;
    std::vector<std::size_t> input_qubits;
    std::vector<std::size_t> output_qubits;
};

struct Measurement {
    std::vector<std::size_t> qubits;
    std::string register_label;
};

using CircuitOp = std::variant<GateApplication, OracleQuery, Measurement>;

// Time-ordered operation list over a fixed qubit count. Oracles referenced by
// queries are carried with the circuit by name.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<CircuitOp> operations;
    std::map<std::string, Oracle> oracles;

    void add_gate(const std::string& name, std::vector<double> params,
                  std::vector<std::size_t> targets);
    void add_gate(const GateMatrix& gate, std::vector<std::size_t> targets,
                  const std::string& name = "u", std::vector<double> params = {});
    void add_query(const std::string& oracle_id, std::vector<std::size_t> inputs,
                   std::vector<std::size_t> outputs);
    void add_measurement(std::vector<std::size_t> qubits, const std::string& label);

    std::size_t gate_count() const;
};

// Structural checks: indices in range, arities consistent, labels unique,
// oracle widths matching query wire counts. Throws std::runtime_error.
void validate_circuit(const Circuit& circuit);

// Unitary of a measurement-free circuit as a dense matrix (test utility;
// exponential in qubits, fine at desk scale).
GateMatrix circuit_unitary(const Circuit& circuit);

// Reverses a measurement-free circuit, inverting each gate (queries are
// self-inverse). Inverse gates keep renderable names.
Circuit inverse_circuit(const Circuit& circuit);

// Text format (one operation per line, '#' comments):
//   qubits 2
//   h 0
//   cnot 0 1
//   rk(3) 1
//   g(0.5,1.2) 0
//   query f 0 -> 1
//   measure 0 1 -> out
Circuit parse_circuit(const std::string& text);
std::string render_circuit(const Circuit& circuit);

}  // namespace qvm
