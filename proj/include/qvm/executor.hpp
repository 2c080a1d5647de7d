#pragma once

#include <map>
#include <optional>
#include <string>

#include "qvm/circuit.hpp"
#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

// One execution: measurement register values, final state, and how many
// oracle queries were made (so query-complexity claims are auditable).
struct RunResult {
    std::map<std::string, std::string> registers;  // label -> bit string
    std::optional<StateVector> final_state;
    std::size_t shots = 1;
    std::size_t oracle_queries = 0;
};

// label -> outcome bit string -> count
using Histogram = std::map<std::string, std::map<std::string, std::size_t>>;

struct SampleResult {
    Histogram histogram;
    std::size_t shots = 0;
    std::size_t oracle_queries = 0;  // total over all shots
};

// Applies the operations in order; measurements collapse the state
// mid-circuit and record into their registers.
RunResult execute(const Circuit& circuit, std::uint64_t input, RandomSource& rng,
                  bool keep_state = true);

// `shots` independent executions with seeds derived per shot.
SampleResult sample(const Circuit& circuit, std::uint64_t input, std::size_t shots,
                    RandomSource& rng);

// Applies a single oracle query to a state (shared by executor and algorithms).
void apply_oracle_query(StateVector& state, const Oracle& oracle,
                        const std::vector<std::size_t>& inputs,
                        const std::vector<std::size_t>& outputs);

// Exact joint distribution over measurement registers, by brute-force
// branching at every measurement. Test/CLI oracle for the sampled histogram;
// exponential in measured qubits, fine for small circuits.
std::map<std::string, double> exact_register_distribution(const Circuit& circuit,
                                                          std::uint64_t input);

// Structured text document for a RunResult; optional amplitude dump with
// 17 significant digits.
std::string serialize_run_result(const RunResult& result, bool dump_amplitudes);

}  // namespace qvm
