#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvm/circuit.hpp"

namespace qvm {

struct PathStats {
    std::uint64_t paths_enumerated = 0;
    std::size_t max_live_configurations = 0;  // peak working set, O(depth)
};

// Transition amplitude <final| circuit |initial> as a sum over classical
// configuration paths: depth-first over time steps, branching only inside
// each gate's target subspace, storing one configuration per depth level.
// The state vector is never materialized. Zero-magnitude contributions are
// still accumulated; only structurally zero matrix entries prune a branch.
complex_t path_amplitude(const Circuit& circuit, std::uint64_t initial, std::uint64_t final_index,
                         PathStats* stats = nullptr);

// Prob(j) = |amplitude(i -> j)|^2 for every outcome; n <= 12 guard.
std::vector<double> path_distribution(const Circuit& circuit, std::uint64_t initial,
                                      PathStats* stats = nullptr);

// ---- Stochastic comparator ----

struct StochasticNode {
    std::vector<std::size_t> targets;
    std::vector<double> matrix;  // row-major 2^k x 2^k, columns sum to 1
};

struct StochasticCircuit {
    std::size_t num_bits = 0;
    std::vector<StochasticNode> nodes;
};

void validate_stochastic_circuit(const StochasticCircuit& circuit);

// Exact distribution propagation through the stochastic matrix chain.
std::vector<double> stochastic_simulate(const StochasticCircuit& circuit,
                                        const std::vector<double>& input_distribution);

// Text format: a `stochastic` header, `qubits n`, then one node per line:
//   node <t...> : <4^k entries row-major>
StochasticCircuit parse_stochastic_circuit(const std::string& text);
std::string render_stochastic_circuit(const StochasticCircuit& circuit);

}  // namespace qvm
