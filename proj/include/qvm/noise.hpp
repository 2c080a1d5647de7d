#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

enum class PauliKind { X, Y, Z };

struct PauliError {
    std::size_t qubit;
    PauliKind kind;
};

// Local probabilistic Pauli noise: each qubit independently suffers an error
// with probability eta per step, the kind drawn from `kind_probabilities`
// (uniform thirds unless configured otherwise).
struct NoiseModel {
    double eta = 0.0;
    std::array<double, 3> kind_probabilities = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

    void validate() const;
};

// Samples and applies per-qubit errors; the sampled list is returned for
// test introspection.
std::vector<PauliError> apply_noise(StateVector& state, const NoiseModel& model,
                                    RandomSource& rng);

// Correlated variant for qubits that just interacted through a gate: with
// probability eta a joint non-identity Pauli, uniform over the 4^k - 1
// possibilities, hits the gate's target set.
std::vector<PauliError> apply_gate_noise(StateVector& state,
                                         const std::vector<std::size_t>& targets, double eta,
                                         RandomSource& rng);

struct WeightClassMass {
    std::vector<double> mass;  // mass[j] = C(m, j) eta^j (1-eta)^{m-j}, j <= cutoff
    double tail = 0.0;         // mass beyond the cutoff
};

// Order-by-order expansion of the product noise operator.
WeightClassMass discretization_expand(double eta, std::size_t m, std::size_t cutoff);

double binomial_coefficient(std::size_t n, std::size_t k);

}  // namespace qvm
