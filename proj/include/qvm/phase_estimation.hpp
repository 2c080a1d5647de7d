#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qvm/gate_matrix.hpp"
#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

// Access to controlled applications of U^{2^j}; the register occupies
// `arity` qubits. Implementations exist for dense gates (powers by repeated
// squaring) and for modular multiplication permutations.
struct PoweredUnitary {
    std::size_t arity = 0;
    // Applies U^{2^level} to the register qubits, conditioned on `control`.
    std::function<void(StateVector&, std::size_t control,
                       const std::vector<std::size_t>& reg, unsigned level)>
        apply_controlled_power;
};

PoweredUnitary powered_from_gate(const GateMatrix& u, unsigned max_level);
// |g> -> |g * multiplier^{2^level} mod N> for g < N, identity above.
PoweredUnitary powered_from_mod_multiply(std::uint64_t modulus, std::uint64_t multiplier,
                                         std::size_t arity);

struct PhaseLevel {
    unsigned level = 0;        // estimates 2^level * theta
    std::size_t cos_ones = 0;  // plain interferometer
    std::size_t sin_ones = 0;  // quarter-phase interferometer
    std::size_t samples = 0;   // per interferometer
    double coarse = 0.0;       // recovered 2^level * theta mod 2pi
};

struct PhaseEstimate {
    double theta = 0.0;            // in [0, 2pi)
    unsigned precision_bits = 0;   // n: |theta - true| <= 2pi/2^{n+1} on success
    std::vector<PhaseLevel> levels;
    bool consistent = true;        // levels all agree with the reconstruction
    double chernoff_failure_bound = 0.0;  // reported per-run failure bound
};

// Recommended samples per level: m = 48 (n + safety); per-level angle error
// <= pi/8 except with probability ~2^-safety/(n+1).
std::size_t phase_samples_per_level(unsigned precision_bits, unsigned safety);

// Kitaev eigenvalue readout by trajectory sampling: for each level j = 0..n,
// m control qubits are prepared, entangled through controlled-U^{2^j}, and
// measured; the two interferometer phases recover cos and sin of 2^j theta.
// The register is measured through the controls, so an eigenvector input is
// returned unchanged; a superposition of eigenvectors collapses toward a
// random eigenvector (which is exactly what the factoring route needs).
PhaseEstimate estimate_phase(const PoweredUnitary& powered, StateVector& eigenstate,
                             unsigned precision_bits, std::size_t samples_per_level,
                             RandomSource& rng);

// Bit-by-bit refinement from the highest doubling level down. `coarse[j]`
// estimates 2^j * theta mod 2pi with error at most pi/8. Throws
// std::runtime_error when no phase is consistent with every level.
double reconstruct_theta(const std::vector<double>& coarse);

// The coherent counting-register construction: m unmeasured control qubits
// interfere through controlled-U^{2^level}, and their ones-count is written
// unitarily onto a counting register. Returns that register's exact
// measurement distribution (size m + 1). Exponential in m -- the production
// path is trajectory sampling; this exists as a cross-check for m <= 12.
std::vector<double> counting_register_distribution(const PoweredUnitary& powered,
                                                   const StateVector& eigenstate,
                                                   unsigned level, std::size_t m);

}  // namespace qvm
