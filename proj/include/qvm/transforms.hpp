#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qvm/circuit.hpp"
#include "qvm/gate_matrix.hpp"
#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

// Fourier transform over Z_2^n: H on each listed qubit. Self-inverse.
void qft_z2n(StateVector& state, const std::vector<std::size_t>& qubits);

// Gate array for the transform over Z_{2^m} on the given register (H plus
// conditioned phase shifts, then bit reversal). cutoff < m omits every R_k
// with k > cutoff, giving Coppersmith's approximate transform; cutoff >= m
// (or 0, meaning "no cutoff") is the exact array. inverse=true conjugates
// the phases and reverses the array.
Circuit qfft_circuit(const std::vector<std::size_t>& qubits, std::size_t num_qubits,
                     std::size_t cutoff = 0, bool inverse = false);

void qfft_mod2m(StateVector& state, const std::vector<std::size_t>& qubits,
                bool inverse = false);
void approx_qfft(StateVector& state, const std::vector<std::size_t>& qubits,
                 std::size_t cutoff, bool inverse = false);

// Triangle bound on |exact - approximate| in operator norm: the omitted R_k
// count at level k times |1 - e^{2 pi i / 2^k}|.
double approx_qfft_error_bound(std::size_t m, std::size_t cutoff);

// Uniform superposition over {0..Q-1} on ceil(log2 Q) qubits, built by the
// recursive halving split with one conditioned rotation per level.
StateVector prepare_fourier_zero(std::uint64_t q_modulus);

// Diagonal phase |a,b> -> e^{2 pi i a b / Q} |a,b> on two registers.
void phase_kick(StateVector& state, std::uint64_t q_modulus,
                const std::vector<std::size_t>& reg_a, const std::vector<std::size_t>& reg_b);

// ---- Garbage-free wrapping ----

// Wraps a measurement-free computation so its work/garbage qubits are
// restored: run `compute`, copy the result register with CNOTs onto fresh
// qubits appended at the end, then run `compute` reversed. The wrapped
// circuit acts on compute.num_qubits + result_qubits.size() qubits.
Circuit garbage_free(const Circuit& compute, const std::vector<std::size_t>& result_qubits);

}  // namespace qvm
