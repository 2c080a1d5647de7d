#pragma once

#include <cstdint>
#include <vector>

#include "qvm/gate_matrix.hpp"
#include "qvm/rng.hpp"

namespace qvm {

struct MeasurementRecord {
    std::vector<std::size_t> measured_qubits;
    std::vector<int> outcome;  // one bit per measured qubit, same order
    double outcome_probability = 0.0;

    std::uint64_t outcome_bits() const;  // outcome packed, first qubit most significant
};

// Dense state vector over n qubits: 2^n complex amplitudes, unit norm.
// Qubit 0 is the leftmost symbol of the ket |i_1 i_2 ... i_n> and the most
// significant bit of the amplitude index.
class StateVector {
public:
    StateVector() = default;

    static StateVector basis_state(std::size_t num_qubits, std::uint64_t basis_index);
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<complex_t> amps);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t(1) << num_qubits_; }

    const complex_t& amplitude(std::uint64_t i) const { return amps_[i]; }
    const std::vector<complex_t>& amplitudes() const { return amps_; }
    std::vector<complex_t>& mutable_amplitudes() { return amps_; }

    double norm_squared() const;
    // Throws std::runtime_error if the norm has drifted beyond 1e-9 of 1.
    void check_norm() const;

    // Bit value of `qubit` inside basis index i under the MSB-first convention.
    int bit_of(std::uint64_t index, std::size_t qubit) const {
        return int((index >> (num_qubits_ - 1 - qubit)) & 1u);
    }
    std::uint64_t mask_of(std::size_t qubit) const {
        return std::uint64_t(1) << (num_qubits_ - 1 - qubit);
    }

    // Largest supported register; 2^24 amplitudes is a desk-scale budget.
    static std::size_t max_qubits();
    static void set_max_qubits(std::size_t n);

private:
    std::size_t num_qubits_ = 0;
    std::vector<complex_t> amps_;
};

// Applies `gate` (arity k) to the ordered target qubits, identity elsewhere.
// In-place over strided amplitude blocks; the full tensor-product matrix is
// never materialized. Targets must be distinct and in range.
void apply_gate(StateVector& state, const GateMatrix& gate,
                const std::vector<std::size_t>& targets);

// Squared norm of the projection onto the subspace where each listed qubit
// has the corresponding bit value.
double branch_probability(const StateVector& state,
                          const std::vector<std::size_t>& qubits,
                          const std::vector<int>& values);

// Samples an outcome for the listed qubits with the Born rule and collapses
// the state (projection renormalized to unit norm).
MeasurementRecord measure_qubits(StateVector& state,
                                 const std::vector<std::size_t>& qubits,
                                 RandomSource& rng);

// <a|b>.
complex_t overlap(const StateVector& a, const StateVector& b);

// Real-amplitude doubling: sum_i Re(c_i)|i,0> + Im(c_i)|i,1> on one extra
// (least significant) qubit.
StateVector to_real_doubled(const StateVector& state);

}  // namespace qvm
