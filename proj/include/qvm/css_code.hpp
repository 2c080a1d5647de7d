#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvm/noise.hpp"
#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm {

// Classical linear code over F2; rows of the generator matrix are packed
// MSB-first into uint64s.
struct LinearCodeF2 {
    std::size_t length = 0;
    std::vector<std::uint64_t> generators;

    std::size_t dimension() const { return generators.size(); }
    std::vector<std::uint64_t> span() const;  // all 2^dim codewords
    std::size_t minimum_distance() const;
    bool contains(std::uint64_t word) const;

    void validate() const;  // independence of the generators
};

// Generators of {v : v . c = 0 for all c in C}.
LinearCodeF2 dual_code(const LinearCodeF2& code);

// Parse rows of 0/1 characters (one per line, '#' comments).
LinearCodeF2 parse_generator_matrix(const std::string& text);

// CSS code built from a classical C with dual(C) contained in C.
// Codewords |w_L> are uniform superpositions over the cosets w + dual(C).
class CssCode {
public:
    static CssCode from_classical(const LinearCodeF2& code);
    static CssCode steane();

    const LinearCodeF2& code() const { return code_; }
    const LinearCodeF2& dual() const { return dual_; }
    std::size_t block_length() const { return code_.length; }
    std::size_t logical_qubits() const { return code_.dimension() - dual_.dimension(); }
    std::size_t correctable_errors() const { return correctable_; }
    const std::vector<std::uint64_t>& coset_representatives() const { return cosets_; }

    // |w_L> for a coset representative (must lie in C).
    StateVector encode_word(std::uint64_t w) const;
    // General logical state sum_w amplitudes[w] |w_L>.
    StateVector encode(const std::vector<complex_t>& logical_amplitudes) const;

    struct CorrectionReport {
        std::vector<int> bit_syndrome;
        std::vector<int> phase_syndrome;
        std::uint64_t bit_correction = 0;    // X mask applied
        std::uint64_t phase_correction = 0;  // Z mask applied
        bool bit_ok = true;                  // syndrome matched a weight <= d error
        bool phase_ok = true;
    };

    // Projective syndrome measurement and recovery: classical parity checks
    // in the computational basis for bit flips, the same conjugated by H on
    // every qubit for phase flips.
    CorrectionReport correct(StateVector& state, RandomSource& rng) const;

private:
    LinearCodeF2 code_;
    LinearCodeF2 dual_;
    std::vector<std::uint64_t> cosets_;
    std::size_t correctable_ = 0;
    std::vector<std::optional<std::uint64_t>> syndrome_table_;  // syndrome -> flip mask

    std::vector<int> measure_syndrome(StateVector& state, RandomSource& rng) const;
    std::optional<std::uint64_t> decode_syndrome(const std::vector<int>& syndrome) const;
};

// Transversal logical gates on Steane-style blocks.
void transversal_not(StateVector& state, const std::vector<std::size_t>& block);
void transversal_cnot(StateVector& state, const std::vector<std::size_t>& block_a,
                      const std::vector<std::size_t>& block_b);

struct MemoryExperimentResult {
    std::size_t shots = 0;
    std::size_t failures = 0;
    double failure_rate = 0.0;
    double ci_halfwidth = 0.0;  // 3 sigma binomial
};

// Encode a random logical qubit, alternate noise and correction `rounds`
// times, and count fidelity failures against the ideal state. The overload
// taking a NoiseModel chooses the error-kind distribution; with only `eta`
// the kinds are uniform. Note the channel matters for the failure rate: an
// X and a Z on distinct qubits are corrected by the two independent stages,
// while two errors of a shared type are not, so the sigma_y channel is the
// one whose failure events are exactly the weight >= 2 configurations.
MemoryExperimentResult memory_experiment(const CssCode& css, const NoiseModel& model,
                                         std::size_t rounds, std::size_t shots,
                                         RandomSource& rng);
MemoryExperimentResult memory_experiment(const CssCode& css, double eta, std::size_t rounds,
                                         std::size_t shots, RandomSource& rng);

}  // namespace qvm
