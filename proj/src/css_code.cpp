#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qvm/css_code.hpp"

namespace qvm {

CssCode CssCode::from_classical(const LinearCodeF2& code) {
    code.validate();
    CssCode css;
    css.code_ = code;
    css.dual_ = dual_code(code);
    for (std::uint64_t g : css.dual_.generators) {
        if (!code.contains(g)) {
            throw std::domain_error("CSS construction needs dual(C) contained in C");
        }
    }
    if (css.dual_.dimension() >= code.dimension()) {
        throw std::domain_error("dual(C) must be strictly contained in C");
    }
    css.correctable_ = (code.minimum_distance() - 1) / 2;

    // Coset representatives of C / dual(C): smallest member of each coset.
    std::vector<std::uint64_t> dual_span = css.dual_.span();
    std::vector<std::uint64_t> seen;
    for (std::uint64_t c : css.code_.span()) {
        std::uint64_t rep = c;
        for (std::uint64_t d : dual_span) rep = std::min(rep, c ^ d);
        if (std::find(seen.begin(), seen.end(), rep) == seen.end()) seen.push_back(rep);
    }
    std::sort(seen.begin(), seen.end());
    css.cosets_ = std::move(seen);

    // Syndrome decoding table for errors of weight <= d (shared by the bit
    // and phase stages: both check parities of dual(C) rows).
    std::size_t checks = css.dual_.dimension();
    css.syndrome_table_.assign(std::size_t(1) << checks, std::nullopt);
    css.syndrome_table_[0] = 0;
    std::size_t m = code.length;
    std::vector<std::uint64_t> frontier = {0};
    for (std::size_t weight = 1; weight <= css.correctable_; ++weight) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t base : frontier) {
            for (std::size_t q = 0; q < m; ++q) {
                std::uint64_t e = base | (std::uint64_t(1) << (m - 1 - q));
                if (std::size_t(std::popcount(e)) != weight) continue;
                std::size_t syndrome = 0;
                for (std::size_t c = 0; c < checks; ++c) {
                    int parity = std::popcount(e & css.dual_.generators[c]) & 1;
                    syndrome = (syndrome << 1) | std::size_t(parity);
                }
                if (!css.syndrome_table_[syndrome]) {
                    css.syndrome_table_[syndrome] = e;
                    next.push_back(e);
                }
            }
        }
        frontier = std::move(next);
    }
    return css;
}

CssCode CssCode::steane() {
    LinearCodeF2 hamming;
    hamming.length = 7;
    hamming.generators = {0b1010101, 0b0110011, 0b0001111, 0b1111111};
    return from_classical(hamming);
}

StateVector CssCode::encode_word(std::uint64_t w) const {
    if (!code_.contains(w)) throw std::domain_error("word is not a codeword of C");
    std::vector<complex_t> amps(std::uint64_t(1) << code_.length, complex_t(0, 0));
    std::vector<std::uint64_t> dual_span = dual_.span();
    double scale = 1.0 / std::sqrt(double(dual_span.size()));
    for (std::uint64_t d : dual_span) amps[w ^ d] = complex_t(scale, 0);
    return StateVector::from_amplitudes(code_.length, std::move(amps));
}

StateVector CssCode::encode(const std::vector<complex_t>& logical_amplitudes) const {
    if (logical_amplitudes.size() != cosets_.size()) {
        throw std::domain_error("logical amplitude count must match the coset count");
    }
    std::vector<complex_t> amps(std::uint64_t(1) << code_.length, complex_t(0, 0));
    std::vector<std::uint64_t> dual_span = dual_.span();
    double scale = 1.0 / std::sqrt(double(dual_span.size()));
    double norm = 0.0;
    for (const auto& a : logical_amplitudes) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-9) throw std::domain_error("logical state must be normalized");
    for (std::size_t w = 0; w < cosets_.size(); ++w) {
        for (std::uint64_t d : dual_span) {
            amps[cosets_[w] ^ d] = logical_amplitudes[w] * scale;
        }
    }
    return StateVector::from_amplitudes(code_.length, std::move(amps));
}

std::vector<int> CssCode::measure_syndrome(StateVector& state, RandomSource& rng) const {
    // Projective parity measurement per check row: the syndrome ancilla is
    // modeled as ideal (prepared fresh, measured, reset).
    std::vector<int> syndrome;
    for (std::uint64_t check : dual_.generators) {
        double p_odd = 0.0;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if (std::popcount(i & check) & 1) p_odd += std::norm(state.amplitude(i));
        }
        int bit = rng.uniform() < p_odd ? 1 : 0;
        double p = bit ? p_odd : 1.0 - p_odd;
        if (p < 1e-12) {
            syndrome.push_back(bit ? 0 : 1);
            continue;  // the branch is empty; outcome forced the other way
        }
        double scale = 1.0 / std::sqrt(p);
        auto& amps = state.mutable_amplitudes();
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if ((std::popcount(i & check) & 1) == bit) {
                amps[i] *= scale;
            } else {
                amps[i] = complex_t(0, 0);
            }
        }
        syndrome.push_back(bit);
    }
    return syndrome;
}

std::optional<std::uint64_t> CssCode::decode_syndrome(const std::vector<int>& syndrome) const {
    std::size_t key = 0;
    for (int b : syndrome) key = (key << 1) | std::size_t(b);
    return syndrome_table_[key];
}

CssCode::CorrectionReport CssCode::correct(StateVector& state, RandomSource& rng) const {
    if (state.num_qubits() != code_.length) {
        throw std::domain_error("state size does not match the code block");
    }
    CorrectionReport report;

    // Bit-flip stage: classical syndrome of C, NOT on the decoded positions.
    report.bit_syndrome = measure_syndrome(state, rng);
    if (auto flips = decode_syndrome(report.bit_syndrome)) {
        report.bit_correction = *flips;
    } else {
        report.bit_ok = false;  // beyond d errors; leave the state best-effort
    }
    GateMatrix x = gates::pauli_x();
    for (std::size_t q = 0; q < code_.length; ++q) {
        if ((report.bit_correction >> (code_.length - 1 - q)) & 1u) {
            apply_gate(state, x, {q});
        }
    }

    // Phase-flip stage: the same correction conjugated by the Fourier
    // transform (H on every qubit).
    GateMatrix h = gates::hadamard();
    for (std::size_t q = 0; q < code_.length; ++q) apply_gate(state, h, {q});
    report.phase_syndrome = measure_syndrome(state, rng);
    if (auto flips = decode_syndrome(report.phase_syndrome)) {
        report.phase_correction = *flips;
    } else {
        report.phase_ok = false;
    }
    for (std::size_t q = 0; q < code_.length; ++q) {
        if ((report.phase_correction >> (code_.length - 1 - q)) & 1u) {
            apply_gate(state, x, {q});
        }
    }
    for (std::size_t q = 0; q < code_.length; ++q) apply_gate(state, h, {q});
    return report;
}

void transversal_not(StateVector& state, const std::vector<std::size_t>& block) {
    GateMatrix x = gates::pauli_x();
    for (std::size_t q : block) apply_gate(state, x, {q});
}

void transversal_cnot(StateVector& state, const std::vector<std::size_t>& block_a,
                      const std::vector<std::size_t>& block_b) {
    if (block_a.size() != block_b.size()) throw std::domain_error("block sizes differ");
    GateMatrix cx = gates::cnot();
    for (std::size_t i = 0; i < block_a.size(); ++i) {
        apply_gate(state, cx, {block_a[i], block_b[i]});
    }
}

MemoryExperimentResult memory_experiment(const CssCode& css, const NoiseModel& model,
                                         std::size_t rounds, std::size_t shots,
                                         RandomSource& rng) {
    if (css.logical_qubits() != 1) {
        throw std::domain_error("the memory experiment encodes one logical qubit");
    }
    model.validate();
    MemoryExperimentResult result;
    result.shots = shots;

    for (std::size_t shot = 0; shot < shots; ++shot) {
        RandomSource run = rng.derive(shot);
        // Haar-random logical qubit
        double theta = std::acos(1.0 - 2.0 * run.uniform());
        double phi = run.uniform() * 2.0 * 3.14159265358979323846;
        std::vector<complex_t> logical = {
            complex_t(std::cos(theta / 2.0), 0),
            std::polar(std::sin(theta / 2.0), phi)};
        StateVector state = css.encode(logical);
        StateVector ideal = state;

        for (std::size_t round = 0; round < rounds; ++round) {
            apply_noise(state, model, run);
            css.correct(state, run);
        }
        double fidelity = std::norm(overlap(ideal, state));
        if (fidelity < 1.0 - 1e-9) ++result.failures;
    }
    result.failure_rate = double(result.failures) / double(shots);
    double sigma =
        std::sqrt(std::max(result.failure_rate * (1.0 - result.failure_rate), 1e-12) /
                  double(shots));
    result.ci_halfwidth = 3.0 * sigma;
    return result;
}

MemoryExperimentResult memory_experiment(const CssCode& css, double eta, std::size_t rounds,
                                         std::size_t shots, RandomSource& rng) {
    NoiseModel model;
    model.eta = eta;
    return memory_experiment(css, model, rounds, shots, rng);
}

}  // namespace qvm
