#include "qvm/state_vector.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qvm {

namespace {
std::size_t g_max_qubits = 24;

void check_targets(std::size_t num_qubits, const std::vector<std::size_t>& targets) {
    std::uint64_t seen = 0;
    for (std::size_t q : targets) {
        if (q >= num_qubits) {
            throw std::domain_error("qubit index " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        std::uint64_t m = std::uint64_t(1) << q;
        if (seen & m) {
            throw std::domain_error("duplicate qubit index " + std::to_string(q));
        }
        seen |= m;
    }
}
}  // namespace

std::uint64_t MeasurementRecord::outcome_bits() const {
    std::uint64_t v = 0;
    for (int b : outcome) v = (v << 1) | std::uint64_t(b);
    return v;
}

std::size_t StateVector::max_qubits() { return g_max_qubits; }
void StateVector::set_max_qubits(std::size_t n) { g_max_qubits = n; }

StateVector StateVector::basis_state(std::size_t num_qubits, std::uint64_t basis_index) {
    if (num_qubits > g_max_qubits) {
        throw std::domain_error("qubit count " + std::to_string(num_qubits) +
                                " exceeds configured maximum " + std::to_string(g_max_qubits));
    }
    std::uint64_t dim = std::uint64_t(1) << num_qubits;
    if (basis_index >= dim) {
        throw std::domain_error("basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_.assign(dim, complex_t(0.0, 0.0));
    s.amps_[basis_index] = complex_t(1.0, 0.0);
    return s;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<complex_t> amps) {
    if (amps.size() != (std::uint64_t(1) << num_qubits)) {
        throw std::domain_error("amplitude vector length must be 2^num_qubits");
    }
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amps);
    s.check_norm();
    return s;
}

double StateVector::norm_squared() const {
    double n = 0.0;
    for (const auto& a : amps_) n += std::norm(a);
    return n;
}

void StateVector::check_norm() const {
    if (std::abs(norm_squared() - 1.0) > 1e-9) {
        throw std::runtime_error("state norm drifted: |c|^2 = " + std::to_string(norm_squared()));
    }
}

void apply_gate(StateVector& state, const GateMatrix& gate,
                const std::vector<std::size_t>& targets) {
    if (targets.size() != gate.arity()) {
        throw std::domain_error("gate arity " + std::to_string(gate.arity()) +
                                " does not match " + std::to_string(targets.size()) + " targets");
    }
    check_targets(state.num_qubits(), targets);

    const std::size_t k = gate.arity();
    const std::size_t n = state.num_qubits();
    const std::uint64_t dim = state.dim();
    const std::uint64_t block = std::uint64_t(1) << k;

    // Bit masks of the targets; matrix index bit j (MSB first) <-> targets[j].
    std::vector<std::uint64_t> tmask(k);
    std::uint64_t targets_union = 0;
    for (std::size_t j = 0; j < k; ++j) {
        tmask[j] = state.mask_of(targets[j]);
        targets_union |= tmask[j];
    }

    // Masks of the non-target bit positions, for expanding a (n-k)-bit
    // counter into a base index with all target bits zero.
    std::vector<std::uint64_t> rest;
    rest.reserve(n - k);
    for (std::size_t b = 0; b < n; ++b) {
        std::uint64_t m = std::uint64_t(1) << b;
        if (!(targets_union & m)) rest.push_back(m);
    }

    std::vector<complex_t>& amps = state.mutable_amplitudes();
    std::vector<complex_t> in(block), out(block);

    const std::uint64_t outer = dim >> k;
    for (std::uint64_t r = 0; r < outer; ++r) {
        std::uint64_t base = 0;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            if ((r >> b) & 1u) base |= rest[b];
        }
        for (std::uint64_t c = 0; c < block; ++c) {
            std::uint64_t idx = base;
            for (std::size_t j = 0; j < k; ++j) {
                if ((c >> (k - 1 - j)) & 1u) idx |= tmask[j];
            }
            in[c] = amps[idx];
        }
        for (std::uint64_t rrow = 0; rrow < block; ++rrow) {
            complex_t acc(0.0, 0.0);
            for (std::uint64_t c = 0; c < block; ++c) {
                acc += gate.at(rrow, c) * in[c];
            }
            out[rrow] = acc;
        }
        for (std::uint64_t c = 0; c < block; ++c) {
            std::uint64_t idx = base;
            for (std::size_t j = 0; j < k; ++j) {
                if ((c >> (k - 1 - j)) & 1u) idx |= tmask[j];
            }
            amps[idx] = out[c];
        }
    }
    state.check_norm();
}

double branch_probability(const StateVector& state,
                          const std::vector<std::size_t>& qubits,
                          const std::vector<int>& values) {
    if (qubits.size() != values.size()) {
        throw std::domain_error("qubit and value lists differ in length");
    }
    check_targets(state.num_qubits(), qubits);
    std::uint64_t mask = 0, want = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        std::uint64_t m = state.mask_of(qubits[j]);
        mask |= m;
        if (values[j]) want |= m;
    }
    double p = 0.0;
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & mask) == want) p += std::norm(amps[i]);
    }
    return p;
}

MeasurementRecord measure_qubits(StateVector& state,
                                 const std::vector<std::size_t>& qubits,
                                 RandomSource& rng) {
    check_targets(state.num_qubits(), qubits);
    if (std::abs(state.norm_squared()) < 1e-12) {
        throw std::runtime_error("cannot measure a zero state");
    }

    MeasurementRecord rec;
    rec.measured_qubits = qubits;
    rec.outcome_probability = 1.0;

    // Sequential conditional measurement, one qubit at a time.
    auto& amps = state.mutable_amplitudes();
    for (std::size_t q : qubits) {
        std::uint64_t m = state.mask_of(q);
        double p1 = 0.0;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if (i & m) p1 += std::norm(amps[i]);
        }
        int bit = rng.uniform() < p1 ? 1 : 0;
        double p = bit ? p1 : 1.0 - p1;
        if (p < 1e-12) {
            throw std::runtime_error("collapse onto a numerically zero branch");
        }
        double scale = 1.0 / std::sqrt(p);
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if (int((i & m) != 0) == bit) {
                amps[i] *= scale;
            } else {
                amps[i] = complex_t(0.0, 0.0);
            }
        }
        rec.outcome.push_back(bit);
        rec.outcome_probability *= p;
    }
    state.check_norm();
    return rec;
}

complex_t overlap(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::domain_error("overlap of states with different qubit counts");
    }
    complex_t acc(0.0, 0.0);
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return acc;
}

StateVector to_real_doubled(const StateVector& state) {
    std::vector<complex_t> out(state.dim() * 2);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        out[2 * i] = complex_t(state.amplitude(i).real(), 0.0);
        out[2 * i + 1] = complex_t(state.amplitude(i).imag(), 0.0);
    }
    return StateVector::from_amplitudes(state.num_qubits() + 1, std::move(out));
}

}  // namespace qvm
