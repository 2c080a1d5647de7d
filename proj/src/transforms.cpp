#include "qvm/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qvm {

void qft_z2n(StateVector& state, const std::vector<std::size_t>& qubits) {
    GateMatrix h = gates::hadamard();
    for (std::size_t q : qubits) apply_gate(state, h, {q});
}

Circuit qfft_circuit(const std::vector<std::size_t>& qubits, std::size_t num_qubits,
                     std::size_t cutoff, bool inverse) {
    const std::size_t m = qubits.size();
    if (m == 0) throw std::domain_error("empty Fourier register");
    Circuit c;
    c.num_qubits = num_qubits;

    // Forward array: for each line i (most significant first) an H followed
    // by R_k conditioned on the lines below it; then reverse the bit order.
    for (std::size_t i = 0; i < m; ++i) {
        c.add_gate("h", {}, {qubits[i]});
        for (std::size_t j = i + 1; j < m; ++j) {
            std::size_t k = j - i + 1;
            if (cutoff != 0 && k > cutoff) continue;
            c.add_gate("crk", {double(k)}, {qubits[j], qubits[i]});
        }
    }
    for (std::size_t i = 0; i < m / 2; ++i) {
        c.add_gate("swap", {}, {qubits[i], qubits[m - 1 - i]});
    }
    if (inverse) c = inverse_circuit(c);
    validate_circuit(c);
    return c;
}

namespace {
void run_gates(StateVector& state, const Circuit& c) {
    for (const auto& op : c.operations) {
        const auto& g = std::get<GateApplication>(op);
        apply_gate(state, g.gate, g.targets);
    }
}
}  // namespace

void qfft_mod2m(StateVector& state, const std::vector<std::size_t>& qubits, bool inverse) {
    run_gates(state, qfft_circuit(qubits, state.num_qubits(), 0, inverse));
}

void approx_qfft(StateVector& state, const std::vector<std::size_t>& qubits,
                 std::size_t cutoff, bool inverse) {
    if (cutoff < 1) throw std::domain_error("cutoff must be at least 1");
    run_gates(state, qfft_circuit(qubits, state.num_qubits(), cutoff, inverse));
}

double approx_qfft_error_bound(std::size_t m, std::size_t cutoff) {
    double bound = 0.0;
    for (std::size_t k = cutoff + 1; k <= m; ++k) {
        double omitted = double(m - k + 1);
        double angle = 2.0 * std::numbers::pi / double(std::uint64_t(1) << k);
        bound += omitted * std::abs(complex_t(1.0, 0.0) - std::polar(1.0, angle));
    }
    return bound;
}

namespace {

// Recursive split: the range [0, Q) on qubits[from..] divides at the top
// qubit into a full half (uniform, H below) and a remainder prepared
// recursively; `conditions` pins the branch taken so far.
void prepare_recursive(StateVector& state, const std::vector<std::size_t>& qubits,
                       std::size_t from, std::uint64_t q_range,
                       std::vector<std::pair<std::size_t, int>>& conditions) {
    std::size_t remaining = qubits.size() - from;
    if (q_range == 1) return;  // the all-zero basis state

    auto conditioned = [&](const GateMatrix& one_qubit, std::size_t target) {
        if (conditions.empty()) {
            apply_gate(state, one_qubit, {target});
            return;
        }
        // Zero-valued conditions are conjugated with X around the control.
        GateMatrix x = gates::pauli_x();
        std::vector<std::size_t> targets;
        for (auto [q, v] : conditions) {
            if (v == 0) apply_gate(state, x, {q});
            targets.push_back(q);
        }
        targets.push_back(target);
        apply_gate(state, controlled(one_qubit, conditions.size()), targets);
        for (auto [q, v] : conditions) {
            if (v == 0) apply_gate(state, x, {q});
        }
    };

    std::uint64_t full = std::uint64_t(1) << remaining;
    if (q_range == full) {
        GateMatrix h = gates::hadamard();
        for (std::size_t i = from; i < qubits.size(); ++i) conditioned(h, qubits[i]);
        return;
    }
    std::uint64_t half = full >> 1;
    if (q_range <= half) {
        // Top qubit stays |0>; keep splitting below.
        prepare_recursive(state, qubits, from + 1, q_range, conditions);
        return;
    }

    std::uint64_t q0 = half;
    std::uint64_t q1 = q_range - q0;
    double c = std::sqrt(double(q0) / double(q_range));
    double s = std::sqrt(double(q1) / double(q_range));
    // |0> -> c|0> + s|1>, a real plane rotation.
    conditioned(GateMatrix(1, {c, -s, s, c}), qubits[from]);

    conditions.emplace_back(qubits[from], 0);
    prepare_recursive(state, qubits, from + 1, q0, conditions);
    conditions.back().second = 1;
    prepare_recursive(state, qubits, from + 1, q1, conditions);
    conditions.pop_back();
}

}  // namespace

StateVector prepare_fourier_zero(std::uint64_t q_modulus) {
    if (q_modulus < 2) throw std::domain_error("Fourier modulus must be at least 2");
    std::size_t n = 1;
    while ((std::uint64_t(1) << n) < q_modulus) ++n;
    StateVector state = StateVector::basis_state(n, 0);
    std::vector<std::size_t> qubits(n);
    for (std::size_t i = 0; i < n; ++i) qubits[i] = i;
    std::vector<std::pair<std::size_t, int>> conditions;
    prepare_recursive(state, qubits, 0, q_modulus, conditions);
    return state;
}

void phase_kick(StateVector& state, std::uint64_t q_modulus,
                const std::vector<std::size_t>& reg_a, const std::vector<std::size_t>& reg_b) {
    if (q_modulus < 1) throw std::domain_error("modulus must be positive");
    auto& amps = state.mutable_amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (amps[i] == complex_t(0.0, 0.0)) continue;
        std::uint64_t a = 0, b = 0;
        for (std::size_t q : reg_a) a = (a << 1) | std::uint64_t(state.bit_of(i, q));
        for (std::size_t q : reg_b) b = (b << 1) | std::uint64_t(state.bit_of(i, q));
        // a*b mod Q keeps the angle well conditioned
        std::uint64_t prod = (a % q_modulus) * (b % q_modulus) % q_modulus;
        amps[i] *= std::polar(1.0, 2.0 * std::numbers::pi * double(prod) / double(q_modulus));
    }
    state.check_norm();
}

Circuit garbage_free(const Circuit& compute, const std::vector<std::size_t>& result_qubits) {
    validate_circuit(compute);
    for (const auto& op : compute.operations) {
        if (std::holds_alternative<Measurement>(op)) {
            throw std::runtime_error("garbage_free requires a unitary computation");
        }
    }
    Circuit wrapped;
    wrapped.num_qubits = compute.num_qubits + result_qubits.size();
    wrapped.oracles = compute.oracles;
    for (const auto& op : compute.operations) wrapped.operations.push_back(op);
    for (std::size_t j = 0; j < result_qubits.size(); ++j) {
        if (result_qubits[j] >= compute.num_qubits) {
            throw std::runtime_error("result qubit out of range");
        }
        wrapped.add_gate("cnot", {}, {result_qubits[j], compute.num_qubits + j});
    }
    Circuit reversed = inverse_circuit(compute);
    for (const auto& op : reversed.operations) wrapped.operations.push_back(op);
    validate_circuit(wrapped);
    return wrapped;
}

}  // namespace qvm
