#include "qvm/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qvm {

namespace {
const GateMatrix& pauli_gate(PauliKind kind) {
    static const GateMatrix x = gates::pauli_x();
    static const GateMatrix y = gates::pauli_y();
    static const GateMatrix z = gates::pauli_z();
    switch (kind) {
        case PauliKind::X: return x;
        case PauliKind::Y: return y;
        default: return z;
    }
}
}  // namespace

void NoiseModel::validate() const {
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("eta must lie in [0, 1]");
    double sum = kind_probabilities[0] + kind_probabilities[1] + kind_probabilities[2];
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::domain_error("conditional Pauli distribution must sum to 1");
    }
    for (double p : kind_probabilities) {
        if (p < 0.0) throw std::domain_error("negative probability");
    }
}

std::vector<PauliError> apply_noise(StateVector& state, const NoiseModel& model,
                                    RandomSource& rng) {
    model.validate();
    std::vector<PauliError> sampled;
    for (std::size_t q = 0; q < state.num_qubits(); ++q) {
        if (!rng.bernoulli(model.eta)) continue;
        double u = rng.uniform();
        PauliKind kind = u < model.kind_probabilities[0]                             ? PauliKind::X
                         : u < model.kind_probabilities[0] + model.kind_probabilities[1]
                             ? PauliKind::Y
                             : PauliKind::Z;
        apply_gate(state, pauli_gate(kind), {q});
        sampled.push_back({q, kind});
    }
    return sampled;
}

std::vector<PauliError> apply_gate_noise(StateVector& state,
                                         const std::vector<std::size_t>& targets, double eta,
                                         RandomSource& rng) {
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("eta must lie in [0, 1]");
    std::vector<PauliError> sampled;
    if (targets.empty() || !rng.bernoulli(eta)) return sampled;
    // joint Pauli, uniform over the 4^k - 1 non-identity combinations
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < targets.size(); ++i) combos *= 4;
    std::uint64_t pick = 1 + rng.uniform_int(combos - 1);
    for (std::size_t q : targets) {
        std::uint64_t code = pick & 3u;
        pick >>= 2;
        if (code == 0) continue;
        PauliKind kind = code == 1 ? PauliKind::X : code == 2 ? PauliKind::Y : PauliKind::Z;
        apply_gate(state, pauli_gate(kind), {q});
        sampled.push_back({q, kind});
    }
    return sampled;
}

double binomial_coefficient(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double acc = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        acc = acc * double(n - i) / double(i + 1);
    }
    return acc;
}

WeightClassMass discretization_expand(double eta, std::size_t m, std::size_t cutoff) {
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("eta must lie in [0, 1]");
    if (cutoff > m) throw std::domain_error("cutoff exceeds the qubit count");
    WeightClassMass out;
    double total = 0.0;
    for (std::size_t j = 0; j <= cutoff; ++j) {
        double p = binomial_coefficient(m, j) * std::pow(eta, double(j)) *
                   std::pow(1.0 - eta, double(m - j));
        out.mass.push_back(p);
        total += p;
    }
    out.tail = 1.0 - total;
    if (out.tail < 0.0 && out.tail > -1e-12) out.tail = 0.0;
    return out;
}

}  // namespace qvm
