#include "qvm/phase_estimation.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qvm/executor.hpp"

namespace qvm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}
}  // namespace

PoweredUnitary powered_from_gate(const GateMatrix& u, unsigned max_level) {
    std::vector<GateMatrix> controlled_powers;
    GateMatrix p = u;
    for (unsigned j = 0; j <= max_level; ++j) {
        controlled_powers.push_back(controlled(p, 1));
        p = p.multiply(p);
    }
    PoweredUnitary out;
    out.arity = u.arity();
    out.apply_controlled_power = [powers = std::move(controlled_powers)](
                                     StateVector& state, std::size_t control,
                                     const std::vector<std::size_t>& reg, unsigned level) {
        if (level >= powers.size()) throw std::domain_error("power level beyond precomputation");
        std::vector<std::size_t> targets;
        targets.push_back(control);
        targets.insert(targets.end(), reg.begin(), reg.end());
        apply_gate(state, powers[level], targets);
    };
    return out;
}

PoweredUnitary powered_from_mod_multiply(std::uint64_t modulus, std::uint64_t multiplier,
                                         std::size_t arity) {
    if (modulus < 2 || (std::uint64_t(1) << arity) < modulus) {
        throw std::domain_error("register too small for the modulus");
    }
    PoweredUnitary out;
    out.arity = arity;
    out.apply_controlled_power = [modulus, multiplier, arity](
                                     StateVector& state, std::size_t control,
                                     const std::vector<std::size_t>& reg, unsigned level) {
        std::uint64_t m = multiplier % modulus;
        for (unsigned j = 0; j < level; ++j) m = m * m % modulus;

        const std::uint64_t dim = state.dim();
        std::vector<complex_t> next(dim, complex_t(0.0, 0.0));
        const auto& amps = state.amplitudes();
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (amps[i] == complex_t(0.0, 0.0)) continue;
            if (!state.bit_of(i, control)) {
                next[i] += amps[i];
                continue;
            }
            std::uint64_t g = 0;
            for (std::size_t q : reg) g = (g << 1) | std::uint64_t(state.bit_of(i, q));
            std::uint64_t g2 = g < modulus ? g * m % modulus : g;
            std::uint64_t idx = i;
            for (std::size_t b = 0; b < arity; ++b) {
                std::uint64_t bit_now = (g >> (arity - 1 - b)) & 1u;
                std::uint64_t bit_new = (g2 >> (arity - 1 - b)) & 1u;
                if (bit_now != bit_new) idx ^= state.mask_of(reg[b]);
            }
            next[idx] += amps[i];
        }
        state.mutable_amplitudes() = std::move(next);
        state.check_norm();
    };
    return out;
}

std::size_t phase_samples_per_level(unsigned precision_bits, unsigned safety) {
    return std::size_t(48) * (precision_bits + safety);
}

namespace {

// One interferometer shot: H on a fresh control, controlled-U^{2^level},
// optionally a -pi/2 phase on the control, H, measure the control. The
// register `reg` rides along (and collapses if it is not an eigenvector).
int interferometer_shot(const PoweredUnitary& powered, StateVector& reg, unsigned level,
                        bool quarter_phase, RandomSource& rng) {
    const std::size_t arity = powered.arity;
    StateVector combined = StateVector::basis_state(arity + 1, 0);
    {
        auto& amps = combined.mutable_amplitudes();
        for (std::uint64_t g = 0; g < reg.dim(); ++g) amps[g] = reg.amplitude(g);
    }
    std::vector<std::size_t> reg_qubits(arity);
    for (std::size_t i = 0; i < arity; ++i) reg_qubits[i] = i + 1;

    apply_gate(combined, gates::hadamard(), {0});
    powered.apply_controlled_power(combined, 0, reg_qubits, level);
    if (quarter_phase) {
        apply_gate(combined, gates::phase_gate(-std::numbers::pi / 2.0), {0});
    }
    apply_gate(combined, gates::hadamard(), {0});
    int bit = measure_qubits(combined, {0}, rng).outcome[0];

    auto& regs = reg.mutable_amplitudes();
    std::uint64_t offset = bit ? reg.dim() : 0;
    double nrm = 0.0;
    for (std::uint64_t g = 0; g < reg.dim(); ++g) {
        regs[g] = combined.amplitude(offset + g);
        nrm += std::norm(regs[g]);
    }
    // Repeated collapses would otherwise let rounding drift accumulate.
    nrm = std::sqrt(nrm);
    for (auto& a : regs) a /= nrm;
    reg.check_norm();
    return bit;
}

}  // namespace

PhaseEstimate estimate_phase(const PoweredUnitary& powered, StateVector& eigenstate,
                             unsigned precision_bits, std::size_t samples_per_level,
                             RandomSource& rng) {
    if (eigenstate.num_qubits() != powered.arity) {
        throw std::domain_error("eigenstate register does not match the unitary arity");
    }
    if (samples_per_level < 1) throw std::domain_error("need at least one sample per level");

    PhaseEstimate est;
    est.precision_bits = precision_bits;
    // Chernoff: P(|p_hat - p| >= 0.135) <= 2 exp(-2 m 0.135^2) per
    // interferometer; a union over 2(n+1) of them bounds the run failure.
    est.chernoff_failure_bound = 2.0 * double(precision_bits + 1) * 2.0 *
                                 std::exp(-2.0 * double(samples_per_level) * 0.135 * 0.135);

    std::vector<double> coarse(precision_bits + 1);
    for (unsigned j = 0; j <= precision_bits; ++j) {
        PhaseLevel lvl;
        lvl.level = j;
        lvl.samples = samples_per_level;
        for (std::size_t s = 0; s < samples_per_level; ++s) {
            lvl.cos_ones += interferometer_shot(powered, eigenstate, j, false, rng);
        }
        for (std::size_t s = 0; s < samples_per_level; ++s) {
            lvl.sin_ones += interferometer_shot(powered, eigenstate, j, true, rng);
        }
        double cos_est = 1.0 - 2.0 * double(lvl.cos_ones) / double(samples_per_level);
        double sin_est = 1.0 - 2.0 * double(lvl.sin_ones) / double(samples_per_level);
        double angle = std::atan2(sin_est, cos_est);
        if (angle < 0) angle += kTwoPi;
        lvl.coarse = angle;
        coarse[j] = angle;
        est.levels.push_back(lvl);
    }

    try {
        est.theta = reconstruct_theta(coarse);
        est.consistent = true;
    } catch (const std::runtime_error&) {
        // Levels disagree beyond their confidence bounds; report the level-0
        // reading and flag the estimate (non-eigenvector input, typically).
        est.theta = coarse[0];
        est.consistent = false;
    }
    return est;
}

std::vector<double> counting_register_distribution(const PoweredUnitary& powered,
                                                   const StateVector& eigenstate,
                                                   unsigned level, std::size_t m) {
    if (m == 0 || m > 12) throw std::domain_error("counting construction supports 1..12 controls");
    if (eigenstate.num_qubits() != powered.arity) {
        throw std::domain_error("eigenstate register does not match the unitary arity");
    }
    std::size_t count_bits = 1;
    while ((std::size_t(1) << count_bits) < m + 1) ++count_bits;
    const std::size_t total = m + powered.arity + count_bits;

    // |0^m> (x) eigenstate (x) |0^c>
    StateVector state = StateVector::basis_state(total, 0);
    {
        auto& amps = state.mutable_amplitudes();
        amps[0] = complex_t(0, 0);
        for (std::uint64_t g = 0; g < eigenstate.dim(); ++g) {
            amps[g << count_bits] = eigenstate.amplitude(g);
        }
    }
    std::vector<std::size_t> reg(powered.arity);
    for (std::size_t i = 0; i < powered.arity; ++i) reg[i] = m + i;

    GateMatrix h = gates::hadamard();
    for (std::size_t c = 0; c < m; ++c) {
        apply_gate(state, h, {c});
        powered.apply_controlled_power(state, c, reg, level);
        apply_gate(state, h, {c});
    }

    // |i>|0> -> |i>|w(i)>: the weight function as a permutation query.
    std::vector<std::uint64_t> weight_table(std::uint64_t(1) << m);
    for (std::uint64_t i = 0; i < weight_table.size(); ++i) {
        weight_table[i] = std::uint64_t(std::popcount(i));
    }
    Oracle counter(std::move(weight_table), count_bits);
    std::vector<std::size_t> controls(m), counting(count_bits);
    for (std::size_t i = 0; i < m; ++i) controls[i] = i;
    for (std::size_t i = 0; i < count_bits; ++i) counting[i] = m + powered.arity + i;
    apply_oracle_query(state, counter, controls, counting);

    std::vector<double> dist(m + 1, 0.0);
    std::uint64_t count_mask = (std::uint64_t(1) << count_bits) - 1;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        double p = std::norm(state.amplitude(i));
        if (p == 0.0) continue;
        std::uint64_t w = i & count_mask;
        if (w <= m) dist[w] += p;
    }
    return dist;
}

double reconstruct_theta(const std::vector<double>& coarse) {
    if (coarse.empty()) throw std::domain_error("no coarse estimates");
    const std::size_t n = coarse.size() - 1;

    // Work in turns. omega approximates frac(2^j omega_true) at level j.
    double omega = coarse[n] / kTwoPi;
    for (std::size_t j = n; j-- > 0;) {
        double c = coarse[j] / kTwoPi;
        double cand0 = omega / 2.0;
        double cand1 = omega / 2.0 + 0.5;
        auto turn_dist = [](double a, double b) {
            double d = std::fmod(std::abs(a - b), 1.0);
            return std::min(d, 1.0 - d);
        };
        omega = turn_dist(cand0, c) <= turn_dist(cand1, c) ? cand0 : cand1;
    }

    // Verify every level against the reconstruction; the promised per-level
    // error is pi/8, and the refinement itself is accurate to 2^{j-n}/16 of
    // a turn at level j, so pi/4 of slack covers a consistent input.
    for (std::size_t j = 0; j <= n; ++j) {
        double predicted = std::fmod(std::ldexp(omega, int(j)), 1.0) * kTwoPi;
        if (circle_distance(predicted, coarse[j]) > std::numbers::pi / 4.0 + 1e-9) {
            throw std::runtime_error("phase levels are mutually inconsistent");
        }
    }
    double theta = std::fmod(omega, 1.0) * kTwoPi;
    if (theta < 0) theta += kTwoPi;
    return theta;
}

}  // namespace qvm
