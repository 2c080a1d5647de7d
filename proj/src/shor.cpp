#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qvm/phase_estimation.hpp"
#include "qvm/shor.hpp"
#include "qvm/state_vector.hpp"
#include "qvm/transforms.hpp"

namespace qvm {

namespace {

std::size_t bits_for(std::uint64_t value) {
    std::size_t n = 1;
    while ((std::uint64_t(1) << n) <= value) ++n;
    return n;
}

std::uint64_t default_fourier_q(std::uint64_t n) {
    std::uint64_t q = 1;
    while (q < n * n) q <<= 1;
    return q;
}

struct ShorRegisters {
    std::uint64_t q;          // Fourier modulus, power of two
    std::size_t lq;           // first-register qubits
    std::size_t ln;           // second-register qubits
    std::vector<std::size_t> first, second;
};

ShorRegisters plan_registers(const OrderProblem& problem) {
    ShorRegisters r;
    r.q = problem.fourier_q ? problem.fourier_q : default_fourier_q(problem.modulus);
    if ((r.q & (r.q - 1)) != 0 || r.q < problem.modulus * problem.modulus) {
        throw std::domain_error("Fourier modulus must be a power of two at least N^2");
    }
    r.lq = bits_for(r.q - 1);
    r.ln = bits_for(problem.modulus - 1);
    for (std::size_t i = 0; i < r.lq; ++i) r.first.push_back(i);
    for (std::size_t i = 0; i < r.ln; ++i) r.second.push_back(r.lq + i);
    return r;
}

void check_problem(const OrderProblem& problem) {
    if (problem.modulus < 2) throw std::domain_error("modulus must be at least 2");
    if (problem.base < 1 || problem.base >= problem.modulus ||
        std::gcd(problem.base, problem.modulus) != 1) {
        throw std::domain_error("base must be coprime to the modulus");
    }
}

// The state after uniform superposition and the modular-exponentiation query:
// sum_l |l> |Y^l mod N>, normalized.
StateVector shor_pre_measurement_state(const OrderProblem& problem, const ShorRegisters& regs) {
    StateVector state = StateVector::basis_state(regs.lq + regs.ln, 0);
    qfft_mod2m(state, regs.first);  // on |0> this is the uniform superposition

    // Subroutine |l>|d> -> |l>|d xor Y^l mod N>, executed as a permutation
    // over the precomputed power table.
    std::vector<complex_t> next(state.dim(), complex_t(0, 0));
    std::uint64_t power = 1;
    std::vector<std::uint64_t> table(regs.q);
    for (std::uint64_t l = 0; l < regs.q; ++l) {
        table[l] = power;
        power = power * problem.base % problem.modulus;
    }
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (amps[i] == complex_t(0, 0)) continue;
        std::uint64_t l = i >> regs.ln;
        std::uint64_t d = i & ((std::uint64_t(1) << regs.ln) - 1);
        next[(l << regs.ln) | (d ^ table[l])] = amps[i];
    }
    state.mutable_amplitudes() = std::move(next);
    return state;
}

bool verify_order(std::uint64_t candidate, const OrderProblem& problem) {
    return candidate >= 1 && modpow(problem.base, candidate, problem.modulus) == 1;
}

}  // namespace

OrderResult shor_order(const OrderProblem& problem, RandomSource& rng, std::size_t max_repeats) {
    check_problem(problem);
    ShorRegisters regs = plan_registers(problem);

    OrderResult result;
    result.qubits_used = regs.lq + regs.ln;
    std::optional<std::uint64_t> best;

    // Classical table of the modular-exponentiation subroutine, and the
    // index sets it partitions [0, Q) into (one periodic set per value).
    std::vector<std::uint64_t> table(regs.q);
    std::uint64_t power = 1;
    for (std::uint64_t l = 0; l < regs.q; ++l) {
        table[l] = power;
        power = power * problem.base % problem.modulus;
    }
    std::map<std::uint64_t, std::vector<std::uint64_t>> periodic_sets;
    for (std::uint64_t l = 0; l < regs.q; ++l) periodic_sets[table[l]].push_back(l);

    for (std::size_t rep = 0; rep < max_repeats; ++rep) {
        RandomSource run = rng.derive(rep);
        OrderRepeat record;

        // Measuring the second register picks a periodic set with weight
        // proportional to its size; the first register collapses to the
        // uniform superposition over that set.
        record.second_register = table[run.uniform_int(regs.q)];
        const std::vector<std::uint64_t>& support = periodic_sets[record.second_register];
        std::vector<complex_t> amps(regs.q, complex_t(0, 0));
        double scale = 1.0 / std::sqrt(double(support.size()));
        for (std::uint64_t l : support) amps[l] = complex_t(scale, 0);
        StateVector first = StateVector::from_amplitudes(regs.lq, std::move(amps));

        std::vector<std::size_t> all(regs.lq);
        for (std::size_t i = 0; i < regs.lq; ++i) all[i] = i;
        qfft_mod2m(first, all);
        record.measured_k = measure_qubits(first, all, run).outcome_bits();

        record.convergent =
            continued_fraction_approx(record.measured_k, regs.q, problem.modulus);
        record.candidate = record.convergent.denominator;
        if (verify_order(record.candidate, problem)) {
            record.accepted = true;
            if (!best || record.candidate < *best) best = record.candidate;
        } else {
            record.note = "denominator fails Y^d = 1 mod N";
        }
        result.repeats.push_back(record);
        // Stop once the minimal verified candidate has been seen twice.
        std::size_t confirmations = 0;
        for (const auto& r : result.repeats) {
            if (r.accepted && best && r.candidate == *best) ++confirmations;
        }
        if (best && confirmations >= 2) break;
    }
    result.order = best;
    return result;
}

std::vector<double> shor_measured_k_distribution(const OrderProblem& problem) {
    check_problem(problem);
    ShorRegisters regs = plan_registers(problem);
    StateVector state = shor_pre_measurement_state(problem, regs);
    // The Fourier transform on the first register commutes with measuring
    // the second, so Prob(k) marginalizes over the second register.
    qfft_mod2m(state, regs.first);
    std::vector<double> dist(regs.q, 0.0);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        dist[i >> regs.ln] += std::norm(state.amplitude(i));
    }
    return dist;
}

double shor_good_k_mass(const OrderProblem& problem, std::uint64_t order) {
    std::vector<double> dist = shor_measured_k_distribution(problem);
    const std::uint64_t q = dist.size();
    double mass = 0.0;
    for (std::uint64_t k = 0; k < q; ++k) {
        // centered residue of k r mod Q in (-Q/2, Q/2]
        std::uint64_t res = (unsigned __int128)(k)*order % q;
        std::int64_t centered = std::int64_t(res);
        if (res > q / 2) centered = std::int64_t(res) - std::int64_t(q);
        if (2 * std::abs(centered) <= std::int64_t(order)) mass += dist[k];
    }
    return mass;
}

OrderResult kitaev_order(std::uint64_t modulus, std::uint64_t base, unsigned precision_bits,
                         RandomSource& rng, std::size_t max_repeats) {
    OrderProblem problem{modulus, base, 0};
    check_problem(problem);
    if (precision_bits == 0) {
        precision_bits = unsigned(std::ceil(2.0 * std::log2(double(modulus)))) + 1;
    }
    const std::size_t arity = bits_for(modulus - 1);
    PoweredUnitary u = powered_from_mod_multiply(modulus, base, arity);
    std::size_t m = phase_samples_per_level(precision_bits, 6);

    OrderResult result;
    result.qubits_used = arity + 1;  // register plus one control at a time
    std::optional<std::uint64_t> best;

    for (std::size_t rep = 0; rep < max_repeats; ++rep) {
        RandomSource run = rng.derive(rep);
        // |1> is the uniform superposition of all eigenvectors |Psi_a>; the
        // trajectory collapses onto one of them and reads theta ~ 2 pi a / r.
        StateVector reg = StateVector::basis_state(arity, 1);
        PhaseEstimate est = estimate_phase(u, reg, precision_bits, m, run);

        OrderRepeat record;
        record.measured_k = 0;
        if (!est.consistent) {
            record.note = "phase levels inconsistent";
            result.repeats.push_back(record);
            continue;
        }
        double angle = est.theta / (2.0 * std::numbers::pi);
        std::uint64_t scale = std::uint64_t(1) << (precision_bits + 1);
        std::uint64_t k = std::uint64_t(std::llround(angle * double(scale))) % scale;
        record.measured_k = k;
        record.convergent = continued_fraction_approx(k, scale, modulus);
        record.candidate = record.convergent.denominator;
        if (verify_order(record.candidate, problem)) {
            record.accepted = true;
            if (!best || record.candidate < *best) best = record.candidate;
        } else {
            record.note = "denominator fails Y^d = 1 mod N";
        }
        result.repeats.push_back(record);
        std::size_t confirmations = 0;
        for (const auto& r : result.repeats) {
            if (r.accepted && best && r.candidate == *best) ++confirmations;
        }
        if (best && confirmations >= 2) break;
    }
    result.order = best;
    return result;
}

FactorResult factor(std::uint64_t n, RandomSource& rng, bool use_kitaev,
                    std::size_t max_attempts) {
    FactorResult result;
    if (n < 4) throw std::domain_error("nothing to factor below 4");
    if (n % 2 == 0) {
        result.factor = 2;
        result.method = "even";
        return result;
    }
    if (is_prime(n)) throw std::domain_error(std::to_string(n) + " is prime");
    if (auto p = prime_power_root(n)) {
        result.factor = *p;
        result.method = "prime-power";
        return result;
    }

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        RandomSource run = rng.derive(attempt);
        std::uint64_t y = 2 + run.uniform_int(n - 3);
        FactorAttempt rec;
        rec.y = y;
        std::uint64_t g = std::gcd(y, n);
        if (g > 1) {
            rec.note = "gcd shortcut";
            result.attempts.push_back(rec);
            result.factor = g;
            result.method = "gcd";
            return result;
        }

        OrderResult order = use_kitaev ? kitaev_order(n, y, 0, run)
                                       : shor_order(OrderProblem{n, y, 0}, run);
        if (!order.order) {
            rec.note = "order finding exhausted its repeats";
            result.attempts.push_back(rec);
            continue;
        }
        std::uint64_t r = *order.order;
        rec.order = r;
        if (r % 2 != 0) {
            rec.note = "odd order";
            result.attempts.push_back(rec);
            continue;
        }
        std::uint64_t half = modpow(y, r / 2, n);
        if (half == n - 1) {
            rec.note = "Y^{r/2} = -1 mod N";
            result.attempts.push_back(rec);
            continue;
        }
        std::uint64_t f = std::gcd(half >= 1 ? half - 1 : 0, n);
        if (f == 1 || f == n) f = std::gcd(half + 1, n);
        if (f > 1 && f < n) {
            rec.note = "split via gcd(Y^{r/2} +- 1, N)";
            result.attempts.push_back(rec);
            result.factor = f;
            result.method = "order";
            return result;
        }
        rec.note = "no split";
        result.attempts.push_back(rec);
    }
    result.method = "exhausted";
    return result;
}

}  // namespace qvm
