#include "qvm/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qvm/transforms.hpp"

namespace qvm {

DeutschJozsaResult deutsch_jozsa(const Oracle& oracle, RandomSource& rng) {
    const std::size_t n = oracle.input_width();
    if (oracle.output_width() != 1) throw std::domain_error("Deutsch-Jozsa wants a Boolean oracle");

    Circuit c;
    c.num_qubits = n + 1;
    c.oracles.emplace("f", oracle);
    std::vector<std::size_t> first(n);
    for (std::size_t i = 0; i < n; ++i) first[i] = i;

    c.add_gate("x", {}, {n});  // |0^n> tensor |1>
    for (std::size_t q : first) c.add_gate("h", {}, {q});
    c.add_gate("h", {}, {n});
    c.add_query("f", first, {n});
    for (std::size_t q : first) c.add_gate("h", {}, {q});
    c.add_measurement(first, "first");

    RunResult r = execute(c, 0, rng, false);
    const std::string& bits = r.registers.at("first");
    bool all_zero = bits.find('1') == std::string::npos;
    return DeutschJozsaResult{all_zero ? PromiseTag::Constant : PromiseTag::Balanced, bits,
                              r.oracle_queries};
}

std::vector<std::uint64_t> f2_nullspace(const std::vector<std::uint64_t>& rows, std::size_t n) {
    if (n == 0 || n > 63) throw std::domain_error("bit width out of range");
    // Gauss elimination; pivots indexed by bit position (MSB first).
    std::vector<std::uint64_t> reduced;
    std::vector<std::size_t> pivot_bits;
    for (std::uint64_t row : rows) {
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if ((row >> (n - 1 - pivot_bits[i])) & 1u) row ^= reduced[i];
        }
        if (row == 0) continue;
        std::size_t bit = 0;
        while (!((row >> (n - 1 - bit)) & 1u)) ++bit;
        // keep earlier rows reduced against the new pivot
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if ((reduced[i] >> (n - 1 - bit)) & 1u) reduced[i] ^= row;
        }
        reduced.push_back(row);
        pivot_bits.push_back(bit);
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t b : pivot_bits) is_pivot[b] = true;

    std::vector<std::uint64_t> basis;
    for (std::size_t free_bit = 0; free_bit < n; ++free_bit) {
        if (is_pivot[free_bit]) continue;
        std::uint64_t v = std::uint64_t(1) << (n - 1 - free_bit);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if ((reduced[i] >> (n - 1 - free_bit)) & 1u) {
                v |= std::uint64_t(1) << (n - 1 - pivot_bits[i]);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

SimonResult simon(const Oracle& oracle, std::size_t repetitions, RandomSource& rng) {
    const std::size_t n = oracle.input_width();
    if (oracle.output_width() != n) {
        throw std::domain_error("Simon's problem uses an n-bit-to-n-bit oracle");
    }

    Circuit c;
    c.num_qubits = 2 * n;
    c.oracles.emplace("f", oracle);
    std::vector<std::size_t> first(n), second(n);
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = i;
        second[i] = n + i;
    }
    for (std::size_t q : first) c.add_gate("h", {}, {q});
    c.add_query("f", first, second);
    for (std::size_t q : first) c.add_gate("h", {}, {q});
    c.add_measurement(first, "k");

    SimonResult result;
    result.oracle_queries = 0;
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        RandomSource shot = rng.derive(rep);
        RunResult r = execute(c, 0, shot, false);
        result.oracle_queries += r.oracle_queries;
        result.samples.push_back(std::stoull(r.registers.at("k"), nullptr, 2));
    }

    std::vector<std::uint64_t> basis = f2_nullspace(result.samples, n);
    result.nullspace_dimension = basis.size();
    if (basis.empty()) {
        result.tag = PromiseTag::OneToOne;
    } else {
        result.tag = PromiseTag::TwoToOne;
        result.s = basis.front();
    }
    return result;
}

Oracle make_simon_oracle(std::size_t n, std::uint64_t s, RandomSource& rng) {
    const std::uint64_t size = std::uint64_t(1) << n;
    std::vector<std::uint64_t> values(size);
    for (std::uint64_t i = 0; i < size; ++i) values[i] = i;
    // Fisher-Yates with the seeded source.
    for (std::uint64_t i = size - 1; i > 0; --i) {
        std::uint64_t j = rng.uniform_int(i + 1);
        std::swap(values[i], values[j]);
    }
    std::vector<std::uint64_t> table(size);
    if (s == 0) {
        table = values;  // a random permutation: one-to-one
    } else {
        std::uint64_t next = 0;
        std::vector<bool> assigned(size, false);
        for (std::uint64_t i = 0; i < size; ++i) {
            if (assigned[i]) continue;
            std::uint64_t v = values[next++];
            table[i] = v;
            table[i ^ s] = v;
            assigned[i] = true;
            assigned[i ^ s] = true;
        }
    }
    return Oracle(std::move(table), n);
}

Oracle make_balanced_oracle(std::size_t n, std::uint64_t ones_mask_index) {
    // Interprets ones_mask_index as a subset bitmap over the 2^n inputs;
    // the caller guarantees it selects exactly half of them.
    const std::uint64_t size = std::uint64_t(1) << n;
    std::vector<std::uint64_t> table(size);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < size; ++i) {
        table[i] = (ones_mask_index >> i) & 1u;
        count += table[i];
    }
    if (count != size / 2) throw std::domain_error("subset is not balanced");
    return Oracle(std::move(table), 1);
}

void grover_oracle_reflection(StateVector& state, const Oracle& oracle) {
    auto& amps = state.mutable_amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (oracle.value(i)) amps[i] = -amps[i];
    }
}

void grover_diffusion(StateVector& state) {
    std::vector<std::size_t> all(state.num_qubits());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    qft_z2n(state, all);
    auto& amps = state.mutable_amplitudes();
    for (std::uint64_t i = 1; i < state.dim(); ++i) amps[i] = -amps[i];
    qft_z2n(state, all);
}

namespace {
StateVector grover_run(const Oracle& oracle, std::size_t iterations, std::size_t* queries) {
    StateVector state = StateVector::basis_state(oracle.input_width(), 0);
    std::vector<std::size_t> all(oracle.input_width());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    qft_z2n(state, all);
    for (std::size_t q = 0; q < iterations; ++q) {
        grover_oracle_reflection(state, oracle);
        if (queries) ++*queries;
        grover_diffusion(state);
    }
    return state;
}
}  // namespace

GroverResult grover_search(const Oracle& oracle, std::size_t marked_count, RandomSource& rng) {
    if (marked_count == 0) {
        throw std::domain_error("Grover search needs at least one marked item");
    }
    const double n_items = double(oracle.size());
    GroverResult result;
    result.theta = std::asin(std::sqrt(double(marked_count) / n_items));
    result.iterations =
        std::size_t(std::floor(std::numbers::pi / 4.0 * std::sqrt(n_items / double(marked_count))));

    StateVector state = grover_run(oracle, result.iterations, &result.oracle_queries);
    result.predicted_success =
        std::pow(std::sin((2.0 * double(result.iterations) + 1.0) * result.theta), 2);

    std::vector<std::size_t> all(oracle.input_width());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    MeasurementRecord rec = measure_qubits(state, all, rng);
    result.index = rec.outcome_bits();
    result.success = oracle.value(result.index) == 1;
    ++result.oracle_queries;  // the classical verification lookup
    return result;
}

double grover_success_probability(const Oracle& oracle, std::size_t iterations) {
    StateVector state = grover_run(oracle, iterations, nullptr);
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (oracle.value(i)) p += std::norm(state.amplitude(i));
    }
    return p;
}

}  // namespace qvm
