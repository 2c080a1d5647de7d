#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qvm/executor.hpp"
#include "qvm/oracle.hpp"
#include "qvm/rng.hpp"

namespace qvm {

// ---- Deutsch-Jozsa ----

enum class PromiseTag { Constant, Balanced, OneToOne, TwoToOne };

struct DeutschJozsaResult {
    PromiseTag tag;                 // Constant or Balanced
    std::string first_register;    // measured bits, 0^n iff constant
    std::size_t oracle_queries;    // always 1
};

// One-query classification of a promised constant-or-balanced oracle.
DeutschJozsaResult deutsch_jozsa(const Oracle& oracle, RandomSource& rng);

// ---- Simon ----

struct SimonResult {
    PromiseTag tag;                        // OneToOne or TwoToOne
    std::optional<std::uint64_t> s;        // recovered period when TwoToOne
    std::vector<std::uint64_t> samples;    // the measured k's
    std::size_t nullspace_dimension;
    std::size_t oracle_queries;
};

SimonResult simon(const Oracle& oracle, std::size_t repetitions, RandomSource& rng);

// Basis of {s : row . s = 0 mod 2 for every row}, each vector packed in a
// uint64 with bit width `n` (MSB-first like everything else here).
std::vector<std::uint64_t> f2_nullspace(const std::vector<std::uint64_t>& rows, std::size_t n);

// Random two-to-one table with hidden xor-period s (s != 0), or a random
// permutation when s == 0.
Oracle make_simon_oracle(std::size_t n, std::uint64_t s, RandomSource& rng);

// Balanced oracle from a chosen set of 2^{n-1} ones.
Oracle make_balanced_oracle(std::size_t n, std::uint64_t ones_mask_index);

// ---- Grover ----

struct GroverResult {
    std::uint64_t index = 0;           // measured candidate
    bool success = false;              // f(index) == 1
    std::size_t iterations = 0;
    double theta = 0.0;                // asin(sqrt(t/N))
    double predicted_success = 0.0;    // sin^2((2q+1) theta)
    std::size_t oracle_queries = 0;
};

// Known-t search: floor(pi/4 sqrt(N/t)) reflection rounds, then measure.
GroverResult grover_search(const Oracle& oracle, std::size_t marked_count, RandomSource& rng);

// Runs q iterations and returns the exact success probability (no sampling).
double grover_success_probability(const Oracle& oracle, std::size_t iterations);

// The two reflections, exposed for tests: R_b flips marked items' signs; R_a
// is FT . R_0 . FT, fixing |a> and negating its complement.
void grover_oracle_reflection(StateVector& state, const Oracle& oracle);
void grover_diffusion(StateVector& state);

}  // namespace qvm
