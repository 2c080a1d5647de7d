#pragma once

#include <cstdint>
#include <random>

namespace qvm {

// Seeded random source. Every randomized operation in the library takes one
// of these explicitly; there is no hidden global randomness. Child sources
// derived with derive(i) are statistically independent streams, so shots and
// repeats can be fanned out in any order (or in parallel) without changing
// results.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform double in [0, 1).
    double uniform() {
        return std::generate_canonical<double, 53>(engine_);
    }

    // Uniform integer in [0, bound).
    std::uint64_t uniform_int(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(engine_);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Independent child stream; deterministic in (seed, index).
    RandomSource derive(std::uint64_t index) const {
        return RandomSource(mix(seed_ ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL)));
    }

private:
    static std::uint64_t mix(std::uint64_t x);

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace qvm
