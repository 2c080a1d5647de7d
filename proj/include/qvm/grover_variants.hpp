#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qvm/gate_matrix.hpp"
#include "qvm/rng.hpp"

namespace qvm {

// Boolean predicate over {0..N-1}; the unit of query cost for this module.
using Predicate = std::function<bool(std::uint64_t)>;

struct MinimumResult {
    std::uint64_t index = 0;
    std::int64_t value = 0;
    std::size_t oracle_queries = 0;  // marking queries plus classical value lookups
};

// Threshold-descent minimum search: each round Grover-searches the strictly
// smaller set with an iteration ladder (marked count unknown) and classical
// verification of candidates. Ties resolve to the smallest index via a
// prefix binary search using the same ladder. Expected budget
// O(sqrt(N) log N) queries.
MinimumResult find_minimum(const std::vector<std::int64_t>& values, RandomSource& rng);

// ---- Amplitude-bias estimation (the machinery behind median and mean) ----

struct BiasEstimate {
    double eta = 0.0;            // signed: fraction marked = (1 + eta)/2
    std::size_t rotations = 0;   // Grover-style rotations consumed
    std::size_t phase_retries = 0;
};

// Signed eta for a predicate over a 2^n domain, to accuracy +-eps/4, failure
// probability exponentially small in the internal sample sizes. Realized as
// Kitaev phase estimation on the two-reflection rotation operator of a
// domain-doubled oracle (second half all marked): the doubled fraction is
// at least 1/2, which pins the eigenphase 4 asin(sqrt(p_G)) inside [pi, 2pi]
// and makes |cos(theta/2)| read the fraction on either eigenvector branch.
// O(1/eps) rotations.
BiasEstimate estimate_signed_eta(const Predicate& pred, std::size_t domain_bits, double eps,
                                 RandomSource& rng);

struct MedianResult {
    std::int64_t median = 0;
    std::size_t rotations = 0;
    std::size_t guesses = 0;
};

// eps-approximate median by binary search over [lo, hi]: a value M such that
// neither strictly-below nor strictly-above holds more than (1+eps)N/2 items.
MedianResult estimate_median(const std::vector<std::int64_t>& values, double eps,
                             std::int64_t lo, std::int64_t hi, RandomSource& rng);

struct MeanResult {
    double mean = 0.0;
    std::size_t rotations = 0;
    std::size_t digits = 0;
};

// Mean of values in [-1/2, 1/2] to accuracy eps: shift to [0,1), estimate the
// Boolean mean of each of log2(2/eps) binary digits at eps/2, recombine.
MeanResult estimate_mean(const std::vector<double>& values, double eps, RandomSource& rng);

// The plane restriction of one two-reflection rotation for a marked fraction
// p (exposed for the cross-check against the full state-vector walk).
GateMatrix grover_plane_rotation(double marked_fraction);

}  // namespace qvm
