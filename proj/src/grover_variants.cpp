#include "qvm/grover_variants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qvm/algorithms.hpp"
#include "qvm/phase_estimation.hpp"
#include "qvm/transforms.hpp"

namespace qvm {

namespace {

// Iteration ladder for searches with unknown marked count: a few uniform
// samples, then every rotation count up to the t=1 optimum, twice over.
std::vector<std::size_t> search_ladder(std::uint64_t n_items) {
    std::size_t qmax =
        std::size_t(std::ceil(std::numbers::pi / 4.0 * std::sqrt(double(n_items))));
    std::vector<std::size_t> ladder;
    for (int round = 0; round < 2; ++round) {
        for (std::size_t q = 0; q <= qmax; ++q) ladder.push_back(q);
    }
    return ladder;
}

// Grover run with the predicate as the marking; returns a measured index.
std::uint64_t predicate_search_once(const Predicate& pred, std::size_t domain_bits,
                                    std::size_t iterations, RandomSource& rng,
                                    std::size_t* queries) {
    StateVector state = StateVector::basis_state(domain_bits, 0);
    std::vector<std::size_t> all(domain_bits);
    for (std::size_t i = 0; i < domain_bits; ++i) all[i] = i;
    qft_z2n(state, all);
    for (std::size_t q = 0; q < iterations; ++q) {
        auto& amps = state.mutable_amplitudes();
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            if (pred(i)) amps[i] = -amps[i];
        }
        if (queries) ++*queries;
        grover_diffusion(state);
    }
    std::vector<std::size_t> qs(domain_bits);
    for (std::size_t i = 0; i < domain_bits; ++i) qs[i] = i;
    return measure_qubits(state, qs, rng).outcome_bits();
}

// Ladder search: returns a verified marked index, or nullopt if the whole
// ladder misses (the set is empty with high probability).
std::optional<std::uint64_t> ladder_search(const Predicate& pred, std::size_t domain_bits,
                                           RandomSource& rng, std::size_t* queries) {
    std::uint64_t n_items = std::uint64_t(1) << domain_bits;
    std::size_t attempt = 0;
    for (std::size_t q : search_ladder(n_items)) {
        RandomSource shot = rng.derive(attempt++);
        std::uint64_t candidate = predicate_search_once(pred, domain_bits, q, shot, queries);
        if (queries) ++*queries;  // classical verification
        if (pred(candidate)) return candidate;
    }
    return std::nullopt;
}

std::size_t bit_width_of(std::size_t count) {
    std::size_t n = 0;
    while ((std::size_t(1) << n) < count) ++n;
    return n;
}

}  // namespace

MinimumResult find_minimum(const std::vector<std::int64_t>& values, RandomSource& rng) {
    if (values.empty()) throw std::domain_error("empty table");
    std::size_t n = bit_width_of(values.size());
    if ((std::size_t(1) << n) != values.size()) {
        throw std::domain_error("table length must be a power of two");
    }
    MinimumResult result;
    if (n == 0) {
        result.value = values[0];
        return result;
    }

    // Threshold descent: keep Grover-searching the strictly-smaller set.
    std::uint64_t best_index = rng.uniform_int(values.size());
    std::int64_t best = values[best_index];
    ++result.oracle_queries;
    std::uint64_t round = 0;
    while (true) {
        Predicate below = [&](std::uint64_t i) { return values[i] < best; };
        RandomSource branch = rng.derive(1000 + round++);
        auto hit = ladder_search(below, n, branch, &result.oracle_queries);
        if (!hit) break;
        best_index = *hit;
        best = values[best_index];
        ++result.oracle_queries;
    }

    // Smallest index attaining the minimum: binary search on the index
    // prefix, each existence test another ladder search.
    std::uint64_t lo = 0, hi = best_index;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        Predicate in_prefix = [&](std::uint64_t i) { return values[i] == best && i <= mid; };
        RandomSource branch = rng.derive(5000 + round++);
        auto hit = ladder_search(in_prefix, n, branch, &result.oracle_queries);
        if (hit) {
            hi = std::min<std::uint64_t>(*hit, mid);
        } else {
            lo = mid + 1;
        }
    }
    result.index = lo;
    result.value = best;
    return result;
}

GateMatrix grover_plane_rotation(double marked_fraction) {
    double p = marked_fraction;
    if (p < 0.0 || p > 1.0) throw std::domain_error("fraction out of range");
    double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
    // R_alpha = 2|alpha><alpha| - I on span{marked-uniform, unmarked-uniform},
    // D = diag(-1, 1). One iteration is R_alpha D R_alpha D.
    double ra[4] = {2 * p - 1, 2 * sp * sq, 2 * sp * sq, 1 - 2 * p};
    auto mul = [](const double a[4], const double b[4], double out[4]) {
        out[0] = a[0] * b[0] + a[1] * b[2];
        out[1] = a[0] * b[1] + a[1] * b[3];
        out[2] = a[2] * b[0] + a[3] * b[2];
        out[3] = a[2] * b[1] + a[3] * b[3];
    };
    double d[4] = {-1, 0, 0, 1};
    double rd[4], q1[4], q[4];
    mul(ra, d, rd);
    mul(rd, ra, q1);
    mul(q1, d, q);
    return GateMatrix(1, {q[0], q[1], q[2], q[3]});
}

BiasEstimate estimate_signed_eta(const Predicate& pred, std::size_t domain_bits, double eps,
                                 RandomSource& rng) {
    if (eps <= 0.0 || eps >= 1.0) throw std::domain_error("eps out of range");
    const std::uint64_t n_items = std::uint64_t(1) << domain_bits;

    // Domain-doubled predicate: second half all marked. With p the marked
    // fraction of `pred`, the doubled fraction is p_G = (1+p)/2, and the
    // rotation eigenphase pi + 2 asin(sqrt(...)) stays in [pi, 2pi], so
    // |cos(theta/2)| reads p_G regardless of which eigenvector the
    // trajectory collapsed onto.
    std::uint64_t marked = 0;
    for (std::uint64_t i = 0; i < n_items; ++i) {
        if (pred(i)) ++marked;
    }
    double p_doubled = (double(marked) / double(n_items) + 1.0) / 2.0;

    // The walk stays in the two-dimensional plane spanned by the marked and
    // unmarked uniform vectors, so the interferometer is simulated on that
    // plane; the measurement statistics are identical to the full register
    // (cross-checked in tests against the dense walk).
    double accuracy = eps / 8.0;
    unsigned precision_bits = 0;
    while (2.0 * std::numbers::pi / double(std::uint64_t(2) << precision_bits) > accuracy / 2.0) {
        ++precision_bits;
    }
    std::size_t m = phase_samples_per_level(precision_bits, 6);

    GateMatrix walk = grover_plane_rotation(p_doubled);
    PoweredUnitary powered = powered_from_gate(walk, precision_bits + 1);

    BiasEstimate out;
    double sp = std::sqrt(p_doubled), sq = std::sqrt(1.0 - p_doubled);
    for (int attempt = 0; attempt < 5; ++attempt) {
        StateVector plane = StateVector::from_amplitudes(1, {complex_t(sp, 0), complex_t(sq, 0)});
        RandomSource run = rng.derive(attempt);
        PhaseEstimate est = estimate_phase(powered, plane, precision_bits, m, run);
        out.rotations += (std::size_t(2) << precision_bits) * 2 * m;
        if (!est.consistent) {
            ++out.phase_retries;
            continue;
        }
        // Eigenphase 4 asin(sqrt(p_G)) with p_G >= 1/2 lives in [pi, 2pi];
        // |cos(theta/2)| = 2 p_G - 1 = p on either eigenvector branch.
        double p_hat = std::clamp(std::abs(std::cos(est.theta / 2.0)), 0.0, 1.0);
        out.eta = 2.0 * p_hat - 1.0;
        return out;
    }
    throw std::runtime_error("bias estimation failed to converge");
}

namespace {
// One-sided tests at tolerance eps, shared by the median search.
struct SideTest {
    double eta;
    bool heavy;  // more than (1 + 3 eps/4)/2 of the mass
};

SideTest side_test(const Predicate& pred, std::size_t bits, double eps, RandomSource& rng,
                   std::size_t* rotations) {
    BiasEstimate b = estimate_signed_eta(pred, bits, eps, rng);
    if (rotations) *rotations += b.rotations;
    return SideTest{b.eta, b.eta > 0.75 * eps};
}
}  // namespace

MedianResult estimate_median(const std::vector<std::int64_t>& values, double eps,
                             std::int64_t lo, std::int64_t hi, RandomSource& rng) {
    if (eps <= 0.0 || eps >= 0.5) throw std::domain_error("eps must lie in (0, 1/2)");
    std::size_t n = bit_width_of(values.size());
    if ((std::size_t(1) << n) != values.size()) {
        throw std::domain_error("table length must be a power of two");
    }
    MedianResult result;
    std::uint64_t salt = 0;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        ++result.guesses;
        Predicate above = [&](std::uint64_t i) { return values[i] > mid; };
        RandomSource r1 = rng.derive(salt++);
        SideTest t_above = side_test(above, n, eps, r1, &result.rotations);
        if (t_above.heavy) {  // too many items above mid
            lo = mid + 1;
            continue;
        }
        Predicate below = [&](std::uint64_t i) { return values[i] < mid; };
        RandomSource r2 = rng.derive(salt++);
        SideTest t_below = side_test(below, n, eps, r2, &result.rotations);
        if (t_below.heavy) {
            hi = mid - 1;
            continue;
        }
        result.median = mid;
        return result;
    }
    result.median = lo;
    ++result.guesses;
    return result;
}

MeanResult estimate_mean(const std::vector<double>& values, double eps, RandomSource& rng) {
    if (eps <= 0.0 || eps >= 0.5) throw std::domain_error("eps must lie in (0, 1/2)");
    std::size_t n = bit_width_of(values.size());
    if ((std::size_t(1) << n) != values.size()) {
        throw std::domain_error("table length must be a power of two");
    }
    for (double v : values) {
        if (v < -0.5 || v > 0.5) throw std::domain_error("values must lie in [-1/2, 1/2]");
    }

    // Shift to [0,1) and expand in binary; digit j has weight 2^-j. The
    // truncation after log2(2/eps) digits costs at most eps/2, and each
    // digit mean is estimated to eps/2.
    MeanResult result;
    result.digits = std::size_t(std::ceil(std::log2(2.0 / eps)));
    double acc = 0.0;
    for (std::size_t j = 1; j <= result.digits; ++j) {
        Predicate digit = [&](std::uint64_t i) {
            double shifted = std::min(values[i] + 0.5, 0.9999999999);
            return (std::uint64_t(std::ldexp(shifted, int(j))) & 1u) != 0;
        };
        RandomSource r = rng.derive(j);
        BiasEstimate b = estimate_signed_eta(digit, n, eps, r);
        result.rotations += b.rotations;
        double mj = (1.0 + b.eta) / 2.0;
        acc += std::ldexp(mj, -int(j));
    }
    result.mean = acc - 0.5;
    return result;
}

}  // namespace qvm
