#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qvm/rng.hpp"
#include "qvm/state_vector.hpp"

namespace qvm::testing {

inline bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

inline bool close(const std::complex<double>& a, const std::complex<double>& b,
                  double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

// Random unit state for property tests.
inline StateVector random_state(std::size_t n, RandomSource& rng) {
    std::vector<complex_t> amps(std::size_t(1) << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = complex_t(rng.uniform() * 2.0 - 1.0, rng.uniform() * 2.0 - 1.0);
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return StateVector::from_amplitudes(n, std::move(amps));
}

// Random one-qubit unitary via G rotation and phases.
inline GateMatrix random_unitary_1q(RandomSource& rng) {
    double theta = rng.uniform() * 2.0 * 3.14159265358979323846;
    double phi = rng.uniform() * 2.0 * 3.14159265358979323846;
    double a = rng.uniform() * 2.0 * 3.14159265358979323846;
    double b = rng.uniform() * 2.0 * 3.14159265358979323846;
    GateMatrix g = gates::rotation(theta, phi);
    GateMatrix p1 = gates::phase_gate(a);
    GateMatrix p2 = gates::phase_gate(b);
    return p1.multiply(g).multiply(p2);
}

}  // namespace qvm::testing
