#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace qvm {

// Three-bit repetition code for one classical bit.
std::array<int, 3> majority3_encode(int bit);
int majority3_decode(const std::array<int, 3>& bits);
// eta_e = 3 eta^2 (1 - eta) + eta^3; fixed point at eta = 1/2.
double eta_eff_majority(double eta);

// C(A, d+1) eta^{d+1}: counting bound on more than d errors in a procedure
// of area A.
double effective_noise_bound(std::size_t area, std::size_t correctable, double eta);

// eta_{j+1} = C(A, d+1) eta_j^{d+1}, levels entries 0..r.
std::vector<double> concatenation_trajectory(double eta0, std::size_t area,
                                             std::size_t correctable, std::size_t levels);

// Positive fixed point eta_c = C(A, d+1)^{-1/d}.
double threshold(std::size_t area, std::size_t correctable);

// Smallest recursion depth driving the trajectory below `target` (caps at
// `max_levels`); grows like log log(1/target) below threshold.
std::size_t levels_to_reach(double eta0, std::size_t area, std::size_t correctable,
                            double target, std::size_t max_levels = 64);

}  // namespace qvm
