#include "qvm/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include "qvm/noise.hpp"

namespace qvm {

std::array<int, 3> majority3_encode(int bit) {
    if (bit != 0 && bit != 1) throw std::domain_error("bit must be 0 or 1");
    return {bit, bit, bit};
}

int majority3_decode(const std::array<int, 3>& bits) {
    return bits[0] + bits[1] + bits[2] >= 2 ? 1 : 0;
}

double eta_eff_majority(double eta) {
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("eta must lie in [0, 1]");
    return 3.0 * eta * eta * (1.0 - eta) + eta * eta * eta;
}

double effective_noise_bound(std::size_t area, std::size_t correctable, double eta) {
    if (area < correctable + 1) throw std::domain_error("area must be at least d + 1");
    return binomial_coefficient(area, correctable + 1) * std::pow(eta, double(correctable + 1));
}

std::vector<double> concatenation_trajectory(double eta0, std::size_t area,
                                             std::size_t correctable, std::size_t levels) {
    std::vector<double> out;
    out.reserve(levels + 1);
    double eta = eta0;
    out.push_back(eta);
    for (std::size_t j = 0; j < levels; ++j) {
        eta = effective_noise_bound(area, correctable, eta);
        out.push_back(eta);
    }
    return out;
}

double threshold(std::size_t area, std::size_t correctable) {
    if (correctable == 0) throw std::domain_error("need d >= 1");
    double c = binomial_coefficient(area, correctable + 1);
    return std::pow(c, -1.0 / double(correctable));
}

std::size_t levels_to_reach(double eta0, std::size_t area, std::size_t correctable,
                            double target, std::size_t max_levels) {
    double eta = eta0;
    for (std::size_t level = 0; level <= max_levels; ++level) {
        if (eta <= target) return level;
        eta = effective_noise_bound(area, correctable, eta);
    }
    return max_levels;
}

}  // namespace qvm
