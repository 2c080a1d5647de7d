#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qvm/gate_library.hpp"

namespace qvm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

// The subspace the generated subgroup can move: basis states with at least
// two 1-bits. Coordinates listed with |111> last.
constexpr std::size_t kSupport[4] = {3, 5, 6, 7};

// Wiring of the doubly controlled rotation whose plane is {coord, |111>}:
// targets are (control, control, rotation target).
std::vector<std::size_t> wiring_for(std::size_t coord) {
    switch (coord) {
        case 3: return {1, 2, 0};
        case 5: return {0, 2, 1};
        case 6: return {0, 1, 2};
        default: throw std::logic_error("bad plane coordinate");
    }
}

struct PlannedStep {
    bool is_phase;       // phase on |111> (W3 powers) vs plane rotation (U3 powers)
    std::size_t coord;   // plane partner when !is_phase
    double angle;        // exact angle the step should realize
};

// Finds the repetition count whose multiple of omega best approximates
// `angle` on the circle. Returns the count; best achieved error in *err.
std::uint64_t best_power(double angle, double omega, std::uint64_t cap, double target_err,
                         double* err) {
    angle = std::fmod(angle, kTwoPi);
    if (angle < 0) angle += kTwoPi;
    double acc = 0.0;
    std::uint64_t best_p = 0;
    double best = circle_distance(0.0, angle);
    for (std::uint64_t p = 1; p <= cap && best > target_err; ++p) {
        acc += omega;
        if (acc >= kTwoPi) acc -= kTwoPi;
        double d = circle_distance(acc, angle);
        if (d < best) {
            best = d;
            best_p = p;
        }
    }
    *err = best;
    return best_p;
}

}  // namespace

SynthesisOptions::SynthesisOptions()
    : alpha(gates::universal_alpha()), scan_cap(2000000) {}

SynthesisResult synthesize_uw(const GateMatrix& target, double epsilon,
                              const SynthesisOptions& options) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    if (target.arity() != 3) throw std::domain_error("synthesize_uw expects a three-qubit gate");

    // Quotient out the global phase using the (0,0) entry, then require the
    // remainder to fix every basis state with fewer than two 1-bits: words in
    // {U3, W3} can act only on {|011>, |101>, |110>, |111>}.
    complex_t g00 = target.at(0, 0);
    if (std::abs(std::abs(g00) - 1.0) > 1e-9) {
        throw std::domain_error(
            "target moves weight and below-two-ones basis states; unreachable without ancillas");
    }
    complex_t phase = g00 / std::abs(g00);
    auto t = [&](std::size_t r, std::size_t c) { return target.at(r, c) / phase; };
    for (std::size_t s : {std::size_t(0), std::size_t(1), std::size_t(2), std::size_t(4)}) {
        for (std::size_t r = 0; r < 8; ++r) {
            complex_t want = (r == s) ? complex_t(1, 0) : complex_t(0, 0);
            if (std::abs(t(r, s) - want) > 1e-9 || std::abs(t(s, r) - want) > 1e-9) {
                throw std::domain_error(
                    "target acts on basis states with fewer than two 1-bits; unreachable "
                    "without ancillas");
            }
        }
    }

    // Eigenstructure of the 4x4 block on the movable subspace. The block is
    // unitary, hence normal, so its Schur form is diagonal with orthonormal
    // Schur vectors.
    Eigen::Matrix4cd block;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) block(r, c) = t(kSupport[r], kSupport[c]);
    Eigen::ComplexSchur<Eigen::Matrix4cd> schur(block);
    if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
    const Eigen::Matrix4cd vecs = schur.matrixU();
    const Eigen::Matrix4cd diag = schur.matrixT();
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
            if (std::abs(diag(r, c)) > 1e-8) {
                throw std::runtime_error("target block is not normal");
            }
        }

    // Plan the exact angles first: the transport R is a sweep of plane
    // rotations carrying each eigenvector onto |111>, a phase there, and
    // the reverse sweep.
    std::vector<double> phases(4);
    for (int k = 0; k < 4; ++k) phases[k] = std::arg(diag(k, k));

    auto plan_for = [&](int k) {
        std::vector<PlannedStep> plan;
        complex_t psi[4];
        for (int i = 0; i < 4; ++i) psi[i] = vecs(i, k);
        std::vector<PlannedStep> sweep;
        for (int ci = 0; ci < 3; ++ci) {  // coords 3, 5, 6; |111> is index 3
            if (std::abs(psi[ci]) < 1e-12) continue;
            if (std::abs(psi[3]) > 1e-12) {
                double align = std::arg(psi[ci]) - std::arg(psi[3]);
                sweep.push_back({true, 0, align});
                psi[3] *= std::polar(1.0, align);
            }
            double theta = std::atan2(std::abs(psi[ci]), std::abs(psi[3]));
            sweep.push_back({false, kSupport[ci], -theta});
            complex_t v0 = psi[ci], v1 = psi[3];
            psi[ci] = std::cos(theta) * v0 - std::sin(theta) * v1;
            psi[3] = std::sin(theta) * v0 + std::cos(theta) * v1;
        }
        plan = sweep;
        plan.push_back({true, 0, phases[k]});
        for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) {
            plan.push_back({it->is_phase, it->coord, -it->angle});
        }
        return plan;
    };

    const double omega = kTwoPi * options.alpha;

    for (int attempt = 0; attempt < 4; ++attempt) {
        double shrink = std::pow(2.0, -attempt);

        std::vector<PlannedStep> full_plan;
        std::size_t step_count = 0;
        std::vector<std::vector<PlannedStep>> plans(4);
        for (int k = 0; k < 4; ++k) {
            if (std::abs(phases[k]) < 1e-12) continue;
            plans[k] = plan_for(k);
            step_count += plans[k].size();
        }
        double delta = epsilon * shrink / (2.0 * double(std::max<std::size_t>(step_count, 1) + 4));
        for (int k = 0; k < 4; ++k) {
            if (plans[k].empty()) continue;
            if (circle_distance(phases[k], 0.0) <= delta / 2.0) continue;  // negligible rotation
            full_plan.insert(full_plan.end(), plans[k].begin(), plans[k].end());
        }

        GateSequence seq;
        GateMatrix u3 = gates::deutsch_u3();
        GateMatrix w3 = gates::deutsch_w3();
        bool ok = true;
        for (const auto& step : full_plan) {
            double err = 0.0;
            std::uint64_t p = best_power(step.angle, omega, options.scan_cap, delta * 0.2, &err);
            if (err > delta) {
                ok = false;
                break;
            }
            const GateMatrix& gate = step.is_phase ? w3 : u3;
            std::vector<std::size_t> wires =
                step.is_phase ? std::vector<std::size_t>{0, 1, 2} : wiring_for(step.coord);
            for (std::uint64_t i = 0; i < p; ++i) {
                seq.items.push_back({gate, wires});
            }
        }
        if (!ok) continue;

        double achieved = phase_aligned_distance(seq.unitary(3), target);
        if (achieved <= epsilon) {
            SynthesisResult result{std::move(seq), achieved, delta, options.scan_cap};
            return result;
        }
    }
    throw std::runtime_error("synthesize_uw could not reach the requested accuracy under cap " +
                             std::to_string(options.scan_cap));
}

}  // namespace qvm
