#include "qvm/gate_matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qvm {

namespace {
constexpr double kUnitaryTol = 1e-9;

Eigen::MatrixXcd to_eigen(const GateMatrix& g) {
    Eigen::MatrixXcd m(g.dim(), g.dim());
    for (std::size_t r = 0; r < g.dim(); ++r)
        for (std::size_t c = 0; c < g.dim(); ++c) m(long(r), long(c)) = g.at(r, c);
    return m;
}
}  // namespace

double GateMatrix::unitarity_defect(std::size_t dim, const std::vector<complex_t>& entries) {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            complex_t acc(0.0, 0.0);
            for (std::size_t k = 0; k < dim; ++k) {
                acc += entries[r * dim + k] * std::conj(entries[c * dim + k]);
            }
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

GateMatrix::GateMatrix(std::size_t arity, std::vector<complex_t> entries)
    : arity_(arity), dim_(std::size_t(1) << arity), entries_(std::move(entries)) {
    if (arity_ == 0) throw std::domain_error("gate arity must be positive");
    if (entries_.size() != dim_ * dim_) {
        throw std::domain_error("gate entries must form a 2^k x 2^k matrix");
    }
    double defect = unitarity_defect(dim_, entries_);
    if (defect > kUnitaryTol) {
        throw std::runtime_error("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<complex_t> out(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out[c * dim_ + r] = std::conj(at(r, c));
    return GateMatrix(arity_, std::move(out));
}

GateMatrix GateMatrix::multiply(const GateMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::domain_error("gate dimension mismatch");
    std::vector<complex_t> out(dim_ * dim_, complex_t(0, 0));
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = 0; k < dim_; ++k) {
            complex_t v = at(r, k);
            if (v == complex_t(0, 0)) continue;
            for (std::size_t c = 0; c < dim_; ++c) out[r * dim_ + c] += v * rhs.at(k, c);
        }
    return GateMatrix(arity_, std::move(out));
}

bool GateMatrix::approx_equal(const GateMatrix& other, double tol) const {
    if (dim_ != other.dim_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (std::abs(entries_[i] - other.entries_[i]) > tol) return false;
    }
    return true;
}

namespace gates {

GateMatrix identity(std::size_t arity) {
    std::size_t dim = std::size_t(1) << arity;
    std::vector<complex_t> e(dim * dim, complex_t(0, 0));
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return GateMatrix(arity, std::move(e));
}

GateMatrix pauli_x() { return GateMatrix(1, {0, 1, 1, 0}); }
GateMatrix pauli_y() {
    return GateMatrix(1, {complex_t(0, 0), complex_t(0, -1), complex_t(0, 1), complex_t(0, 0)});
}
GateMatrix pauli_z() { return GateMatrix(1, {1, 0, 0, -1}); }

GateMatrix hadamard() {
    double s = 1.0 / std::sqrt(2.0);
    return GateMatrix(1, {s, s, s, -s});
}

GateMatrix cnot() { return controlled(pauli_x(), 1); }
GateMatrix toffoli() { return controlled(pauli_x(), 2); }

GateMatrix swap_gate() {
    return GateMatrix(2, {1, 0, 0, 0,
                          0, 0, 1, 0,
                          0, 1, 0, 0,
                          0, 0, 0, 1});
}

GateMatrix rotation(double theta, double phi) {
    complex_t eip = std::polar(1.0, phi);
    return GateMatrix(1, {std::cos(theta), std::sin(theta) * eip,
                          -std::sin(theta) * std::conj(eip), std::cos(theta)});
}

GateMatrix phase_shift(int k) {
    if (k == 0) throw std::domain_error("R_k requires k != 0");
    double angle = 2.0 * std::numbers::pi / double(std::uint64_t(1) << std::abs(k));
    if (k < 0) angle = -angle;
    return phase_gate(angle);
}

double universal_alpha() { return std::sqrt(2.0) - 1.0; }

GateMatrix plane_rotation(double angle) {
    return GateMatrix(1, {std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle)});
}

GateMatrix phase_gate(double angle) {
    return GateMatrix(1, {1, 0, 0, std::polar(1.0, angle)});
}

GateMatrix deutsch_u3() {
    return controlled(plane_rotation(2.0 * std::numbers::pi * universal_alpha()), 2);
}

GateMatrix deutsch_w3() {
    return controlled(phase_gate(2.0 * std::numbers::pi * universal_alpha()), 2);
}

}  // namespace gates

GateMatrix named_gate(const std::string& name, const std::vector<double>& params) {
    auto want = [&](std::size_t n) {
        if (params.size() != n) {
            throw std::domain_error("gate '" + name + "' expects " + std::to_string(n) +
                                    " parameter(s)");
        }
    };
    if (name == "x" || name == "not") { want(0); return gates::pauli_x(); }
    if (name == "y") { want(0); return gates::pauli_y(); }
    if (name == "z") { want(0); return gates::pauli_z(); }
    if (name == "h") { want(0); return gates::hadamard(); }
    if (name == "id") { want(0); return gates::identity(1); }
    if (name == "cnot") { want(0); return gates::cnot(); }
    if (name == "toffoli" || name == "ccnot") { want(0); return gates::toffoli(); }
    if (name == "swap") { want(0); return gates::swap_gate(); }
    if (name == "du") { want(0); return gates::deutsch_u3(); }
    if (name == "dw") { want(0); return gates::deutsch_w3(); }
    if (name == "g") { want(2); return gates::rotation(params[0], params[1]); }
    if (name == "rk") {
        want(1);
        double k = params[0];
        if (k != std::floor(k) || k == 0) throw std::domain_error("rk expects a nonzero integer");
        return gates::phase_shift(int(k));
    }
    if (name == "crk") {
        want(1);
        double k = params[0];
        if (k != std::floor(k) || k == 0) throw std::domain_error("crk expects a nonzero integer");
        return controlled(gates::phase_shift(int(k)), 1);
    }
    throw std::domain_error("unknown gate '" + name + "'");
}

GateMatrix controlled(const GateMatrix& gate, std::size_t num_controls) {
    if (num_controls < 1) throw std::domain_error("need at least one control");
    std::size_t arity = gate.arity() + num_controls;
    std::size_t dim = std::size_t(1) << arity;
    std::size_t gdim = gate.dim();
    std::vector<complex_t> e(dim * dim, complex_t(0, 0));
    for (std::size_t i = 0; i < dim - gdim; ++i) e[i * dim + i] = 1.0;
    std::size_t off = dim - gdim;
    for (std::size_t r = 0; r < gdim; ++r)
        for (std::size_t c = 0; c < gdim; ++c) e[(off + r) * dim + (off + c)] = gate.at(r, c);
    return GateMatrix(arity, std::move(e));
}

GateMatrix matrix_sqrt_2x2(const GateMatrix& q) {
    if (q.arity() != 1) throw std::domain_error("matrix_sqrt_2x2 expects a one-qubit gate");
    complex_t a = q.at(0, 0), b = q.at(0, 1), c = q.at(1, 0), d = q.at(1, 1);

    auto principal_sqrt = [](complex_t lambda) {
        // Eigenvalues of a unitary lie on the unit circle; take the principal
        // branch e^{i theta/2} with theta in (-pi, pi].
        return std::polar(1.0, std::arg(lambda) / 2.0);
    };

    // lambda^2 - tr lambda + det = 0
    complex_t tr = a + d;
    complex_t det = a * d - b * c;
    complex_t disc = std::sqrt(tr * tr - 4.0 * det);
    complex_t l1 = (tr + disc) / 2.0;
    complex_t l2 = (tr - disc) / 2.0;

    if (std::abs(l1 - l2) < 1e-12) {
        complex_t s = principal_sqrt(l1);
        return GateMatrix(1, {s, 0, 0, s});
    }

    // (b, lambda - a) solves (Q - lambda I) v = 0; fall back to the other
    // nullspace column when it degenerates.
    auto eigvec = [&](complex_t lambda) {
        complex_t v0 = b, v1 = lambda - a;
        if (std::abs(v0) + std::abs(v1) < 1e-12) {
            v0 = lambda - d;
            v1 = c;
        }
        double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
        return std::pair<complex_t, complex_t>(v0 / nrm, v1 / nrm);
    };
    auto [u0, u1] = eigvec(l1);
    auto [w0, w1] = eigvec(l2);
    complex_t s1 = principal_sqrt(l1), s2 = principal_sqrt(l2);

    // V = s1 |u><u| + s2 |w><w|
    std::vector<complex_t> e = {
        s1 * u0 * std::conj(u0) + s2 * w0 * std::conj(w0),
        s1 * u0 * std::conj(u1) + s2 * w0 * std::conj(w1),
        s1 * u1 * std::conj(u0) + s2 * w1 * std::conj(w0),
        s1 * u1 * std::conj(u1) + s2 * w1 * std::conj(w1)};
    return GateMatrix(1, std::move(e));
}

double approximation_distance(const GateMatrix& u, const GateMatrix& v) {
    if (u.dim() != v.dim()) throw std::domain_error("gate dimension mismatch");
    Eigen::MatrixXcd d = to_eigen(u) - to_eigen(v);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
    return svd.singularValues()(0);
}

double phase_aligned_distance(const GateMatrix& u, const GateMatrix& v) {
    if (u.dim() != v.dim()) throw std::domain_error("gate dimension mismatch");
    Eigen::MatrixXcd mu = to_eigen(u), mv = to_eigen(v);
    auto dist_at = [&](double phi) {
        Eigen::MatrixXcd d = mu - std::polar(1.0, phi) * mv;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
        return svd.singularValues()(0);
    };
    // Frobenius-optimal phase is a good starting point; refine locally.
    complex_t t = (mv.adjoint() * mu).trace();
    double best_phi = std::abs(t) > 1e-15 ? std::arg(t) : 0.0;
    double best = dist_at(best_phi);
    double lo = best_phi - 0.5, hi = best_phi + 0.5;
    for (int it = 0; it < 60; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (dist_at(m1) < dist_at(m2)) hi = m2; else lo = m1;
    }
    best = std::min(best, dist_at((lo + hi) / 2.0));
    return best;
}

}  // namespace qvm
