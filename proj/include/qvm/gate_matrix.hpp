#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qvm {

using complex_t = std::complex<double>;

// A quantum gate on k qubits: a unitary 2^k x 2^k matrix, stored row-major
// in the computational basis in lexicographic order. The first qubit a gate
// is applied to corresponds to the most significant bit of the matrix index.
class GateMatrix {
public:
    // Validates unitarity (U U+ = I entrywise within 1e-9).
    GateMatrix(std::size_t arity, std::vector<complex_t> entries);

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }

    const complex_t& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    const std::vector<complex_t>& entries() const { return entries_; }

    GateMatrix adjoint() const;
    GateMatrix multiply(const GateMatrix& rhs) const;  // this * rhs

    bool approx_equal(const GateMatrix& other, double tol) const;

    static double unitarity_defect(std::size_t dim, const std::vector<complex_t>& entries);

private:
    std::size_t arity_;
    std::size_t dim_;
    std::vector<complex_t> entries_;
};

// Named gates and parametric families used throughout.
namespace gates {

GateMatrix identity(std::size_t arity);
GateMatrix pauli_x();  // NOT
GateMatrix pauli_y();
GateMatrix pauli_z();
GateMatrix hadamard();
GateMatrix cnot();
GateMatrix toffoli();
GateMatrix swap_gate();
// General one-qubit rotation G_{theta,phi}.
GateMatrix rotation(double theta, double phi);
// Conditional phase shift R_k = diag(1, e^{2 pi i / 2^k}); negative k gives
// the conjugate phase (the inverse gate).
GateMatrix phase_shift(int k);
// The two three-qubit generators of the universal set: a doubly controlled
// plane rotation by 2*pi*alpha and a doubly controlled phase by 2*pi*alpha,
// with alpha = sqrt(2) - 1.
GateMatrix deutsch_u3();
GateMatrix deutsch_w3();

double universal_alpha();
GateMatrix plane_rotation(double angle);   // [[cos, sin], [-sin, cos]]
GateMatrix phase_gate(double angle);       // diag(1, e^{i angle})

}  // namespace gates

// Lookup by mnemonic (the names used by the circuit text format):
// x|not, y, z, h, cnot, toffoli|ccnot, swap, rk(k), crk(k), g(theta,phi),
// du, dw, id. Unknown names raise std::invalid_argument.
GateMatrix named_gate(const std::string& name, const std::vector<double>& params);

// Block-diagonal control extension: identity wherever any control qubit is 0,
// `gate` applied where all controls are 1. Controls come first in qubit order.
GateMatrix controlled(const GateMatrix& gate, std::size_t num_controls);

// Principal square root of a one-qubit unitary: V with V*V = Q.
GateMatrix matrix_sqrt_2x2(const GateMatrix& q);

// Operator-norm distance |U - V| (largest singular value of the difference).
double approximation_distance(const GateMatrix& u, const GateMatrix& v);

// min over unit phases c of |U - cV|; gates differing by a global phase are
// computationally identical.
double phase_aligned_distance(const GateMatrix& u, const GateMatrix& v);

}  // namespace qvm
