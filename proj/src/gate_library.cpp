#include "qvm/gate_library.hpp"

#include <stdexcept>

namespace qvm {

void GateSequence::apply_to(StateVector& state) const {
    for (const auto& item : items) apply_gate(state, item.gate, item.targets);
}

GateMatrix GateSequence::unitary(std::size_t num_qubits) const {
    std::uint64_t dim = std::uint64_t(1) << num_qubits;
    std::vector<complex_t> cols(dim * dim);
    for (std::uint64_t c = 0; c < dim; ++c) {
        StateVector s = StateVector::basis_state(num_qubits, c);
        apply_to(s);
        for (std::uint64_t r = 0; r < dim; ++r) cols[r * dim + c] = s.amplitude(r);
    }
    return GateMatrix(num_qubits, std::move(cols));
}

GateSequence barenco_decompose(const GateMatrix& q) {
    if (q.arity() != 1) throw std::domain_error("barenco_decompose expects a one-qubit gate");
    GateMatrix v = matrix_sqrt_2x2(q);
    GateMatrix cv = controlled(v, 1);
    GateMatrix cvdag = controlled(v.adjoint(), 1);
    GateMatrix cx = gates::cnot();

    GateSequence seq;
    seq.items.push_back({cv, {1, 2}});
    seq.items.push_back({cx, {0, 1}});
    seq.items.push_back({cvdag, {1, 2}});
    seq.items.push_back({cx, {0, 1}});
    seq.items.push_back({cv, {0, 2}});
    return seq;
}

int quantum_random_bit(RandomSource& rng) {
    StateVector s = StateVector::basis_state(1, 0);
    apply_gate(s, gates::hadamard(), {0});
    return measure_qubits(s, {0}, rng).outcome[0];
}

}  // namespace qvm
