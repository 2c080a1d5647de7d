#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qvm/state_vector.hpp"
#include "test_helpers.hpp"

using namespace qvm;
using qvm::testing::close;
using qvm::testing::random_state;
using qvm::testing::random_unitary_1q;

TEST_CASE("basis_state places a single unit amplitude") {
    StateVector s = StateVector::basis_state(1, 0);
    CHECK(close(s.amplitude(0), complex_t(1, 0)));
    CHECK(close(s.amplitude(1), complex_t(0, 0)));

    StateVector t = StateVector::basis_state(2, 3);
    for (std::uint64_t i = 0; i < 4; ++i) {
        CHECK(close(std::abs(t.amplitude(i)), i == 3 ? 1.0 : 0.0));
    }

    CHECK_THROWS_AS(StateVector::basis_state(3, 8), std::domain_error);
}

TEST_CASE("apply_gate: H and NOT on one qubit") {
    StateVector s = StateVector::basis_state(1, 0);
    apply_gate(s, gates::hadamard(), {0});
    double r = 1.0 / std::sqrt(2.0);
    CHECK(close(s.amplitude(0), complex_t(r, 0)));
    CHECK(close(s.amplitude(1), complex_t(r, 0)));

    // NOT(c0|0> + c1|1>) = c0|1> + c1|0>
    StateVector t = StateVector::from_amplitudes(1, {complex_t(0.6, 0.0), complex_t(0.0, 0.8)});
    apply_gate(t, gates::pauli_x(), {0});
    CHECK(close(t.amplitude(0), complex_t(0.0, 0.8)));
    CHECK(close(t.amplitude(1), complex_t(0.6, 0.0)));
}

TEST_CASE("apply_gate: CNOT permutes |10> to |11>") {
    StateVector s = StateVector::basis_state(2, 2);  // |10>
    apply_gate(s, gates::cnot(), {0, 1});
    CHECK(close(std::abs(s.amplitude(3)), 1.0));
}

TEST_CASE("apply_gate argument errors") {
    StateVector s = StateVector::basis_state(2, 0);
    CHECK_THROWS_AS(apply_gate(s, gates::cnot(), {0, 0}), std::domain_error);
    CHECK_THROWS_AS(apply_gate(s, gates::cnot(), {0, 2}), std::domain_error);
    CHECK_THROWS_AS(apply_gate(s, gates::hadamard(), {0, 1}), std::domain_error);
    CHECK_THROWS_AS(GateMatrix(1, {1, 1, 1, 1}), std::runtime_error);
}

TEST_CASE("branch_probability on a three-term two-qubit state") {
    double r = 1.0 / std::sqrt(3.0);
    StateVector s = StateVector::from_amplitudes(
        2, {complex_t(r, 0), complex_t(r, 0), complex_t(0, 0), complex_t(-r, 0)});
    CHECK(close(branch_probability(s, {0}, {0}), 2.0 / 3.0));
    CHECK(close(branch_probability(s, {0}, {1}), 1.0 / 3.0));

    // uniform two-qubit state, both qubits 11 -> 1/4
    StateVector u = StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, 0.5});
    CHECK(close(branch_probability(u, {0, 1}, {1, 1}), 0.25));

    // GHZ
    double h = 1.0 / std::sqrt(2.0);
    StateVector g = StateVector::from_amplitudes(
        3, {complex_t(h, 0), 0, 0, 0, 0, 0, 0, complex_t(h, 0)});
    CHECK(close(branch_probability(g, {0}, {0}), 0.5));
}

TEST_CASE("measure_qubits collapses and renormalizes") {
    double r = 1.0 / std::sqrt(3.0);
    RandomSource rng(7);
    int saw0 = 0, saw1 = 0;
    for (int trial = 0; trial < 200; ++trial) {
        StateVector s = StateVector::from_amplitudes(
            2, {complex_t(r, 0), complex_t(r, 0), complex_t(0, 0), complex_t(-r, 0)});
        RandomSource t = rng.derive(trial);
        MeasurementRecord rec = measure_qubits(s, {0}, t);
        if (rec.outcome[0] == 0) {
            ++saw0;
            CHECK(close(rec.outcome_probability, 2.0 / 3.0));
            double h = 1.0 / std::sqrt(2.0);
            CHECK(close(s.amplitude(0), complex_t(h, 0)));
            CHECK(close(s.amplitude(1), complex_t(h, 0)));
            CHECK(close(s.amplitude(3), complex_t(0, 0)));
        } else {
            ++saw1;
            CHECK(close(rec.outcome_probability, 1.0 / 3.0));
            CHECK(close(s.amplitude(3), complex_t(-1, 0)));
        }
    }
    CHECK(saw0 > 0);
    CHECK(saw1 > 0);
}

TEST_CASE("measuring a basis state is deterministic and idempotent") {
    RandomSource rng(3);
    StateVector s = StateVector::basis_state(1, 1);
    MeasurementRecord rec = measure_qubits(s, {0}, rng);
    CHECK(rec.outcome[0] == 1);
    CHECK(close(rec.outcome_probability, 1.0));
    CHECK(close(std::abs(s.amplitude(1)), 1.0));

    // Repeated measurement returns the same outcome with probability 1.
    StateVector t = random_state(3, rng);
    MeasurementRecord first = measure_qubits(t, {0, 2}, rng);
    for (int i = 0; i < 20; ++i) {
        MeasurementRecord again = measure_qubits(t, {0, 2}, rng);
        CHECK(again.outcome == first.outcome);
        CHECK(close(again.outcome_probability, 1.0));
    }
}

TEST_CASE("10000 seeded samples of H|0> land near frequency 1/2") {
    RandomSource rng(12345);
    int ones = 0;
    for (int i = 0; i < 10000; ++i) {
        StateVector s = StateVector::basis_state(1, 0);
        apply_gate(s, gates::hadamard(), {0});
        RandomSource t = rng.derive(i);
        ones += measure_qubits(s, {0}, t).outcome[0];
    }
    double freq0 = 1.0 - ones / 10000.0;
    CHECK(freq0 >= 0.485);
    CHECK(freq0 <= 0.515);
}

TEST_CASE("overlap") {
    RandomSource rng(11);
    StateVector s = random_state(4, rng);
    CHECK(close(overlap(s, s), complex_t(1, 0)));

    StateVector z = StateVector::basis_state(1, 0);
    StateVector o = StateVector::basis_state(1, 1);
    CHECK(close(overlap(z, o), complex_t(0, 0)));

    StateVector h = StateVector::basis_state(1, 0);
    apply_gate(h, gates::hadamard(), {0});
    CHECK(close(overlap(h, z), complex_t(1.0 / std::sqrt(2.0), 0)));

    CHECK_THROWS_AS(overlap(z, s), std::domain_error);
}

TEST_CASE("to_real_doubled") {
    StateVector s = StateVector::basis_state(1, 0);
    StateVector d = to_real_doubled(s);
    CHECK(d.num_qubits() == 2);
    CHECK(close(d.amplitude(0), complex_t(1, 0)));
    CHECK(close(d.amplitude(1), complex_t(0, 0)));

    StateVector t = StateVector::from_amplitudes(1, {complex_t(0, 0), complex_t(0, 1)});
    StateVector e = to_real_doubled(t);
    CHECK(close(e.amplitude(0), complex_t(0, 0)));
    CHECK(close(e.amplitude(1), complex_t(0, 0)));
    CHECK(close(e.amplitude(2), complex_t(0, 0)));
    CHECK(close(e.amplitude(3), complex_t(1, 0)));

    RandomSource rng(9);
    for (int i = 0; i < 20; ++i) {
        StateVector r = random_state(4, rng);
        StateVector dr = to_real_doubled(r);
        CHECK(close(dr.norm_squared(), 1.0));
        for (std::uint64_t idx = 0; idx < dr.dim(); ++idx) {
            CHECK(close(dr.amplitude(idx).imag(), 0.0));
        }
    }
}

TEST_CASE("property: norm preservation and linearity of apply_gate") {
    RandomSource rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 5;  // up to 6
        StateVector s = random_state(n, rng);
        StateVector t = random_state(n, rng);
        GateMatrix u = random_unitary_1q(rng);
        std::size_t target = trial % n;

        // alpha s + beta t, normalized for the engine's norm check
        complex_t alpha(rng.uniform() - 0.5, rng.uniform() - 0.5);
        complex_t beta(rng.uniform() - 0.5, rng.uniform() - 0.5);
        std::vector<complex_t> mix(s.dim());
        double norm = 0.0;
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            mix[i] = alpha * s.amplitude(i) + beta * t.amplitude(i);
            norm += std::norm(mix[i]);
        }
        norm = std::sqrt(norm);
        for (auto& a : mix) a /= norm;
        StateVector combined = StateVector::from_amplitudes(n, mix);

        StateVector us = s, ut = t, uc = combined;
        apply_gate(us, u, {target});
        apply_gate(ut, u, {target});
        apply_gate(uc, u, {target});
        CHECK(close(uc.norm_squared(), 1.0));
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            complex_t expect = (alpha * us.amplitude(i) + beta * ut.amplitude(i)) / norm;
            CHECK(close(uc.amplitude(i), expect, 1e-9));
        }

        // rigid rotation: |<Us|Ut>| = |<s|t>|
        CHECK(close(std::abs(overlap(us, ut)), std::abs(overlap(s, t)), 1e-9));
    }
}

TEST_CASE("property: branch probabilities over all outcomes sum to 1") {
    RandomSource rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 3 + trial % 3;
        StateVector s = random_state(n, rng);
        std::vector<std::size_t> qubits = {0, n - 1};
        double total = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) total += branch_probability(s, qubits, {a, b});
        CHECK(close(total, 1.0));
    }
}

TEST_CASE("max qubit configuration is enforced") {
    std::size_t saved = StateVector::max_qubits();
    StateVector::set_max_qubits(4);
    CHECK_THROWS_AS(StateVector::basis_state(5, 0), std::domain_error);
    StateVector::set_max_qubits(saved);
    CHECK_NOTHROW(StateVector::basis_state(5, 0));
}

TEST_CASE("measuring a numerically dead state is a validation error") {
    RandomSource rng(1);
    StateVector s = StateVector::basis_state(2, 0);
    for (auto& a : s.mutable_amplitudes()) a = complex_t(0, 0);
    CHECK_THROWS_AS(measure_qubits(s, {0}, rng), std::runtime_error);
}
