#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qvm/executor.hpp"
#include "qvm/transforms.hpp"
#include "test_helpers.hpp"

using namespace qvm;
using qvm::testing::close;

namespace {
Circuit bell_circuit(bool with_measure) {
    Circuit c;
    c.num_qubits = 2;
    c.add_gate("h", {}, {0});
    c.add_gate("cnot", {}, {0, 1});
    if (with_measure) c.add_measurement({0, 1}, "out");
    return c;
}
}  // namespace

TEST_CASE("execute: empty circuit leaves the basis state") {
    Circuit c;
    c.num_qubits = 3;
    RandomSource rng(1);
    RunResult r = execute(c, 5, rng);
    CHECK(close(std::abs(r.final_state->amplitude(5)), 1.0));
}

TEST_CASE("execute: H then CNOT produces the Bell state") {
    RandomSource rng(1);
    RunResult r = execute(bell_circuit(false), 0, rng);
    double h = 1.0 / std::sqrt(2.0);
    CHECK(close(r.final_state->amplitude(0), complex_t(h, 0)));
    CHECK(close(r.final_state->amplitude(3), complex_t(h, 0)));
    CHECK(close(r.final_state->amplitude(1), complex_t(0, 0)));
}

TEST_CASE("sample: single-qubit H is a fair coin over 10000 shots") {
    Circuit c;
    c.num_qubits = 1;
    c.add_gate("h", {}, {0});
    c.add_measurement({0}, "m");
    RandomSource rng(42);
    SampleResult s = sample(c, 0, 10000, rng);
    double f0 = double(s.histogram["m"]["0"]) / 10000.0;
    CHECK(f0 > 0.485);
    CHECK(f0 < 0.515);
}

TEST_CASE("sample: Bell pair histogram") {
    RandomSource rng(7);
    SampleResult s = sample(bell_circuit(true), 0, 10000, rng);
    auto& h = s.histogram["out"];
    CHECK(h["00"] + h["11"] == 10000);
    CHECK(h["00"] >= 4700);
    CHECK(h["00"] <= 5300);
    CHECK(h.count("01") == 0);
    CHECK(h.count("10") == 0);

    // deterministic circuit, one shot
    Circuit d;
    d.num_qubits = 1;
    d.add_gate("x", {}, {0});
    d.add_measurement({0}, "m");
    RandomSource r2(3);
    SampleResult one = sample(d, 0, 1, r2);
    CHECK(one.histogram["m"]["1"] == 1);
}

TEST_CASE("sample: fixed seed reproduces the histogram bitwise") {
    RandomSource a(123), b(123);
    SampleResult x = sample(bell_circuit(true), 0, 500, a);
    SampleResult y = sample(bell_circuit(true), 0, 500, b);
    CHECK(x.histogram == y.histogram);
}

TEST_CASE("parse/render round trip on the Bell circuit") {
    std::string text = "qubits 2\nh 0\ncnot 0 1\nmeasure 0 1 -> out\n";
    Circuit c = parse_circuit(text);
    CHECK(c.num_qubits == 2);
    CHECK(c.operations.size() == 3);
    CHECK(render_circuit(c) == text);

    // render -> parse -> render is stable
    Circuit again = parse_circuit(render_circuit(c));
    CHECK(render_circuit(again) == text);
}

TEST_CASE("parser reports syntax errors with line numbers") {
    CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nh 5\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nfrob 0\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 0\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_circuit("h 0\n"), std::runtime_error);
    // duplicate register labels are a validation error
    CHECK_THROWS_AS(parse_circuit("qubits 1\nmeasure 0 -> a\nmeasure 0 -> a\n"),
                    std::runtime_error);
}

TEST_CASE("round-trip stability over a generated corpus") {
    RandomSource rng(31);
    const char* one_qubit[] = {"h", "x", "y", "z"};
    for (int t = 0; t < 100; ++t) {
        Circuit c;
        c.num_qubits = 2 + t % 4;
        int ops = 1 + int(rng.uniform_int(12));
        for (int o = 0; o < ops; ++o) {
            switch (rng.uniform_int(4)) {
                case 0:
                    c.add_gate(one_qubit[rng.uniform_int(4)], {},
                               {std::size_t(rng.uniform_int(c.num_qubits))});
                    break;
                case 1: {
                    std::size_t a = rng.uniform_int(c.num_qubits);
                    std::size_t b = (a + 1 + rng.uniform_int(c.num_qubits - 1)) % c.num_qubits;
                    c.add_gate("cnot", {}, {a, b});
                    break;
                }
                case 2:
                    c.add_gate("rk", {double(1 + rng.uniform_int(5))},
                               {std::size_t(rng.uniform_int(c.num_qubits))});
                    break;
                default:
                    c.add_gate("g", {rng.uniform() * 3.0, rng.uniform() * 3.0},
                               {std::size_t(rng.uniform_int(c.num_qubits))});
                    break;
            }
        }
        c.add_measurement({0}, "m");
        std::string text = render_circuit(c);
        CHECK(render_circuit(parse_circuit(text)) == text);
    }
}

TEST_CASE("oracle queries execute as permutations and count") {
    Circuit c;
    c.num_qubits = 2;
    c.oracles.emplace("f", make_oracle({0, 1}, 1));
    c.add_gate("h", {}, {0});
    c.add_query("f", {0}, {1});
    RandomSource rng(5);
    RunResult r = execute(c, 0, rng);
    CHECK(r.oracle_queries == 1);
    double h = 1.0 / std::sqrt(2.0);
    CHECK(close(r.final_state->amplitude(0), complex_t(h, 0)));
    CHECK(close(r.final_state->amplitude(3), complex_t(h, 0)));

    // applied twice: identity
    Circuit c2;
    c2.num_qubits = 2;
    c2.oracles.emplace("f", make_oracle({1, 0}, 1));
    c2.add_query("f", {0}, {1});
    c2.add_query("f", {0}, {1});
    RunResult r2 = execute(c2, 2, rng);
    CHECK(close(std::abs(r2.final_state->amplitude(2)), 1.0));
}

TEST_CASE("mid-circuit measurement matches the exact branch-tree distribution") {
    // H, measure, then a conditional-looking continuation (H again) -- the
    // sampled joint distribution must match exact enumeration.
    Circuit c;
    c.num_qubits = 3;
    c.add_gate("h", {}, {0});
    c.add_gate("cnot", {}, {0, 1});
    c.add_measurement({0}, "mid");
    c.add_gate("h", {}, {1});
    c.add_gate("g", {0.6, 0.3}, {2});
    c.add_measurement({1, 2}, "end");

    auto exact = exact_register_distribution(c, 0);
    double total = 0.0;
    for (auto& [k, p] : exact) total += p;
    CHECK(close(total, 1.0, 1e-9));

    RandomSource rng(11);
    const std::size_t shots = 20000;
    std::map<std::string, std::size_t> counts;
    for (std::size_t s = 0; s < shots; ++s) {
        RandomSource t = rng.derive(s);
        RunResult r = execute(c, 0, t, false);
        counts["mid=" + r.registers["mid"] + " end=" + r.registers["end"]] += 1;
    }
    double l1 = 0.0;
    for (auto& [k, p] : exact) {
        double f = counts.count(k) ? double(counts[k]) / double(shots) : 0.0;
        l1 += std::abs(f - p);
    }
    CHECK(l1 < 4.0 * std::sqrt(double(exact.size()) / double(shots)));
}

TEST_CASE("histogram L1 distance to the exact distribution at 10000 shots") {
    Circuit c = bell_circuit(true);
    auto exact = exact_register_distribution(c, 0);
    RandomSource rng(17);
    SampleResult s = sample(c, 0, 10000, rng);
    double l1 = 0.0;
    for (auto& [key, p] : exact) {
        // keys look like "out=XY"
        std::string bits = key.substr(key.find('=') + 1);
        double f = double(s.histogram["out"][bits]) / 10000.0;
        l1 += std::abs(f - p);
    }
    CHECK(l1 <= 4.0 * std::sqrt(exact.size() / 10000.0));
}

TEST_CASE("run result serialization carries registers and amplitudes") {
    RandomSource rng(1);
    RunResult r = execute(bell_circuit(true), 0, rng);
    std::string doc = serialize_run_result(r, true);
    CHECK(doc.find("register out") != std::string::npos);
    CHECK(doc.find("state 2") != std::string::npos);
    CHECK(doc.find("oracle_queries 0") != std::string::npos);
}

TEST_CASE("inverse_circuit undoes a measurement-free circuit") {
    RandomSource rng(13);
    Circuit c;
    c.num_qubits = 3;
    c.add_gate("h", {}, {0});
    c.add_gate("g", {1.1, 0.4}, {1});
    c.add_gate("crk", {3.0}, {0, 2});
    c.add_gate("toffoli", {}, {0, 1, 2});
    Circuit inv = inverse_circuit(c);

    StateVector s = qvm::testing::random_state(3, rng);
    StateVector orig = s;
    for (const auto& op : c.operations) {
        const auto& g = std::get<GateApplication>(op);
        apply_gate(s, g.gate, g.targets);
    }
    for (const auto& op : inv.operations) {
        const auto& g = std::get<GateApplication>(op);
        apply_gate(s, g.gate, g.targets);
    }
    CHECK(std::abs(overlap(s, orig)) > 1.0 - 1e-9);
    // inverse keeps renderable names for the named parametric gates
    CHECK(render_circuit(inv).find("rk(-3)") != std::string::npos);
}
