#include "qvm/executor.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qvm {

void apply_oracle_query(StateVector& state, const Oracle& oracle,
                        const std::vector<std::size_t>& inputs,
                        const std::vector<std::size_t>& outputs) {
    const std::uint64_t dim = state.dim();
    std::vector<complex_t> next(dim, complex_t(0.0, 0.0));
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (amps[i] == complex_t(0.0, 0.0)) continue;
        std::uint64_t in_val = 0;
        for (std::size_t q : inputs) in_val = (in_val << 1) | std::uint64_t(state.bit_of(i, q));
        std::uint64_t f = oracle.value(in_val);
        std::uint64_t j = i;
        std::size_t w = outputs.size();
        for (std::size_t b = 0; b < w; ++b) {
            if ((f >> (w - 1 - b)) & 1u) j ^= state.mask_of(outputs[b]);
        }
        next[j] = amps[i];
    }
    state.mutable_amplitudes() = std::move(next);
    state.check_norm();
}

RunResult execute(const Circuit& circuit, std::uint64_t input, RandomSource& rng,
                  bool keep_state) {
    validate_circuit(circuit);
    StateVector state = StateVector::basis_state(circuit.num_qubits, input);
    RunResult result;
    for (const auto& op : circuit.operations) {
        if (const auto* g = std::get_if<GateApplication>(&op)) {
            apply_gate(state, g->gate, g->targets);
        } else if (const auto* q = std::get_if<OracleQuery>(&op)) {
            apply_oracle_query(state, circuit.oracles.at(q->oracle_id), q->input_qubits,
                               q->output_qubits);
            ++result.oracle_queries;
        } else if (const auto* m = std::get_if<Measurement>(&op)) {
            MeasurementRecord rec = measure_qubits(state, m->qubits, rng);
            std::string bits;
            for (int b : rec.outcome) bits.push_back(char('0' + b));
            result.registers[m->register_label] = bits;
        }
    }
    if (keep_state) result.final_state = std::move(state);
    return result;
}

SampleResult sample(const Circuit& circuit, std::uint64_t input, std::size_t shots,
                    RandomSource& rng) {
    if (shots < 1) throw std::domain_error("shots must be positive");
    validate_circuit(circuit);
    SampleResult out;
    out.shots = shots;
    for (std::size_t s = 0; s < shots; ++s) {
        RandomSource shot_rng = rng.derive(s);
        RunResult r = execute(circuit, input, shot_rng, false);
        out.oracle_queries += r.oracle_queries;
        for (const auto& [label, bits] : r.registers) {
            out.histogram[label][bits] += 1;
        }
    }
    return out;
}

namespace {
void enumerate_branches(const Circuit& circuit, std::size_t op_index, StateVector state,
                        double weight, std::string key,
                        std::map<std::string, double>& dist) {
    for (std::size_t i = op_index; i < circuit.operations.size(); ++i) {
        const auto& op = circuit.operations[i];
        if (const auto* g = std::get_if<GateApplication>(&op)) {
            apply_gate(state, g->gate, g->targets);
        } else if (const auto* q = std::get_if<OracleQuery>(&op)) {
            apply_oracle_query(state, circuit.oracles.at(q->oracle_id), q->input_qubits,
                               q->output_qubits);
        } else if (const auto* m = std::get_if<Measurement>(&op)) {
            std::uint64_t outcomes = std::uint64_t(1) << m->qubits.size();
            for (std::uint64_t o = 0; o < outcomes; ++o) {
                std::vector<int> values;
                std::string bits;
                for (std::size_t b = 0; b < m->qubits.size(); ++b) {
                    int v = int((o >> (m->qubits.size() - 1 - b)) & 1u);
                    values.push_back(v);
                    bits.push_back(char('0' + v));
                }
                double p = branch_probability(state, m->qubits, values);
                if (p < 1e-15) continue;
                StateVector collapsed = state;
                auto& amps = collapsed.mutable_amplitudes();
                std::uint64_t mask = 0, want = 0;
                for (std::size_t b = 0; b < m->qubits.size(); ++b) {
                    std::uint64_t bm = state.mask_of(m->qubits[b]);
                    mask |= bm;
                    if (values[b]) want |= bm;
                }
                double scale = 1.0 / std::sqrt(p);
                for (std::uint64_t idx = 0; idx < collapsed.dim(); ++idx) {
                    if ((idx & mask) == want) amps[idx] *= scale;
                    else amps[idx] = complex_t(0.0, 0.0);
                }
                std::string next_key = key.empty() ? m->register_label + "=" + bits
                                                   : key + " " + m->register_label + "=" + bits;
                enumerate_branches(circuit, i + 1, std::move(collapsed), weight * p,
                                   std::move(next_key), dist);
            }
            return;
        }
    }
    dist[key] += weight;
}
}  // namespace

std::map<std::string, double> exact_register_distribution(const Circuit& circuit,
                                                          std::uint64_t input) {
    validate_circuit(circuit);
    std::map<std::string, double> dist;
    enumerate_branches(circuit, 0, StateVector::basis_state(circuit.num_qubits, input), 1.0, "",
                       dist);
    return dist;
}

std::string serialize_run_result(const RunResult& result, bool dump_amplitudes) {
    std::ostringstream out;
    out << "shots " << result.shots << "\n";
    out << "oracle_queries " << result.oracle_queries << "\n";
    for (const auto& [label, bits] : result.registers) {
        out << "register " << label << " " << bits << "\n";
    }
    if (dump_amplitudes && result.final_state) {
        const StateVector& s = *result.final_state;
        out << "state " << s.num_qubits() << "\n";
        char buf[64];
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", s.amplitude(i).real(),
                          s.amplitude(i).imag());
            out << buf << "\n";
        }
    }
    return out.str();
}

}  // namespace qvm
