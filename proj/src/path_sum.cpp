#include "qvm/path_sum.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qvm {

namespace {

struct GateView {
    const GateMatrix* gate = nullptr;      // null: oracle permutation step
    std::vector<std::uint64_t> masks;      // target bit masks, matrix MSB first
    const Oracle* oracle = nullptr;
    std::vector<std::uint64_t> in_masks, out_masks;
};

std::vector<GateView> plan_views(const Circuit& circuit) {
    validate_circuit(circuit);
    std::vector<GateView> views;
    auto mask_of = [&](std::size_t q) {
        return std::uint64_t(1) << (circuit.num_qubits - 1 - q);
    };
    for (const auto& op : circuit.operations) {
        if (const auto* g = std::get_if<GateApplication>(&op)) {
            GateView v;
            v.gate = &g->gate;
            for (std::size_t q : g->targets) v.masks.push_back(mask_of(q));
            views.push_back(std::move(v));
        } else if (const auto* q = std::get_if<OracleQuery>(&op)) {
            GateView v;
            v.oracle = &circuit.oracles.at(q->oracle_id);
            for (std::size_t w : q->input_qubits) v.in_masks.push_back(mask_of(w));
            for (std::size_t w : q->output_qubits) v.out_masks.push_back(mask_of(w));
            views.push_back(std::move(v));
        } else {
            throw std::domain_error("path evaluation requires a measurement-free circuit");
        }
    }
    return views;
}

// Depth-first sum over configuration sequences. The live working set is the
// recursion spine: one configuration and one branch counter per time step.
complex_t sum_paths(const std::vector<GateView>& views, std::size_t step,
                    std::uint64_t config, complex_t weight, std::uint64_t final_index,
                    PathStats* stats) {
    if (step == views.size()) {
        if (stats) ++stats->paths_enumerated;
        return config == final_index ? weight : complex_t(0, 0);
    }
    const GateView& v = views[step];
    if (stats) {
        stats->max_live_configurations =
            std::max(stats->max_live_configurations, step + 1);
    }

    if (v.oracle) {
        // permutation: exactly one successor
        std::uint64_t in_val = 0;
        for (std::uint64_t m : v.in_masks) in_val = (in_val << 1) | ((config & m) ? 1u : 0u);
        std::uint64_t f = v.oracle->value(in_val);
        std::uint64_t next = config;
        std::size_t w = v.out_masks.size();
        for (std::size_t b = 0; b < w; ++b) {
            if ((f >> (w - 1 - b)) & 1u) next ^= v.out_masks[b];
        }
        return sum_paths(views, step + 1, next, weight, final_index, stats);
    }

    std::uint64_t col = 0;
    const std::size_t k = v.masks.size();
    for (std::size_t j = 0; j < k; ++j) col = (col << 1) | ((config & v.masks[j]) ? 1u : 0u);

    complex_t acc(0, 0);
    const std::uint64_t block = std::uint64_t(1) << k;
    for (std::uint64_t row = 0; row < block; ++row) {
        complex_t entry = v.gate->at(row, col);
        if (entry == complex_t(0, 0)) continue;  // structural zero, no path
        std::uint64_t next = config;
        for (std::size_t j = 0; j < k; ++j) {
            bool now = (config & v.masks[j]) != 0;
            bool then = ((row >> (k - 1 - j)) & 1u) != 0;
            if (now != then) next ^= v.masks[j];
        }
        acc += sum_paths(views, step + 1, next, weight * entry, final_index, stats);
    }
    return acc;
}

}  // namespace

complex_t path_amplitude(const Circuit& circuit, std::uint64_t initial, std::uint64_t final_index,
                         PathStats* stats) {
    std::uint64_t dim = std::uint64_t(1) << circuit.num_qubits;
    if (initial >= dim || final_index >= dim) {
        throw std::domain_error("configuration index out of range");
    }
    std::vector<GateView> views = plan_views(circuit);
    return sum_paths(views, 0, initial, complex_t(1, 0), final_index, stats);
}

std::vector<double> path_distribution(const Circuit& circuit, std::uint64_t initial,
                                      PathStats* stats) {
    if (circuit.num_qubits > 12) {
        throw std::runtime_error("outcome enumeration limited to 12 qubits");
    }
    std::uint64_t dim = std::uint64_t(1) << circuit.num_qubits;
    std::vector<double> dist(dim);
    double total = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        dist[j] = std::norm(path_amplitude(circuit, initial, j, stats));
        total += dist[j];
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::runtime_error("path distribution does not sum to 1");
    }
    return dist;
}

void validate_stochastic_circuit(const StochasticCircuit& circuit) {
    if (circuit.num_bits == 0) throw std::runtime_error("stochastic circuit has no bits");
    for (const auto& node : circuit.nodes) {
        std::size_t k = node.targets.size();
        std::size_t dim = std::size_t(1) << k;
        if (node.matrix.size() != dim * dim) {
            throw std::runtime_error("stochastic node matrix has the wrong size");
        }
        for (std::size_t q : node.targets) {
            if (q >= circuit.num_bits) throw std::runtime_error("stochastic target out of range");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            double sum = 0.0;
            for (std::size_t r = 0; r < dim; ++r) {
                double e = node.matrix[r * dim + c];
                if (e < 0.0) throw std::runtime_error("negative stochastic entry");
                sum += e;
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                throw std::runtime_error("stochastic column does not sum to 1");
            }
        }
    }
}

std::vector<double> stochastic_simulate(const StochasticCircuit& circuit,
                                        const std::vector<double>& input_distribution) {
    validate_stochastic_circuit(circuit);
    std::uint64_t dim = std::uint64_t(1) << circuit.num_bits;
    if (input_distribution.size() != dim) {
        throw std::domain_error("input distribution has the wrong length");
    }
    std::vector<double> dist = input_distribution;
    for (const auto& node : circuit.nodes) {
        const std::size_t k = node.targets.size();
        const std::uint64_t block = std::uint64_t(1) << k;
        std::vector<std::uint64_t> masks(k);
        for (std::size_t j = 0; j < k; ++j) {
            masks[j] = std::uint64_t(1) << (circuit.num_bits - 1 - node.targets[j]);
        }
        std::uint64_t tunion = 0;
        for (auto m : masks) tunion |= m;
        std::vector<std::uint64_t> rest;
        for (std::size_t b = 0; b < circuit.num_bits; ++b) {
            std::uint64_t m = std::uint64_t(1) << b;
            if (!(tunion & m)) rest.push_back(m);
        }
        std::vector<double> in(block), out(block);
        for (std::uint64_t r = 0; r < (dim >> k); ++r) {
            std::uint64_t base = 0;
            for (std::size_t b = 0; b < rest.size(); ++b) {
                if ((r >> b) & 1u) base |= rest[b];
            }
            for (std::uint64_t c = 0; c < block; ++c) {
                std::uint64_t idx = base;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((c >> (k - 1 - j)) & 1u) idx |= masks[j];
                }
                in[c] = dist[idx];
            }
            for (std::uint64_t row = 0; row < block; ++row) {
                double acc = 0.0;
                for (std::uint64_t c = 0; c < block; ++c) {
                    acc += node.matrix[row * block + c] * in[c];
                }
                out[row] = acc;
            }
            for (std::uint64_t c = 0; c < block; ++c) {
                std::uint64_t idx = base;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((c >> (k - 1 - j)) & 1u) idx |= masks[j];
                }
                dist[idx] = out[c];
            }
        }
    }
    return dist;
}

StochasticCircuit parse_stochastic_circuit(const std::string& text) {
    StochasticCircuit circuit;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int stage = 0;  // expect "stochastic", then "qubits n", then nodes
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (stage == 0) {
            if (tok != "stochastic") {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected 'stochastic' header");
            }
            stage = 1;
            continue;
        }
        if (stage == 1) {
            std::string count;
            if (tok != "qubits" || !(ss >> count)) {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected 'qubits N'");
            }
            circuit.num_bits = std::stoull(count);
            stage = 2;
            continue;
        }
        if (tok != "node") {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'node t... : entries'");
        }
        StochasticNode node;
        std::string piece;
        while (ss >> piece && piece != ":") node.targets.push_back(std::stoull(piece));
        if (piece != ":") {
            throw std::runtime_error("line " + std::to_string(line_no) + ": missing ':'");
        }
        double e;
        while (ss >> e) node.matrix.push_back(e);
        circuit.nodes.push_back(std::move(node));
    }
    validate_stochastic_circuit(circuit);
    return circuit;
}

std::string render_stochastic_circuit(const StochasticCircuit& circuit) {
    std::ostringstream out;
    out << "stochastic\nqubits " << circuit.num_bits << "\n";
    char buf[40];
    for (const auto& node : circuit.nodes) {
        out << "node";
        for (std::size_t t : node.targets) out << ' ' << t;
        out << " :";
        for (double e : node.matrix) {
            std::snprintf(buf, sizeof buf, "%.17g", e);
            out << ' ' << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qvm
