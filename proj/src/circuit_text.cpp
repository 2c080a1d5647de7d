#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qvm/circuit.hpp"

namespace qvm {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

// Splits "name" or "name(p1,p2,...)" into mnemonic and parameters.
void split_head(const std::string& tok, int line_no, std::string& name,
                std::vector<double>& params) {
    auto open = tok.find('(');
    if (open == std::string::npos) {
        name = tok;
        return;
    }
    if (tok.back() != ')') fail(line_no, "missing ')' in '" + tok + "'");
    name = tok.substr(0, open);
    std::string inner = tok.substr(open + 1, tok.size() - open - 2);
    std::istringstream ss(inner);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            params.push_back(std::stod(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            fail(line_no, "bad parameter '" + piece + "'");
        }
    }
}

std::size_t parse_qubit(const std::string& tok, int line_no) {
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            fail(line_no, "expected qubit index, got '" + tok + "'");
        }
    }
    return std::size_t(std::stoull(tok));
}

std::string format_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit circuit;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "qubits") {
                fail(line_no, "expected 'qubits N' header");
            }
            circuit.num_qubits = parse_qubit(toks[1], line_no);
            if (circuit.num_qubits == 0) fail(line_no, "circuit needs at least one qubit");
            have_header = true;
            continue;
        }

        if (toks[0] == "measure") {
            auto arrow = std::find(toks.begin(), toks.end(), "->");
            if (arrow == toks.end() || arrow + 2 != toks.end() || arrow == toks.begin() + 1) {
                fail(line_no, "expected 'measure q... -> label'");
            }
            std::vector<std::size_t> qs;
            for (auto it = toks.begin() + 1; it != arrow; ++it) qs.push_back(parse_qubit(*it, line_no));
            circuit.add_measurement(std::move(qs), *(arrow + 1));
            continue;
        }

        if (toks[0] == "query") {
            if (toks.size() < 5) fail(line_no, "expected 'query id in... -> out...'");
            auto arrow = std::find(toks.begin(), toks.end(), "->");
            if (arrow == toks.end() || arrow <= toks.begin() + 2 || arrow + 1 == toks.end()) {
                fail(line_no, "expected 'query id in... -> out...'");
            }
            std::vector<std::size_t> ins, outs;
            for (auto it = toks.begin() + 2; it != arrow; ++it) ins.push_back(parse_qubit(*it, line_no));
            for (auto it = arrow + 1; it != toks.end(); ++it) outs.push_back(parse_qubit(*it, line_no));
            circuit.add_query(toks[1], std::move(ins), std::move(outs));
            continue;
        }

        std::string name;
        std::vector<double> params;
        split_head(toks[0], line_no, name, params);
        GateMatrix gate = [&] {
            try {
                return named_gate(name, params);
            } catch (const std::exception& e) {
                fail(line_no, e.what());
            }
        }();
        std::vector<std::size_t> targets;
        for (std::size_t i = 1; i < toks.size(); ++i) targets.push_back(parse_qubit(toks[i], line_no));
        if (targets.size() != gate.arity()) {
            fail(line_no, "gate '" + name + "' wants " + std::to_string(gate.arity()) +
                              " qubit(s), got " + std::to_string(targets.size()));
        }
        for (std::size_t q : targets) {
            if (q >= circuit.num_qubits) {
                fail(line_no, "qubit " + std::to_string(q) + " out of range (qubits " +
                                  std::to_string(circuit.num_qubits) + ")");
            }
        }
        circuit.operations.push_back(
            GateApplication{name, std::move(params), std::move(targets), std::move(gate)});
    }
    if (!have_header) throw std::runtime_error("line 1: missing 'qubits N' header");
    validate_circuit(circuit);
    return circuit;
}

std::string render_circuit(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << "\n";
    for (const auto& op : circuit.operations) {
        if (const auto* g = std::get_if<GateApplication>(&op)) {
            out << g->name;
            if (!g->params.empty()) {
                out << '(';
                for (std::size_t i = 0; i < g->params.size(); ++i) {
                    if (i) out << ',';
                    out << format_param(g->params[i]);
                }
                out << ')';
            }
            for (std::size_t q : g->targets) out << ' ' << q;
            out << "\n";
        } else if (const auto* q = std::get_if<OracleQuery>(&op)) {
            out << "query " << q->oracle_id;
            for (std::size_t i : q->input_qubits) out << ' ' << i;
            out << " ->";
            for (std::size_t i : q->output_qubits) out << ' ' << i;
            out << "\n";
        } else if (const auto* m = std::get_if<Measurement>(&op)) {
            out << "measure";
            for (std::size_t i : m->qubits) out << ' ' << i;
            out << " -> " << m->register_label << "\n";
        }
    }
    return out.str();
}

}  // namespace qvm
