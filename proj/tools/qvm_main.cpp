// qvm: command-line front end exposing the simulator's algorithms and
// experiments with seeded, reproducible runs and structured output.

#include <CLI11.hpp>
#include <bit>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "qvm/algorithms.hpp"
#include "qvm/css_code.hpp"
#include "qvm/executor.hpp"
#include "qvm/gate_library.hpp"
#include "qvm/grover_variants.hpp"
#include "qvm/path_sum.hpp"
#include "qvm/report.hpp"
#include "qvm/shor.hpp"
#include "qvm/threshold.hpp"
#include "qvm/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace qvm;

namespace {

struct OutputOptions {
    std::uint64_t seed = 1;
    std::string format = "text";
    bool verbose = false;
};

void add_common(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--seed", opts.seed, "random seed (default 1)");
    cmd->add_option("--format", opts.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_flag("--verbose", opts.verbose, "include extra diagnostics");
}

void print_text(const json& node, const std::string& prefix, std::ostream& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& item : node) {
            print_text(item, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
            << "\n";
    }
}

void print_csv(const json& node, const std::string& prefix, std::ostream& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            print_csv(it.value(), prefix.empty() ? it.key() : prefix + "," + it.key(), out);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& item : node) {
            print_csv(item, prefix + "," + std::to_string(i++), out);
        }
    } else {
        out << prefix << "," << (node.is_string() ? node.get<std::string>() : node.dump())
            << "\n";
    }
}

void emit(const json& report, const OutputOptions& opts) {
    if (opts.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (opts.format == "csv") {
        print_csv(report, "", std::cout);
    } else {
        print_text(report, "", std::cout);
    }
}

json histogram_json(const Histogram& histogram) {
    json out = json::object();
    for (const auto& [label, counts] : histogram) {
        json reg = json::object();
        for (const auto& [bits, count] : counts) reg[bits] = count;
        out[label] = reg;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::int64_t> oracle_values(const Oracle& oracle) {
    std::vector<std::int64_t> values(oracle.size());
    for (std::uint64_t i = 0; i < oracle.size(); ++i) values[i] = std::int64_t(oracle.value(i));
    return values;
}

int run_command(const std::string& path, std::uint64_t input, std::size_t shots,
                bool dump_state, const std::vector<std::string>& oracle_specs,
                const OutputOptions& opts) {
    Circuit circuit = parse_circuit(read_file(path));
    for (const std::string& spec : oracle_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--oracle expects name=path");
        circuit.oracles.emplace(spec.substr(0, eq), load_oracle_file(spec.substr(eq + 1)));
    }
    RandomSource rng(opts.seed);

    json report;
    report["command"] = "run";
    report["file"] = path;
    report["input"] = input;
    report["seed"] = opts.seed;
    report["qubits"] = circuit.num_qubits;
    report["gates"] = circuit.gate_count();

    bool has_measure = false;
    for (const auto& op : circuit.operations) {
        if (std::holds_alternative<Measurement>(op)) has_measure = true;
    }
    if (has_measure && shots > 1) {
        SampleResult sample_result = sample(circuit, input, shots, rng);
        report["shots"] = shots;
        report["oracle_queries"] = sample_result.oracle_queries;
        report["histogram"] = histogram_json(sample_result.histogram);
    } else {
        RunResult r = execute(circuit, input, rng, true);
        report["shots"] = 1;
        report["oracle_queries"] = r.oracle_queries;
        json regs = json::object();
        for (const auto& [label, bits] : r.registers) regs[label] = bits;
        report["registers"] = regs;
        if (dump_state) {
            json amps = json::array();
            for (std::uint64_t i = 0; i < r.final_state->dim(); ++i) {
                amps.push_back(json::array({format_double(r.final_state->amplitude(i).real()),
                                            format_double(r.final_state->amplitude(i).imag())}));
            }
            report["amplitudes"] = amps;
        }
    }
    emit(report, opts);
    return 0;
}

int dj_command(std::size_t n, const std::string& function, const std::string& oracle_path,
               const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    Oracle oracle = [&] {
        if (!oracle_path.empty()) return load_oracle_file(oracle_path);
        std::uint64_t size = std::uint64_t(1) << n;
        if (function == "constant0") return make_oracle(std::vector<std::uint64_t>(size, 0), 1);
        if (function == "constant1") return make_oracle(std::vector<std::uint64_t>(size, 1), 1);
        if (function == "parity") {
            std::vector<std::uint64_t> t(size);
            for (std::uint64_t i = 0; i < size; ++i) t[i] = std::uint64_t(std::popcount(i)) & 1u;
            return make_oracle(t, 1);
        }
        // balanced-random
        std::vector<std::uint64_t> idx(size);
        for (std::uint64_t i = 0; i < size; ++i) idx[i] = i;
        for (std::uint64_t i = size - 1; i > 0; --i) {
            std::uint64_t j = rng.uniform_int(i + 1);
            std::swap(idx[i], idx[j]);
        }
        std::vector<std::uint64_t> t(size, 0);
        for (std::uint64_t i = 0; i < size / 2; ++i) t[idx[i]] = 1;
        return make_oracle(t, 1);
    }();

    DeutschJozsaResult r = deutsch_jozsa(oracle, rng);
    json report;
    report["command"] = "dj";
    report["n"] = oracle.input_width();
    report["qubits"] = oracle.input_width() + 1;
    report["seed"] = opts.seed;
    report["oracle_queries"] = r.oracle_queries;
    report["first_register"] = r.first_register;
    report["classification"] = r.tag == PromiseTag::Constant ? "constant" : "balanced";
    emit(report, opts);
    return 0;
}

int simon_command(std::size_t n, const std::string& s_bits, const std::string& oracle_path,
                  std::size_t c_factor, const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    std::uint64_t hidden = 0;
    Oracle oracle = [&] {
        if (!oracle_path.empty()) return load_oracle_file(oracle_path);
        hidden = s_bits.empty() ? 0 : std::stoull(s_bits, nullptr, 2);
        return make_simon_oracle(n, hidden, rng);
    }();
    SimonResult r = simon(oracle, c_factor * oracle.input_width(), rng);

    json report;
    report["command"] = "simon";
    report["n"] = oracle.input_width();
    report["qubits"] = 2 * oracle.input_width();
    report["seed"] = opts.seed;
    report["repetitions"] = c_factor * oracle.input_width();
    report["oracle_queries"] = r.oracle_queries;
    report["classification"] = r.tag == PromiseTag::TwoToOne ? "two-to-one" : "one-to-one";
    if (r.s) {
        std::string bits;
        for (std::size_t b = oracle.input_width(); b-- > 0;) {
            bits.push_back(char('0' + ((*r.s >> b) & 1)));
        }
        report["recovered_s"] = bits;
    }
    report["nullspace_dimension"] = r.nullspace_dimension;
    if (opts.verbose) {
        json ks = json::array();
        for (std::uint64_t k : r.samples) ks.push_back(k);
        report["samples"] = ks;
    }
    emit(report, opts);
    if (!oracle_path.empty()) return 0;
    bool correct = hidden == 0 ? r.tag == PromiseTag::OneToOne
                               : (r.s.has_value() && *r.s == hidden);
    return correct ? 0 : 1;
}

int grover_command(std::size_t n, const std::vector<std::uint64_t>& marked, std::size_t shots,
                   const OutputOptions& opts) {
    Oracle oracle = make_marking_oracle(n, marked);
    RandomSource rng(opts.seed);
    std::size_t successes = 0;
    GroverResult last;
    for (std::size_t s = 0; s < shots; ++s) {
        RandomSource shot = rng.derive(s);
        last = grover_search(oracle, marked.size(), shot);
        if (last.success) ++successes;
    }
    json report;
    report["command"] = "grover";
    report["n"] = n;
    report["qubits"] = n;
    report["seed"] = opts.seed;
    report["marked_count"] = marked.size();
    report["iterations"] = last.iterations;
    report["oracle_queries_per_run"] = last.oracle_queries;
    report["theta"] = format_double(last.theta);
    report["predicted_success"] = format_double(last.predicted_success);
    report["shots"] = shots;
    report["success_frequency"] = format_double(double(successes) / double(shots));
    emit(report, opts);
    return 0;
}

int min_command(const std::string& oracle_path, std::size_t random_n, const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    std::vector<std::int64_t> values;
    if (!oracle_path.empty()) {
        values = oracle_values(load_oracle_file(oracle_path));
    } else {
        values.resize(random_n);
        for (auto& v : values) v = std::int64_t(rng.uniform_int(1000));
    }
    MinimumResult r = find_minimum(values, rng);
    std::size_t qubits = 0;
    while ((std::size_t(1) << qubits) < values.size()) ++qubits;
    json report;
    report["command"] = "min";
    report["n"] = values.size();
    report["qubits"] = qubits;
    report["seed"] = opts.seed;
    report["index"] = r.index;
    report["value"] = r.value;
    report["oracle_queries"] = r.oracle_queries;
    emit(report, opts);
    std::int64_t best = values[0];
    for (auto v : values) best = std::min(best, v);
    return r.value == best ? 0 : 1;
}

int median_command(const std::string& oracle_path, std::size_t ramp_n, double eps,
                   const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    std::vector<std::int64_t> values;
    if (!oracle_path.empty()) {
        values = oracle_values(load_oracle_file(oracle_path));
    } else {
        values.resize(ramp_n);
        for (std::size_t i = 0; i < ramp_n; ++i) values[i] = std::int64_t(i);
    }
    std::int64_t lo = values[0], hi = values[0];
    for (auto v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    MedianResult r = estimate_median(values, eps, lo, hi, rng);
    std::size_t qubits = 0;
    while ((std::size_t(1) << qubits) < values.size()) ++qubits;
    json report;
    report["command"] = "median";
    report["n"] = values.size();
    report["qubits"] = qubits + 2;  // doubled domain plus the control
    report["eps"] = format_double(eps);
    report["seed"] = opts.seed;
    report["median"] = r.median;
    report["guesses"] = r.guesses;
    report["rotations"] = r.rotations;

    std::size_t below = 0, above = 0;
    for (auto v : values) {
        if (v < r.median) ++below;
        if (v > r.median) ++above;
    }
    double band = (1.0 + eps) * double(values.size()) / 2.0;
    report["rank_below"] = below;
    report["rank_above"] = above;
    emit(report, opts);
    return (double(below) <= band && double(above) <= band) ? 0 : 1;
}

int mean_command(const std::string& oracle_path, std::int64_t denominator, std::size_t grid_n,
                 double eps, const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    std::vector<double> values;
    if (!oracle_path.empty()) {
        for (std::int64_t v : oracle_values(load_oracle_file(oracle_path))) {
            values.push_back(double(v) / double(denominator) - 0.5);
        }
    } else {
        values.resize(grid_n);
        for (std::size_t i = 0; i < grid_n; ++i) {
            values[i] = -0.5 + double(i) / double(grid_n);
        }
    }
    MeanResult r = estimate_mean(values, eps, rng);
    double direct = 0.0;
    for (double v : values) direct += v;
    direct /= double(values.size());

    std::size_t qubits = 0;
    while ((std::size_t(1) << qubits) < values.size()) ++qubits;
    json report;
    report["command"] = "mean";
    report["n"] = values.size();
    report["qubits"] = qubits + 2;  // doubled domain plus the control
    report["eps"] = format_double(eps);
    report["seed"] = opts.seed;
    report["digits"] = r.digits;
    report["mean"] = format_double(r.mean);
    report["direct_mean"] = format_double(direct);
    report["rotations"] = r.rotations;
    emit(report, opts);
    return std::abs(r.mean - direct) <= eps ? 0 : 1;
}

json order_repeats_json(const OrderResult& result) {
    json repeats = json::array();
    for (const auto& rep : result.repeats) {
        json r;
        r["measured_k"] = rep.measured_k;
        r["convergent"] = std::to_string(rep.convergent.numerator) + "/" +
                          std::to_string(rep.convergent.denominator);
        r["candidate"] = rep.candidate;
        r["accepted"] = rep.accepted;
        if (!rep.note.empty()) r["note"] = rep.note;
        repeats.push_back(r);
    }
    return repeats;
}

int shor_command(std::uint64_t n, std::uint64_t y, std::uint64_t q, std::size_t repeats,
                 bool use_kitaev, const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    json report;
    report["command"] = use_kitaev ? "kitaev-factor" : "shor";
    report["n"] = n;
    report["seed"] = opts.seed;

    if (y != 0) {
        OrderResult r = use_kitaev ? kitaev_order(n, y, 0, rng, repeats)
                                   : shor_order(OrderProblem{n, y, q}, rng, repeats);
        report["y"] = y;
        report["qubits"] = r.qubits_used;
        if (r.order) report["order"] = *r.order;
        report["repeats"] = order_repeats_json(r);
        emit(report, opts);
        return r.order ? 0 : 1;
    }

    FactorResult f = factor(n, rng, use_kitaev, repeats);
    if (f.factor) {
        report["factor"] = *f.factor;
        report["cofactor"] = n / *f.factor;
    }
    report["method"] = f.method;
    json attempts = json::array();
    for (const auto& a : f.attempts) {
        json item;
        item["y"] = a.y;
        if (a.order) item["order"] = *a.order;
        item["note"] = a.note;
        attempts.push_back(item);
    }
    report["repeats"] = attempts;
    emit(report, opts);
    return f.factor ? 0 : 1;
}

int rsa_command(std::uint64_t p, std::uint64_t q, std::uint64_t e, std::int64_t message,
                bool use_kitaev, const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    RsaKey key = rsa_keygen(p, q, e);
    json report;
    report["command"] = "rsa-demo";
    report["seed"] = opts.seed;
    report["public_key"] = {{"N", key.modulus}, {"E", key.e}};
    report["secret_d"] = key.d;

    auto run_message = [&](std::uint64_t m, json& slot) {
        std::uint64_t cipher = rsa_encrypt(m, key);
        std::uint64_t decrypted = rsa_decrypt(cipher, key);
        RandomSource crack_rng = rng.derive(m);
        RsaCrackResult crack = rsa_crack(cipher, key.modulus, key.e, crack_rng, use_kitaev);
        slot["message"] = m;
        slot["cipher"] = cipher;
        slot["decrypted"] = decrypted;
        slot["cracked"] = crack.message;
        slot["crack_route"] = crack.route;
        if (crack.order) slot["cipher_order"] = *crack.order;
        return decrypted == m && crack.message == m;
    };

    bool all_ok = true;
    if (message >= 0) {
        json slot;
        all_ok = run_message(std::uint64_t(message), slot);
        report["run"] = slot;
    } else {
        json runs = json::array();
        for (std::uint64_t m = 0; m < key.modulus; ++m) {
            json slot;
            all_ok = run_message(m, slot) && all_ok;
            runs.push_back(slot);
        }
        report["runs"] = runs;
    }
    report["all_recovered"] = all_ok;
    emit(report, opts);
    return all_ok ? 0 : 1;
}

int qecc_command(double eta, std::size_t rounds, std::size_t shots,
                 const std::string& code_path, const OutputOptions& opts) {
    CssCode steane = code_path.empty()
                         ? CssCode::steane()
                         : CssCode::from_classical(parse_generator_matrix(read_file(code_path)));
    RandomSource rng(opts.seed);
    MemoryExperimentResult r = memory_experiment(steane, eta, rounds, shots, rng);

    json report;
    report["command"] = "qecc-demo";
    report["code"] = code_path.empty() ? "steane-7" : code_path;
    report["block_length"] = steane.block_length();
    report["correctable"] = steane.correctable_errors();
    report["eta"] = format_double(eta);
    report["rounds"] = rounds;
    report["shots"] = shots;
    report["seed"] = opts.seed;
    report["failures"] = r.failures;
    report["failure_rate"] = format_double(r.failure_rate);
    report["ci_3sigma"] = format_double(r.ci_halfwidth);
    report["counting_bound"] = format_double(
        effective_noise_bound(steane.block_length(), steane.correctable_errors(), eta));

    if (opts.verbose) {
        // trace a few shots with their per-round syndromes
        json trace = json::array();
        NoiseModel model;
        model.eta = eta;
        for (std::size_t shot = 0; shot < std::min<std::size_t>(shots, 5); ++shot) {
            RandomSource run = rng.derive(900000 + shot);
            StateVector state = steane.encode({complex_t(1, 0), complex_t(0, 0)});
            json shot_json = json::array();
            for (std::size_t round = 0; round < rounds; ++round) {
                auto errors = apply_noise(state, model, run);
                auto rep = steane.correct(state, run);
                json round_json;
                round_json["errors"] = errors.size();
                std::string bits, phases;
                for (int b : rep.bit_syndrome) bits.push_back(char('0' + b));
                for (int b : rep.phase_syndrome) phases.push_back(char('0' + b));
                round_json["bit_syndrome"] = bits;
                round_json["phase_syndrome"] = phases;
                shot_json.push_back(round_json);
            }
            trace.push_back(shot_json);
        }
        report["syndrome_trace"] = trace;
    }
    emit(report, opts);
    return 0;
}

int threshold_command(std::size_t area, std::size_t correctable, double eta, std::size_t levels,
                      const OutputOptions& opts) {
    json report;
    report["command"] = "threshold";
    report["area"] = area;
    report["correctable"] = correctable;
    report["eta"] = format_double(eta);
    report["majority3_eta_eff"] = format_double(eta_eff_majority(eta));
    report["threshold"] = format_double(threshold(area, correctable));
    json traj = json::array();
    for (double v : concatenation_trajectory(eta, area, correctable, levels)) {
        traj.push_back(format_double(v));
    }
    report["trajectory"] = traj;
    emit(report, opts);
    return 0;
}

int pathsum_command(std::size_t n, std::size_t depth, std::size_t trials,
                    const OutputOptions& opts) {
    RandomSource rng(opts.seed);
    double worst = 0.0;
    std::size_t max_live = 0;
    const char* one_qubit[] = {"h", "x", "y", "z"};
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Circuit c;
        c.num_qubits = n;
        for (std::size_t d = 0; d < depth; ++d) {
            if (n >= 2 && rng.uniform() < 0.3) {
                std::size_t a = rng.uniform_int(n);
                std::size_t b = (a + 1 + rng.uniform_int(n - 1)) % n;
                c.add_gate("cnot", {}, {a, b});
            } else {
                c.add_gate(one_qubit[rng.uniform_int(4)], {}, {std::size_t(rng.uniform_int(n))});
            }
        }
        std::uint64_t input = rng.uniform_int(std::uint64_t(1) << n);
        RandomSource run(1);
        RunResult engine = execute(c, input, run);
        PathStats stats;
        for (std::uint64_t j = 0; j < engine.final_state->dim(); ++j) {
            double dev = std::abs(path_amplitude(c, input, j, &stats) -
                                  engine.final_state->amplitude(j));
            worst = std::max(worst, dev);
        }
        max_live = std::max(max_live, stats.max_live_configurations);
    }

    json report;
    report["command"] = "pathsum-verify";
    report["qubits"] = n;
    report["depth"] = depth;
    report["trials"] = trials;
    report["seed"] = opts.seed;
    report["max_amplitude_deviation"] = format_double(worst);
    report["max_live_configurations"] = max_live;

    // interference demo: quantum zeros where the stochastic analogue is flat
    Circuit hh;
    hh.num_qubits = 2;
    hh.add_gate("h", {}, {1});
    hh.add_gate("h", {}, {0});
    hh.add_gate("h", {}, {1});
    report["interference_amp_00"] = format_double(std::abs(path_amplitude(hh, 3, 0)));
    report["interference_amp_10"] = format_double(std::abs(path_amplitude(hh, 3, 2)));
    StochasticCircuit sc;
    sc.num_bits = 2;
    StochasticNode node;
    node.matrix = {0.5, 0.5, 0.5, 0.5};
    for (std::size_t t : {std::size_t(1), std::size_t(0), std::size_t(1)}) {
        node.targets = {t};
        sc.nodes.push_back(node);
    }
    std::vector<double> input(4, 0.0);
    input[3] = 1.0;
    json sdist = json::array();
    for (double pr : stochastic_simulate(sc, input)) sdist.push_back(format_double(pr));
    report["stochastic_distribution"] = sdist;
    emit(report, opts);
    return worst < 1e-9 ? 0 : 1;
}

int qfft_command(std::size_t m, std::size_t cutoff, const OutputOptions& opts) {
    std::vector<std::size_t> qubits(m);
    for (std::size_t i = 0; i < m; ++i) qubits[i] = i;

    // worst entry deviation from the dense transform over all basis inputs
    double worst = 0.0;
    std::uint64_t q = std::uint64_t(1) << m;
    for (std::uint64_t a = 0; a < q; ++a) {
        StateVector s = StateVector::basis_state(m, a);
        qfft_mod2m(s, qubits);
        for (std::uint64_t b = 0; b < q; ++b) {
            complex_t want = std::polar(1.0 / std::sqrt(double(q)),
                                        2.0 * std::numbers::pi * double(a * b % q) / double(q));
            worst = std::max(worst, std::abs(s.amplitude(b) - want));
        }
    }

    json report;
    report["command"] = "qfft-verify";
    report["m"] = m;
    report["gates"] = m + m * (m - 1) / 2 + m / 2;
    report["controlled_phases"] = m * (m - 1) / 2;
    report["max_entry_deviation"] = format_double(worst);
    if (cutoff > 0) {
        GateMatrix exact = circuit_unitary(qfft_circuit(qubits, m));
        GateMatrix approx = circuit_unitary(qfft_circuit(qubits, m, cutoff));
        report["cutoff"] = cutoff;
        report["approx_distance"] = format_double(approximation_distance(exact, approx));
        report["approx_bound"] = format_double(approx_qfft_error_bound(m, cutoff));
    }
    emit(report, opts);
    return worst < 1e-10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum circuit simulation toolkit"};
    app.require_subcommand(1);

    OutputOptions opts;
    int exit_code = 0;

    std::string run_file;
    std::uint64_t run_input = 0;
    std::size_t run_shots = 1;
    bool run_dump = false;
    std::vector<std::string> run_oracles;
    auto* run_cmd = app.add_subcommand("run", "execute a circuit file");
    run_cmd->add_option("file", run_file, "circuit text file")->required();
    run_cmd->add_option("--input", run_input, "basis-state input index");
    run_cmd->add_option("--shots", run_shots, "number of sampled executions");
    run_cmd->add_flag("--dump-state", run_dump, "include the final amplitudes");
    run_cmd->add_option("--oracle", run_oracles, "attach an oracle table: name=path");
    add_common(run_cmd, opts);
    run_cmd->callback([&] {
        exit_code = run_command(run_file, run_input, run_shots, run_dump, run_oracles, opts);
    });

    std::size_t dj_n = 3;
    std::string dj_function = "balanced-random", dj_oracle;
    auto* dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa classification");
    dj_cmd->add_option("--n,--qubits", dj_n, "input width");
    dj_cmd->add_option("--function", dj_function, "constant0, constant1, parity, balanced-random")
        ->check(CLI::IsMember({"constant0", "constant1", "parity", "balanced-random"}));
    dj_cmd->add_option("--oracle", dj_oracle, "oracle table file");
    add_common(dj_cmd, opts);
    dj_cmd->callback([&] { exit_code = dj_command(dj_n, dj_function, dj_oracle, opts); });

    std::size_t simon_n = 3, simon_c = 4;
    std::string simon_s, simon_oracle;
    auto* simon_cmd = app.add_subcommand("simon", "Simon's period finding");
    simon_cmd->add_option("--n,--qubits", simon_n, "input width");
    simon_cmd->add_option("--s", simon_s, "hidden period bits (0 for a permutation)");
    simon_cmd->add_option("--oracle", simon_oracle, "oracle table file");
    simon_cmd->add_option("--c", simon_c, "repetition factor (c n runs)");
    add_common(simon_cmd, opts);
    simon_cmd->callback(
        [&] { exit_code = simon_command(simon_n, simon_s, simon_oracle, simon_c, opts); });

    std::size_t grover_n = 2, grover_shots = 1000;
    std::vector<std::uint64_t> grover_marked;
    auto* grover_cmd = app.add_subcommand("grover", "Grover search with known marked count");
    grover_cmd->add_option("--n,--qubits", grover_n, "qubit count (N = 2^n)");
    grover_cmd->add_option("--marked", grover_marked, "marked indices")->required();
    grover_cmd->add_option("--shots", grover_shots, "number of searches");
    add_common(grover_cmd, opts);
    grover_cmd->callback(
        [&] { exit_code = grover_command(grover_n, grover_marked, grover_shots, opts); });

    std::string min_oracle;
    std::size_t min_random = 64;
    auto* min_cmd = app.add_subcommand("min", "minimum finding");
    min_cmd->add_option("--oracle", min_oracle, "value table file");
    min_cmd->add_option("--random", min_random, "random table size when no oracle given");
    add_common(min_cmd, opts);
    min_cmd->callback([&] { exit_code = min_command(min_oracle, min_random, opts); });

    std::string median_oracle;
    std::size_t median_ramp = 256;
    double median_eps = 0.1;
    auto* median_cmd = app.add_subcommand("median", "approximate median estimation");
    median_cmd->add_option("--oracle", median_oracle, "value table file");
    median_cmd->add_option("--ramp", median_ramp, "ramp table size when no oracle given");
    median_cmd->add_option("--eps", median_eps, "band tolerance");
    add_common(median_cmd, opts);
    median_cmd->callback(
        [&] { exit_code = median_command(median_oracle, median_ramp, median_eps, opts); });

    std::string mean_oracle;
    std::int64_t mean_denominator = 1;
    std::size_t mean_grid = 64;
    double mean_eps = 0.1;
    auto* mean_cmd = app.add_subcommand("mean", "mean estimation for values in [-1/2, 1/2]");
    mean_cmd->add_option("--oracle", mean_oracle, "value table file (integers)");
    mean_cmd->add_option("--denominator", mean_denominator,
                         "table values map to v/denominator - 1/2");
    mean_cmd->add_option("--grid", mean_grid, "uniform grid size when no oracle given");
    mean_cmd->add_option("--eps", mean_eps, "accuracy");
    add_common(mean_cmd, opts);
    mean_cmd->callback([&] {
        exit_code = mean_command(mean_oracle, mean_denominator, mean_grid, mean_eps, opts);
    });

    std::uint64_t shor_n = 15, shor_y = 0, shor_q = 0;
    std::size_t shor_repeats = 20;
    auto* shor_cmd = app.add_subcommand("shor", "factoring (or order finding with --y)");
    shor_cmd->add_option("--n", shor_n, "number to factor")->required();
    shor_cmd->add_option("--y", shor_y, "find the order of y instead of factoring");
    shor_cmd->add_option("--q", shor_q, "Fourier modulus override (power of two)");
    shor_cmd->add_option("--repeats", shor_repeats, "repeat budget");
    add_common(shor_cmd, opts);
    shor_cmd->callback(
        [&] { exit_code = shor_command(shor_n, shor_y, shor_q, shor_repeats, false, opts); });

    std::uint64_t kf_n = 15, kf_y = 0;
    std::size_t kf_repeats = 20;
    auto* kf_cmd = app.add_subcommand("kitaev-factor", "factoring via eigenvalue readout");
    kf_cmd->add_option("--n", kf_n, "number to factor")->required();
    kf_cmd->add_option("--y", kf_y, "find the order of y instead of factoring");
    kf_cmd->add_option("--repeats", kf_repeats, "repeat budget");
    add_common(kf_cmd, opts);
    kf_cmd->callback([&] { exit_code = shor_command(kf_n, kf_y, 0, kf_repeats, true, opts); });

    std::uint64_t rsa_p = 3, rsa_q = 11, rsa_e = 7;
    std::int64_t rsa_message = -1;
    bool rsa_kitaev = false;
    auto* rsa_cmd = app.add_subcommand("rsa-demo", "toy RSA round trip and quantum crack");
    rsa_cmd->add_option("--p", rsa_p, "first prime");
    rsa_cmd->add_option("--q", rsa_q, "second prime");
    rsa_cmd->add_option("--e", rsa_e, "public exponent");
    rsa_cmd->add_option("--message", rsa_message, "single message (default: all below N)");
    rsa_cmd->add_flag("--kitaev", rsa_kitaev, "crack through the Kitaev order finder");
    add_common(rsa_cmd, opts);
    rsa_cmd->callback([&] {
        exit_code = rsa_command(rsa_p, rsa_q, rsa_e, rsa_message, rsa_kitaev, opts);
    });

    double qecc_eta = 0.01;
    std::size_t qecc_rounds = 1, qecc_shots = 10000;
    std::string qecc_code;
    auto* qecc_cmd = app.add_subcommand("qecc-demo", "CSS-code memory experiment");
    qecc_cmd->add_option("--eta", qecc_eta, "per-qubit noise rate");
    qecc_cmd->add_option("--rounds", qecc_rounds, "noise+correction rounds");
    qecc_cmd->add_option("--shots", qecc_shots, "Monte-Carlo shots");
    qecc_cmd->add_option("--code", qecc_code, "generator-matrix file (default: Steane)");
    add_common(qecc_cmd, opts);
    qecc_cmd->callback([&] {
        exit_code = qecc_command(qecc_eta, qecc_rounds, qecc_shots, qecc_code, opts);
    });

    std::size_t th_area = 10, th_d = 1, th_levels = 3;
    double th_eta = 0.01;
    auto* th_cmd = app.add_subcommand("threshold", "effective-rate recursion and threshold");
    th_cmd->add_option("--a", th_area, "procedure area");
    th_cmd->add_option("--d", th_d, "correctable errors");
    th_cmd->add_option("--eta", th_eta, "physical noise rate");
    th_cmd->add_option("--levels", th_levels, "recursion levels");
    add_common(th_cmd, opts);
    th_cmd->callback(
        [&] { exit_code = threshold_command(th_area, th_d, th_eta, th_levels, opts); });

    std::size_t ps_n = 4, ps_depth = 8, ps_trials = 20;
    auto* ps_cmd = app.add_subcommand("pathsum-verify", "path-sum vs state-engine cross-check");
    ps_cmd->add_option("--n,--qubits", ps_n, "qubits");
    ps_cmd->add_option("--depth", ps_depth, "gates per circuit");
    ps_cmd->add_option("--trials", ps_trials, "random circuits");
    add_common(ps_cmd, opts);
    ps_cmd->callback([&] { exit_code = pathsum_command(ps_n, ps_depth, ps_trials, opts); });

    std::size_t qf_m = 6, qf_cutoff = 0;
    auto* qf_cmd = app.add_subcommand("qfft-verify", "transform vs dense DFT cross-check");
    qf_cmd->add_option("--m,--qubits", qf_m, "register size");
    qf_cmd->add_option("--cutoff", qf_cutoff, "approximate-transform cutoff");
    add_common(qf_cmd, opts);
    qf_cmd->callback([&] { exit_code = qfft_command(qf_m, qf_cutoff, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit with 2
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
