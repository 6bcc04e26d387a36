// Copyright 2026 The cliffsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffsim/commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cliffsim/diagnostics.h"
#include "cliffsim/errors.h"
#include "cliffsim/iqp_sampler.h"
#include "cliffsim/oracle.h"
#include "cliffsim/parallel.h"
#include "cliffsim/random_circuits.h"
#include "cliffsim/verify.h"
#include "json.hpp"

namespace cliffsim {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string circuit_path;
    std::string kind = "clifford";
    std::string noise;
    size_t shots = 1;
    uint64_t seed = 0;
    size_t cutoff_log2 = 22;
    std::string out_path;
    std::string report_path;
    size_t trials = 1000;
    bool timing = false;
    std::string conjugate_u3;
    std::string config_path;
    std::string brickwork;
    std::string criteria;
    bool quick = false;
    bool inject_fault = false;
    std::string sizes = "256,512,1024,2048,4096";
    size_t depth = 16;
};

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Opens `path` for writing, or returns `fallback` when the path is empty.
class Output {
   public:
    Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw UsageError("cannot write " + path);
            }
            stream_ = file_.get();
        }
    }
    std::ostream &stream() {
        return *stream_;
    }

   private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_;
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

std::vector<double> parse_numbers(const std::string &text, size_t expected, const char *what) {
    std::vector<double> out;
    for (const std::string &p : split(text, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(p, &used));
            if (used != p.size()) {
                throw std::invalid_argument(p);
            }
        } catch (const std::exception &) {
            throw UsageError(std::string("bad number in ") + what + ": '" + p + "'");
        }
    }
    if (expected && out.size() != expected) {
        throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
    }
    return out;
}

size_t parse_count(const std::string &text, const char *what) {
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return static_cast<size_t>(v);
    } catch (const std::exception &) {
        throw UsageError(std::string("bad value for ") + what + ": '" + text + "'");
    }
}

/// Applies `key value` lines from a run config file to settings not given on the command line.
void apply_config_file(RunConfig &cfg, const CLI::App &app) {
    if (cfg.config_path.empty()) {
        return;
    }
    std::istringstream in(read_file(cfg.config_path));
    std::string line;
    size_t line_no = 0;
    auto unset = [&](const char *flag) {
        auto *opt = app.get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    while (std::getline(in, line)) {
        line_no++;
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::string key;
        if (!(words >> key)) {
            continue;
        }
        std::string value;
        std::getline(words >> std::ws, value);
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) {
            value.pop_back();
        }
        if (key == "noise") {
            NoiseModel m = NoiseModel::parse_config_line(line);
            if (unset("--noise")) {
                cfg.noise = m.str();
            }
        } else if (key == "shots") {
            if (unset("--shots")) {
                cfg.shots = parse_count(value, "shots");
            }
        } else if (key == "seed") {
            if (unset("--seed")) {
                cfg.seed = parse_count(value, "seed");
            }
        } else if (key == "cutoff_log2") {
            if (unset("--cutoff-log2")) {
                cfg.cutoff_log2 = parse_count(value, "cutoff_log2");
            }
        } else if (key == "trials") {
            if (unset("--trials")) {
                cfg.trials = parse_count(value, "trials");
            }
        } else if (key == "kind") {
            if (unset("--kind")) {
                cfg.kind = value;
            }
        } else if (key == "circuit") {
            if (unset("--circuit")) {
                cfg.circuit_path = value;
            }
        } else {
            throw ParseError(line_no, "unknown config key '" + key + "'");
        }
    }
}

NoiseModel require_noise(const RunConfig &cfg) {
    if (cfg.noise.empty()) {
        throw UsageError("a noise model is required (--noise or a 'noise' line in --config)");
    }
    return NoiseModel::parse(cfg.noise);
}

const ParsedCircuit &require_default_frame(const ParsedCircuit &parsed) {
    size_t n = parsed.circuit.num_qubits();
    if (!(parsed.input == ProductState::all_zero(n)) || !(parsed.basis == MeasurementBasis::computational(n))) {
        throw UsageError("ccc circuits take their input and basis from --conjugate-u3; remove state/basis lines");
    }
    return parsed;
}

json summarize_shots(const RunConfig &cfg, const std::vector<ShotResult> &shots) {
    size_t aborted = 0;
    size_t max_size = 0;
    size_t max_rank = 0;
    double depolarized = 0;
    double components = 0;
    for (const ShotResult &s : shots) {
        aborted += s.report.aborted;
        max_size = std::max(max_size, s.report.max_component_size());
        max_rank = std::max(max_rank, s.report.max_rank());
        depolarized += static_cast<double>(s.report.num_depolarized);
        components += static_cast<double>(s.report.num_components());
    }
    double count = static_cast<double>(shots.size());
    return json{
        {"kind", cfg.kind},
        {"noise", cfg.noise},
        {"seed", cfg.seed},
        {"shots", shots.size()},
        {"cutoff_log2", cfg.cutoff_log2},
        {"aborted", aborted},
        {"abort_rate", static_cast<double>(aborted) / count},
        {"mean_depolarized", depolarized / count},
        {"mean_components", components / count},
        {"max_component_size", max_size},
        {"max_rank", max_rank},
    };
}

int cmd_sample(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.circuit_path.empty()) {
        throw UsageError("--circuit is required");
    }
    if (cfg.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
    NoiseModel model = require_noise(cfg);
    std::string text = read_file(cfg.circuit_path);
    SamplerOptions opts;
    opts.cutoff_log2 = cfg.cutoff_log2;
    std::unique_ptr<CliffordSampler> clifford;
    std::unique_ptr<IqpSampler> iqp;
    if (cfg.kind == "clifford") {
        if (!cfg.conjugate_u3.empty()) {
            throw UsageError("--conjugate-u3 applies to --kind ccc only");
        }
        ParsedCircuit p = parse_circuit(text);
        clifford = std::make_unique<CliffordSampler>(p.circuit, p.input, p.basis, model, opts);
    } else if (cfg.kind == "ccc") {
        if (cfg.conjugate_u3.empty()) {
            throw UsageError("--kind ccc needs --conjugate-u3 THETA,PHI,LAMBDA");
        }
        auto angles = parse_numbers(cfg.conjugate_u3, 3, "--conjugate-u3");
        ParsedCircuit p = require_default_frame(parse_circuit(text));
        ParsedCircuit canon = canonicalize_conjugated_clifford(
            SingleQubitUnitary::from_u3(angles[0], angles[1], angles[2]), p.circuit);
        clifford = std::make_unique<CliffordSampler>(canon.circuit, canon.input, canon.basis, model, opts);
    } else if (cfg.kind == "iqp") {
        iqp = std::make_unique<IqpSampler>(parse_iqp_circuit(text), model, opts);
    } else {
        throw UsageError("unknown --kind '" + cfg.kind + "'");
    }
    Output csv(cfg.out_path, out);
    std::optional<Output> report;
    if (!cfg.report_path.empty()) {
        report.emplace(cfg.report_path, out);
    }
    ShotFunction shot = [&](CounterRng &rng) {
        return clifford ? clifford->sample(rng) : iqp->sample(rng);
    };
    auto results = run_shots(shot, cfg.seed, cfg.shots);
    write_shots_csv(csv.stream(), cfg.seed, results, cfg.timing);
    json summary = summarize_shots(cfg, results);
    if (report) {
        report->stream() << summary.dump(2) << '\n';
    }
    err << "shots=" << results.size() << " aborted=" << summary["aborted"].get<size_t>()
        << " abort_rate=" << summary["abort_rate"].get<double>() << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.quick = cfg.quick;
    opts.inject_fault = cfg.inject_fault;
    std::vector<int> criteria;
    if (!cfg.criteria.empty()) {
        for (const std::string &p : split(cfg.criteria, ',')) {
            size_t k = parse_count(p, "--criteria");
            if (k < 1 || k > 10) {
                throw UsageError("criteria are numbered 1 to 10");
            }
            criteria.push_back(static_cast<int>(k));
        }
    }
    std::optional<Output> report;
    if (!cfg.report_path.empty()) {
        report.emplace(cfg.report_path, out);
    }
    auto results = run_checks(opts, criteria);
    bool all = true;
    json checks = json::array();
    for (const CheckResult &r : results) {
        all = all && r.passed;
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.criterion << " (" << r.name << "): " << r.measured
            << " [bound " << r.bound << "]\n";
        checks.push_back(json{
            {"criterion", r.criterion},
            {"name", r.name},
            {"passed", r.passed},
            {"measured", r.measured},
            {"bound", r.bound},
            {"details", r.details},
            {"seconds", r.seconds},
        });
    }
    if (report) {
        report->stream() << json{{"seed", cfg.seed}, {"passed", all}, {"checks", checks}}.dump(2) << '\n';
    }
    return all ? kExitOk : kExitCheckFailed;
}

CliffordCircuit percolation_circuit(const RunConfig &cfg) {
    if (!cfg.brickwork.empty()) {
        if (!cfg.circuit_path.empty()) {
            throw UsageError("give either --circuit or --brickwork");
        }
        auto parts = split(cfg.brickwork, ':');
        if (parts.size() != 2) {
            throw UsageError("--brickwork takes N:DEPTH");
        }
        CounterRng rng = CounterRng::for_task(cfg.seed, UINT64_MAX);
        return random_brickwork_1d(rng, parse_count(parts[0], "--brickwork"), parse_count(parts[1], "--brickwork"));
    }
    if (cfg.circuit_path.empty()) {
        throw UsageError("--circuit or --brickwork is required");
    }
    return parse_circuit(read_file(cfg.circuit_path)).circuit;
}

int cmd_percolation(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    NoiseModel model = require_noise(cfg);
    CliffordCircuit c = percolation_circuit(cfg);
    if (!c.geometry()) {
        throw UsageError("percolation needs a circuit with a lattice declaration");
    }
    Output rows(cfg.out_path, out);
    std::optional<Output> report;
    if (!cfg.report_path.empty()) {
        report.emplace(cfg.report_path, out);
    }
    ComponentSizeStats stats = component_size_stats(c, model, cfg.trials, cfg.seed);
    write_component_csv(rows.stream(), stats);
    size_t largest = 0;
    for (size_t t = 0; t < stats.trials(); t++) {
        largest = std::max(largest, stats.max_size(t));
    }
    if (report) {
        std::vector<size_t> xs;
        for (size_t x = 1; x <= largest + 1; x++) {
            xs.push_back(x);
        }
        write_exceedance_csv(report->stream(), stats, c.depth(), c.geometry()->dimension(), xs);
    }
    err << "trials=" << stats.trials() << " mean_max_size=" << stats.mean_max_size() << " largest=" << largest
        << " disconnected=" << stats.disconnected_trials << '\n';
    return stats.disconnected_trials == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_anticoncentration(const RunConfig &cfg, std::ostream &out) {
    if (cfg.circuit_path.empty()) {
        throw UsageError("--circuit is required");
    }
    NoiseModel model = require_noise(cfg);
    if (model.kind != NoiseModel::Kind::Depolarizing) {
        throw UsageError("anticoncentration uses depolarizing noise");
    }
    ParsedCircuit p = parse_circuit(read_file(cfg.circuit_path));
    Output csv(cfg.out_path, out);
    size_t n = p.circuit.num_qubits();
    size_t layers = p.circuit.depth() + 1;
    double value = collision_probability(p.circuit, model, p.basis);
    double bound = anticoncentration_bound(n, layers, model.gamma);
    csv.stream().precision(17);
    csv.stream() << "n,layers,gamma,collision_probability,bound,within_bound\n"
                 << n << ',' << layers << ',' << model.gamma << ',' << value << ',' << bound << ','
                 << (value <= bound ? 1 : 0) << '\n';
    return value <= bound ? kExitOk : kExitCheckFailed;
}

int cmd_bench(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    NoiseModel model = cfg.noise.empty() ? NoiseModel::depolarizing(0.5) : NoiseModel::parse(cfg.noise);
    if (cfg.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
    std::vector<size_t> sizes;
    for (const std::string &p : split(cfg.sizes, ',')) {
        sizes.push_back(parse_count(p, "--sizes"));
    }
    Output csv(cfg.out_path, out);
    csv.stream().precision(17);
    csv.stream() << "n,depth,gamma,shots,mean_shot_seconds,aborted\n";
    std::vector<double> log_n;
    std::vector<double> log_t;
    SamplerOptions opts;
    opts.cutoff_log2 = cfg.cutoff_log2;
    for (size_t n : sizes) {
        CounterRng rng = CounterRng::for_task(cfg.seed, n);
        CliffordCircuit c = random_brickwork_1d(rng, n, cfg.depth);
        CliffordSampler sampler(c, ProductState::all_zero(n), MeasurementBasis::computational(n), model, opts);
        ShotFunction shot = [&](CounterRng &g) {
            return sampler.sample(g);
        };
        auto start = std::chrono::steady_clock::now();
        auto results = run_shots(shot, cfg.seed, cfg.shots);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        size_t aborted = 0;
        for (const ShotResult &s : results) {
            aborted += s.report.aborted;
        }
        double mean = seconds / static_cast<double>(cfg.shots);
        csv.stream() << n << ',' << cfg.depth << ',' << model.gamma << ',' << cfg.shots << ',' << mean << ','
                     << aborted << '\n';
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(std::max(mean, 1e-12)));
    }
    if (log_n.size() >= 2) {
        double mx = 0;
        double my = 0;
        for (size_t k = 0; k < log_n.size(); k++) {
            mx += log_n[k] / static_cast<double>(log_n.size());
            my += log_t[k] / static_cast<double>(log_n.size());
        }
        double sxy = 0;
        double sxx = 0;
        for (size_t k = 0; k < log_n.size(); k++) {
            sxy += (log_n[k] - mx) * (log_t[k] - my);
            sxx += (log_n[k] - mx) * (log_n[k] - mx);
        }
        err << "fit exponent (mean shot time ~ n^k): k = " << sxy / sxx << '\n';
    }
    return kExitOk;
}

}  // namespace

std::vector<ShotResult> run_shots(const ShotFunction &shot, uint64_t seed, size_t shots, size_t threads) {
    std::function<ShotResult(size_t)> task = [&](size_t k) {
        CounterRng rng = CounterRng::for_task(seed, k);
        return shot(rng);
    };
    return parallel_map<ShotResult>(shots, task, threads);
}

void write_shots_csv(std::ostream &out, uint64_t seed, const std::vector<ShotResult> &shots, bool timing) {
    out << "seed,shot,depolarized,components,max_L,max_rank,aborted,wall_micros,bitstring\n";
    for (size_t k = 0; k < shots.size(); k++) {
        const RunReport &r = shots[k].report;
        out << seed << ',' << k << ',' << r.num_depolarized << ',' << r.num_components() << ','
            << r.max_component_size() << ',' << r.max_rank() << ',' << (r.aborted ? 1 : 0) << ','
            << (timing ? r.wall_micros : 0) << ',' << bits_to_hex(shots[k].bits) << '\n';
    }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact sampling of noisy Clifford and IQP+CNOT circuits"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Master seed; shot k uses stream (seed, k)");
        sub->add_option("--config", cfg.config_path, "Run config file with 'key value' lines")->check(CLI::ExistingFile);
    };
    auto *sample = app.add_subcommand("sample", "Sample output bitstrings");
    add_common(sample);
    sample->add_option("--circuit", cfg.circuit_path, "Circuit file");
    sample->add_option("--kind", cfg.kind, "clifford, ccc or iqp")
        ->check(CLI::IsMember({"clifford", "ccc", "iqp"}));
    sample->add_option("--noise", cfg.noise, "depolarizing:G or pauli:PX,PY,PZ");
    sample->add_option("--shots", cfg.shots, "Number of shots");
    sample->add_option("--cutoff-log2", cfg.cutoff_log2, "Abort a shot when a group rank exceeds this");
    sample->add_option("--out", cfg.out_path, "Per-shot CSV (default stdout)");
    sample->add_option("--report", cfg.report_path, "JSON summary");
    sample->add_flag("--timing", cfg.timing, "Record per-shot wall time in the CSV");
    sample->add_option("--conjugate-u3", cfg.conjugate_u3, "THETA,PHI,LAMBDA of the conjugating gate (ccc)");

    auto *verify = app.add_subcommand("verify", "Run the acceptance checks");
    add_common(verify);
    verify->add_option("--report", cfg.report_path, "JSON report");
    verify->add_option("--criteria", cfg.criteria, "Comma-separated subset of 1..10");
    verify->add_flag("--quick", cfg.quick, "Reduced trial counts");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Drop one propagated generator (must fail)");

    auto *percolation = app.add_subcommand("percolation", "Component-size statistics");
    add_common(percolation);
    percolation->add_option("--circuit", cfg.circuit_path, "Circuit file with a lattice");
    percolation->add_option("--brickwork", cfg.brickwork, "Random 1D brickwork N:DEPTH instead of --circuit");
    percolation->add_option("--noise", cfg.noise, "depolarizing:G");
    percolation->add_option("--trials", cfg.trials, "Number of configurations");
    percolation->add_option("--out", cfg.out_path, "Per-component CSV (default stdout)");
    percolation->add_option("--report", cfg.report_path, "Exceedance CSV with tail bounds");

    auto *anti = app.add_subcommand("anticoncentration", "Exact collision probability against its bound");
    add_common(anti);
    anti->add_option("--circuit", cfg.circuit_path, "Circuit file (n <= 6)");
    anti->add_option("--noise", cfg.noise, "depolarizing:G");
    anti->add_option("--out", cfg.out_path, "CSV (default stdout)");

    auto *bench = app.add_subcommand("bench", "Mean shot time on random 1D brickwork circuits");
    add_common(bench);
    bench->add_option("--sizes", cfg.sizes, "Comma-separated qubit counts");
    bench->add_option("--depth", cfg.depth, "Circuit depth");
    bench->add_option("--noise", cfg.noise, "depolarizing:G (default 0.5)");
    bench->add_option("--shots", cfg.shots, "Shots per size");
    bench->add_option("--cutoff-log2", cfg.cutoff_log2, "Abort threshold");
    bench->add_option("--out", cfg.out_path, "CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        apply_config_file(cfg, *chosen);
        std::string name = chosen->get_name();
        if (name == "sample") {
            return cmd_sample(cfg, out, err);
        }
        if (name == "verify") {
            return cmd_verify(cfg, out);
        }
        if (name == "percolation") {
            return cmd_percolation(cfg, out, err);
        }
        if (name == "anticoncentration") {
            return cmd_anticoncentration(cfg, out);
        }
        if (bench->parsed()) {
            if (chosen->get_option("--shots")->count() == 0 && cfg.shots == 1) {
                cfg.shots = 20;
            }
            return cmd_bench(cfg, out, err);
        }
    } catch (const InternalInvariantError &e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cliffsim
