// Copyright 2026 The dissim Authors
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

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dissim/bounds.hpp"
#include "dissim/entropy.hpp"
#include "dissim/ensembles.hpp"
#include "dissim/error.hpp"
#include "dissim/experiments.hpp"
#include "dissim/record.hpp"
#include "dissim/steady_state.hpp"
#include "dissim/vwc.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::json;

namespace dissim {
namespace {

/// A subcommand: default config, flag -> key map and the runner.
struct Command {
    std::string name;
    std::string help;
    json defaults;
    std::vector<std::pair<std::string, std::string>> flags;  // flag name, config key
};

json load_config_file(const std::string &path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

bool same_kind(const json &a, const json &b) {
    if (a.is_number() && b.is_number()) {
        return !(a.is_number_integer() && b.is_number_float());
    }
    return a.type() == b.type();
}

void merge_config(json &resolved, const json &user, const std::string &where) {
    if (!user.is_object()) {
        throw ConfigError(where + ": config must be a JSON object");
    }
    for (const auto &[key, value] : user.items()) {
        if (!resolved.contains(key)) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
        if (!same_kind(resolved[key], value)) {
            throw ConfigError(where + ": field '" + key + "' has type " + value.type_name() + ", expected " +
                              resolved[key].type_name());
        }
        if (resolved[key].is_array()) {
            for (const auto &item : value) {
                if (!resolved[key].empty() && !same_kind(resolved[key][0], item)) {
                    throw ConfigError(where + ": field '" + key + "' has an element of the wrong type");
                }
            }
        }
        resolved[key] = value;
    }
}

json parse_flag_value(const json &like, const std::string &text, const std::string &flag) {
    try {
        if (like.is_boolean()) {
            if (text == "true" || text == "1") return true;
            if (text == "false" || text == "0") return false;
            throw ConfigError("");
        }
        if (like.is_number_integer()) {
            size_t used = 0;
            long long v = std::stoll(text, &used);
            if (used != text.size()) throw ConfigError("");
            return v;
        }
        if (like.is_number()) {
            size_t used = 0;
            double v = std::stod(text, &used);
            if (used != text.size()) throw ConfigError("");
            return v;
        }
        if (like.is_array()) {
            if (!like.empty() && like[0].is_number_integer()) {
                return parse_int_list(text);
            }
            if (!like.empty() && like[0].is_number()) {
                json arr = json::array();
                size_t start = 0;
                while (start <= text.size()) {
                    size_t pos = text.find(',', start);
                    std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
                    size_t used = 0;
                    double v = std::stod(item, &used);
                    if (used != item.size()) throw ConfigError("");
                    arr.push_back(v);
                    if (pos == std::string::npos) break;
                    start = pos + 1;
                }
                return arr;
            }
            json arr = json::array();
            size_t start = 0;
            while (start <= text.size()) {
                size_t pos = text.find(',', start);
                arr.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
                if (pos == std::string::npos) break;
                start = pos + 1;
            }
            return arr;
        }
        return text;
    } catch (const std::exception &) {
        throw ConfigError("--" + flag + ": cannot parse '" + text + "' as " + like.type_name());
    }
}

template <typename T>
T get(const json &cfg, const std::string &key) {
    return cfg.at(key).get<T>();
}

std::uint64_t seed_of(const json &cfg) {
    auto s = cfg.at("seed").get<long long>();
    if (s < 0) {
        throw ConfigError("seed must be nonnegative");
    }
    return static_cast<std::uint64_t>(s);
}

CsvTable new_table(const json &cfg, std::vector<std::string> columns) {
    CsvTable t;
    t.version = version();
    t.seed = cfg.contains("seed") ? seed_of(cfg) : 0;
    t.config_hash = config_hash(cfg);
    t.columns = std::move(columns);
    return t;
}

std::string fmt(double x) { return format_number(x); }
std::string fmt(int x) { return std::to_string(x); }
std::string fmt(bool x) { return x ? "1" : "0"; }

void check_qubits(int n, int limit) {
    if (n > limit) {
        throw BudgetError(std::to_string(n) + " qubits exceed the budget of " + std::to_string(limit));
    }
}

json fit_json(const std::vector<std::pair<double, double>> &series) {
    if (series.size() < 3) {
        return nullptr;
    }
    bool positive = true;
    for (const auto &p : series) {
        positive = positive && p.second > 0;
    }
    if (!positive) {
        return nullptr;
    }
    auto f = scaling_fit(series);
    return {{"log_slope", f.fit.slope}, {"r2", f.fit.r2}, {"class", scaling_class_name(f.cls)}};
}

// ---- runners ----

CsvTable run_variance(const json &cfg, json &meta) {
    BrickworkVarianceConfig c;
    c.qubits = get<std::vector<int>>(cfg, "qubits");
    for (int n : c.qubits) {
        if (n < 2) throw ConfigError("qubits must be >= 2");
        check_qubits(n, kMaxDenseQubits);
    }
    auto ansatz = get<std::string>(cfg, "ansatz");
    c.gates = parse_two_qubit_gates(ansatz);
    c.layers = get<int>(cfg, "layers");
    c.reset_every = get<int>(cfg, "reset_every");
    c.reset_stride = get<int>(cfg, "reset_stride");
    c.q = get<double>(cfg, "q");
    c.noise = get<double>(cfg, "noise");
    auto single = get<std::string>(cfg, "single_qubit");
    if (!single.empty() && single != "none") {
        c.single_qubit = parse_ensemble(single);
    }
    c.correlated = get<bool>(cfg, "correlated");
    c.correlation_period = get<int>(cfg, "correlation_period");
    c.site = get<int>(cfg, "site");
    c.target = get<std::string>(cfg, "target");
    c.method = parse_gradient_method(get<std::string>(cfg, "method"));
    c.samples = get<int>(cfg, "samples");
    c.seed = seed_of(cfg);
    auto points = run_brickwork_variance(c);
    auto t = new_table(cfg, {"n", "mean", "variance", "stderr", "samples"});
    std::vector<std::pair<double, double>> series;
    for (const auto &p : points) {
        t.add_row({fmt(p.n), fmt(p.estimate.mean), fmt(p.estimate.variance), fmt(p.estimate.std_error),
                   fmt(p.estimate.samples)});
        series.emplace_back(p.n, p.estimate.variance);
        meta["threads"] = p.estimate.threads;
    }
    meta["fit"] = fit_json(series);
    meta["stderr_method"] = "jackknife";
    return t;
}

std::vector<ToricAnsatz> toric_ansaetze(const json &cfg) {
    auto name = get<std::string>(cfg, "ansatz");
    if (name == "both") {
        return {ToricAnsatz::kUnitary, ToricAnsatz::kDissipative};
    }
    return {parse_toric_ansatz(name)};
}

ToricConfig toric_config(const json &cfg) {
    ToricConfig c;
    c.widths = get<std::vector<int>>(cfg, "widths");
    c.rows = get<int>(cfg, "rows");
    for (int w : c.widths) {
        check_qubits(2 * c.rows * w + 1, kMaxDenseQubits);
    }
    c.p = get<double>(cfg, "p");
    c.unitary_layers = get<int>(cfg, "unitary_layers");
    c.rounds = get<int>(cfg, "rounds");
    c.samples = get<int>(cfg, "samples");
    c.seed = seed_of(cfg);
    c.term = get<int>(cfg, "term");
    c.restarts = get<int>(cfg, "restarts");
    c.train.iterations = get<int>(cfg, "iterations");
    c.train.step = get<double>(cfg, "step");
    c.train.method = parse_gradient_method(get<std::string>(cfg, "gradient"));
    c.train.fd_step = get<double>(cfg, "fd_step");
    return c;
}

CsvTable run_toric_cmd(const json &cfg, json &meta) {
    auto c = toric_config(cfg);
    c.do_variance = get<bool>(cfg, "variance");
    c.do_train = get<bool>(cfg, "train");
    auto pts = run_toric(c, toric_ansaetze(cfg));
    auto t = new_table(cfg, {"ansatz", "n", "grad_mean", "grad_variance", "grad_stderr", "trained_term",
                             "trained_energy", "train_steps", "train_aborted"});
    std::map<std::string, std::vector<std::pair<double, double>>> var_series, term_series;
    for (const auto &p : pts) {
        auto g = p.gradient.value_or(VarianceEstimate{});
        auto name = toric_ansatz_name(p.ansatz);
        t.add_row({name, fmt(p.n), fmt(g.mean), fmt(g.variance), fmt(g.std_error), fmt(p.trained_term),
                   fmt(p.trained_energy), fmt(p.train_steps), fmt(p.train_aborted)});
        var_series[name].emplace_back(p.n, g.variance);
        term_series[name].emplace_back(p.n, std::abs(p.trained_term));
    }
    for (const auto &[name, s] : var_series) {
        meta["fit"][name]["gradient_variance"] = fit_json(s);
        meta["fit"][name]["trained_term"] = fit_json(term_series[name]);
    }
    meta["optimizer"] = {{"method", "gradient_descent"},
                         {"step", c.train.step},
                         {"iterations", c.train.iterations},
                         {"restarts", c.restarts},
                         {"gradient", get<std::string>(cfg, "gradient")}};
    return t;
}

CsvTable run_entropy_cmd(const json &cfg, json &meta) {
    auto mode = get<std::string>(cfg, "mode");
    if (mode == "layered") {
        int n = get<int>(cfg, "n");
        check_qubits(n, kMaxDenseQubits);
        double p = get<double>(cfg, "p");
        int L = get<int>(cfg, "layers");
        Rng rng = stream_rng(seed_of(cfg), 0);
        auto series = depolarizing_entropy_series(n, p, L, rng);
        auto t = new_table(cfg, {"L", "entropy", "layered_bound"});
        for (int l = 0; l <= L; l++) {
            t.add_row({fmt(l), fmt(series[static_cast<size_t>(l)]), fmt(layered_bound({n, 0, p, l, 0}))});
        }
        return t;
    }
    if (mode != "toric") {
        throw ConfigError("entropy mode must be 'toric' or 'layered'");
    }
    auto c = toric_config(cfg);
    c.do_variance = false;
    c.do_train = get<bool>(cfg, "train");
    c.do_entropy = true;
    auto pts = run_toric(c, toric_ansaetze(cfg));
    auto t = new_table(cfg, {"ansatz", "n", "entropy_normalized", "trained_energy"});
    for (const auto &p : pts) {
        t.add_row({toric_ansatz_name(p.ansatz), fmt(p.n), fmt(p.entropy_normalized), fmt(p.trained_energy)});
    }
    meta["entropy_unit"] = "bits";
    return t;
}

CsvTable run_steady_state_cmd(const json &cfg, json &meta) {
    if (get<std::string>(cfg, "circuit") != "bell_pump") {
        throw ConfigError("only circuit 'bell_pump' is available");
    }
    BellPumpOptions opt;
    opt.correction_angle = get<double>(cfg, "correction_angle");
    opt.tau = get<double>(cfg, "tau");
    opt.noise = get<double>(cfg, "noise");
    auto jump = bell_pump_jump(opt);
    std::vector<double> theta{opt.correction_angle};
    auto map = assemble_jump_map(jump, theta);
    auto cf = steady_state_closed_form(map);
    auto fp = steady_state_fixed_point(map, get<double>(cfg, "tol"), get<int>(cfg, "max_iter"));
    DensityState ss = from_coherence(full_coherence(map.n, cf.v));
    auto report = [](const SolveReport &r) {
        return json{{"method", r.method}, {"iterations", r.iterations}, {"residual", r.residual},
                    {"converged", r.converged}};
    };
    meta["closed_form"] = report(cf.report);
    meta["fixed_point"] = report(fp.report);
    meta["solution_difference"] = (cf.v - fp.v).norm();
    meta["bell_fidelity"] = fidelity(ss, bell_pump_target());
    auto inf = layered_convergence(jump, theta, ss, DensityState::zero(map.n), get<int>(cfg, "jumps"));
    auto t = new_table(cfg, {"jump", "infidelity"});
    for (size_t m = 0; m < inf.size(); m++) {
        t.add_row({fmt(static_cast<int>(m + 1)), fmt(inf[m])});
    }
    if (!fp.report.converged) {
        throw NumericalError("fixed-point iteration did not converge (residual " + fmt(fp.report.residual) + ")");
    }
    return t;
}

CsvTable run_vwc_cmd(const json &cfg, json &) {
    auto Ts = get<std::vector<int>>(cfg, "T");
    auto kappas = get<std::vector<double>>(cfg, "kappa");
    bool cond = get<bool>(cfg, "clock_conditioned");
    auto t = new_table(cfg, {"T", "kappa", "overlap", "residual"});
    for (double k : kappas) {
        for (int T : Ts) {
            if (T > kMaxVwcGates) {
                throw BudgetError("T exceeds " + std::to_string(kMaxVwcGates));
            }
            auto chain = build_chain(T, k);
            auto st = stationary_distribution(chain);
            t.add_row({fmt(T), fmt(k), fmt(output_overlap(chain, st.pi, cond)), fmt(st.residual)});
        }
    }
    return t;
}

CsvTable run_design_check_cmd(const json &cfg, json &) {
    auto kind = parse_ensemble(get<std::string>(cfg, "ensemble"));
    auto mode = get<std::string>(cfg, "mode");
    if (mode != "exact" && mode != "sampled") {
        throw ConfigError("mode must be 'exact' or 'sampled'");
    }
    bool exact = mode == "exact";
    int samples = get<int>(cfg, "samples");
    auto t = new_table(cfg, {"check", "operator", "deviation", "stderr"});
    const bool single = kind == EnsembleKind::kClifford1 || kind == EnsembleKind::kHaar1;
    const int nq = single ? 1 : 2;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * nq)); idx++) {
        auto p = PauliString::from_basis_index(nq, idx);
        auto r = check_first_moment(kind, p.dense(), exact, samples, seed_of(cfg));
        t.add_row({"first_moment", p.str(), fmt(r.deviation), fmt(r.stderr_max)});
    }
    if (exact && single) {
        for (std::uint64_t a = 1; a < 4; a++) {
            for (std::uint64_t b = 1; b < 4; b++) {
                auto p1 = PauliString::from_basis_index(1, a);
                auto p2 = PauliString::from_basis_index(1, b);
                double e = check_pauli_mixing(kind, p1, p2);
                t.add_row({"pauli_mixing", p1.str() + p2.str(), fmt(e), fmt(0.0)});
            }
        }
        Rng rng = stream_rng(seed_of(cfg), 1);
        for (const char *text : {"Z", "XY", "ZIZ"}) {
            auto p = PauliString::from_text(text);
            Matrix b = random_density(p.num_qubits(), 1 << p.num_qubits(), rng).rho();
            auto r = check_single_layer_second_moment(p, b);
            t.add_row({"second_moment", text, fmt(std::abs(r.lhs - r.rhs)), fmt(0.0)});
        }
    }
    return t;
}

CsvTable run_bounds_cmd(const json &cfg, json &) {
    auto t = new_table(cfg, {"n", "L", "q", "p", "site", "variance_bound", "cost_variance", "cost_stderr", "variance_ok",
                             "gradient_bound", "gradient_variance", "gradient_stderr", "gradient_ok"});
    std::uint64_t seed = seed_of(cfg);
    int index = 0;
    for (int n : get<std::vector<int>>(cfg, "n")) {
        check_qubits(n, kMaxDenseQubits);
        for (int L : get<std::vector<int>>(cfg, "L")) {
            for (double q : get<std::vector<double>>(cfg, "q")) {
                for (double p : get<std::vector<double>>(cfg, "p")) {
                    BoundCheckConfig c;
                    c.n = n;
                    c.L = L;
                    c.q = q;
                    c.p = p;
                    c.M = get<int>(cfg, "M");
                    c.samples = get<int>(cfg, "samples");
                    c.C = get<double>(cfg, "C");
                    c.seed = mix_seed(seed + static_cast<std::uint64_t>(index++));
                    auto r = run_bound_check(c);
                    t.add_row({fmt(n), fmt(L), fmt(q), fmt(p), fmt(r.cfg.site), fmt(r.variance_bound.bound), fmt(r.cost.variance),
                               fmt(r.cost.std_error), fmt(r.variance_ok), fmt(r.gradient_bound),
                               fmt(r.gradient.variance), fmt(r.gradient.std_error), fmt(r.gradient_ok)});
                }
            }
        }
    }
    return t;
}

using Runner = CsvTable (*)(const json &, json &);

struct Entry {
    Command cmd;
    Runner run;
};

std::vector<Entry> commands() {
    json toric_common = {{"ansatz", "both"},   {"widths", {3, 4, 5}}, {"rows", 1},          {"p", 0.1},
                         {"unitary_layers", 0}, {"rounds", 2},         {"samples", 200},    {"seed", 11},
                         {"term", 1},           {"train", true},       {"iterations", 300}, {"step", 0.05},
                         {"gradient", "finite_diff"}, {"fd_step", 1e-4}, {"restarts", 1}};
    std::vector<std::pair<std::string, std::string>> toric_flags = {
        {"ansatz", "ansatz"}, {"widths", "widths"},     {"rows", "rows"},     {"p", "p"},
        {"unitary-layers", "unitary_layers"},           {"rounds", "rounds"}, {"samples", "samples"},
        {"seed", "seed"},     {"term", "term"},         {"train", "train"},   {"iterations", "iterations"},
        {"step", "step"},     {"gradient", "gradient"}, {"fd-step", "fd_step"}, {"restarts", "restarts"}};
    json toric_cfg = toric_common;
    toric_cfg["variance"] = true;
    auto toric_cmd_flags = toric_flags;
    toric_cmd_flags.emplace_back("variance", "variance");
    json entropy_cfg = toric_common;
    entropy_cfg["mode"] = "toric";
    entropy_cfg["n"] = 4;
    entropy_cfg["layers"] = 20;
    auto entropy_flags = toric_flags;
    entropy_flags.emplace_back("mode", "mode");
    entropy_flags.emplace_back("n", "n");
    entropy_flags.emplace_back("layers", "layers");
    return {
        {{"variance", "Variance of a gradient or cost over random brickwork circuits",
          {{"ansatz", "brickwork"}, {"qubits", {4, 6, 8}}, {"layers", 40}, {"reset_every", 0},
           {"reset_stride", 2}, {"q", 1.0}, {"noise", 0.0}, {"single_qubit", "none"}, {"correlated", false},
           {"correlation_period", 5}, {"site", 1}, {"target", "gradient"}, {"method", "parameter_shift"},
           {"samples", 200}, {"seed", 7}},
          {{"ansatz", "ansatz"}, {"qubits", "qubits"}, {"layers", "layers"}, {"reset-every", "reset_every"},
           {"reset-stride", "reset_stride"}, {"q", "q"}, {"noise", "noise"}, {"single-qubit", "single_qubit"},
           {"correlated", "correlated"}, {"correlation-period", "correlation_period"}, {"site", "site"},
           {"target", "target"}, {"method", "method"}, {"samples", "samples"}, {"seed", "seed"}}},
         run_variance},
        {{"toric", "Toric-code gradient variance and trained expectation values", toric_cfg, toric_cmd_flags},
         run_toric_cmd},
        {{"entropy", "Entropy of trained toric states or of depolarizing layers", entropy_cfg, entropy_flags},
         run_entropy_cmd},
        {{"steady-state", "Steady state and layered convergence of the Bell pump",
          {{"circuit", "bell_pump"}, {"correction_angle", std::numbers::pi / 4}, {"tau", 0.1}, {"noise", 0.0},
           {"jumps", 60}, {"tol", 1e-10}, {"max_iter", 100000}},
          {{"circuit", "circuit"}, {"correction-angle", "correction_angle"}, {"tau", "tau"}, {"noise", "noise"},
           {"jumps", "jumps"}, {"tol", "tol"}, {"max-iter", "max_iter"}}},
         run_steady_state_cmd},
        {{"vwc", "Output overlap of the dissipative computation under bit-flip noise",
          {{"T", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, {"kappa", {0.0}}, {"clock_conditioned", false}},
          {{"T", "T"}, {"kappa", "kappa"}, {"clock-conditioned", "clock_conditioned"}}},
         run_vwc_cmd},
        {{"design-check", "Moment identities of single- and two-qubit ensembles",
          {{"ensemble", "clifford1"}, {"mode", "exact"}, {"samples", 20000}, {"seed", 5}},
          {{"ensemble", "ensemble"}, {"mode", "mode"}, {"samples", "samples"}, {"seed", "seed"}}},
         run_design_check_cmd},
        {{"bounds", "Analytic lower bounds against Monte-Carlo variances",
          {{"n", {4}}, {"L", {1}}, {"q", {1.0}}, {"p", {0.1}}, {"M", 2}, {"samples", 2000}, {"seed", 3},
           {"C", kDefaultCliffordConstant}},
          {{"n", "n"}, {"L", "L"}, {"q", "q"}, {"p", "p"}, {"M", "M"}, {"samples", "samples"}, {"seed", "seed"},
           {"C", "C"}}},
         run_bounds_cmd},
    };
}

void configure_threads() {
    const char *env = std::getenv("DISSIM_THREADS");
    if (env == nullptr || *env == '\0') {
        return;
    }
    int k = 0;
    try {
        k = std::stoi(env);
    } catch (const std::exception &) {
        throw ConfigError("DISSIM_THREADS must be a positive integer");
    }
    if (k < 1) {
        throw ConfigError("DISSIM_THREADS must be a positive integer");
    }
#ifdef _OPENMP
    omp_set_num_threads(k);
#endif
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace
}  // namespace dissim

int main(int argc, char **argv) {
    using namespace dissim;
    CLI::App app{"dissim: simulation of dissipative parameterized quantum circuits"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    auto entries = commands();
    struct Parsed {
        CLI::App *sub;
        std::string config_path;
        std::string out;
        std::map<std::string, std::string> values;
    };
    std::vector<Parsed> parsed(entries.size());
    for (size_t k = 0; k < entries.size(); k++) {
        auto &e = entries[k];
        auto &p = parsed[k];
        p.sub = app.add_subcommand(e.cmd.name, e.cmd.help);
        p.sub->add_option("--config", p.config_path, "JSON config; unknown keys are rejected");
        p.sub->add_option("--out", p.out, "CSV output path (sidecar at <out>.json); stdout if omitted");
        for (const auto &[flag, key] : e.cmd.flags) {
            p.sub->add_option("--" + flag, p.values[key], "default " + e.cmd.defaults.at(key).dump());
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        configure_threads();
        for (size_t k = 0; k < entries.size(); k++) {
            auto &p = parsed[k];
            if (!*p.sub) {
                continue;
            }
            const auto &e = entries[k];
            json cfg = e.cmd.defaults;
            if (!p.config_path.empty()) {
                merge_config(cfg, load_config_file(p.config_path), p.config_path);
            }
            for (const auto &[flag, key] : e.cmd.flags) {
                auto opt = p.sub->get_option("--" + flag);
                if (opt->count() > 0) {
                    cfg[key] = parse_flag_value(e.cmd.defaults.at(key), p.values[key], flag);
                }
            }
            json meta;
            meta["experiment"] = e.cmd.name;
            meta["threads"] = threads();
            auto t0 = std::chrono::steady_clock::now();
            CsvTable table = e.run(cfg, meta);
            meta["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (p.out.empty()) {
                std::cout << to_csv(table);
            } else {
                write_record(p.out, table, cfg, meta);
            }
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError &e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
