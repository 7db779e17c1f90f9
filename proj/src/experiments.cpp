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

#include "dissim/experiments.hpp"

#include <cmath>
#include <numbers>

#include "dissim/error.hpp"
#include "dissim/state.hpp"

namespace dissim {

namespace {

std::vector<double> uniform_angles(int count, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    std::vector<double> th(static_cast<size_t>(count));
    for (auto &t : th) {
        t = u(rng);
    }
    return th;
}

CircuitProgram brickwork_circuit(const BrickworkVarianceConfig &cfg, int n, Rng &rng) {
    if (cfg.layers < 1) {
        throw ConfigError("layers must be positive");
    }
    Lattice lat(1, n);
    int L = cfg.layers;
    int M = 1;
    double q = 0;
    if (cfg.reset_every > 0) {
        if (cfg.layers % cfg.reset_every != 0) {
            throw ConfigError("layers must be a multiple of reset_every");
        }
        if (cfg.reset_stride < 1) {
            throw ConfigError("reset_stride must be positive");
        }
        L = cfg.reset_every;
        M = cfg.layers / cfg.reset_every;
        q = cfg.q;
        for (int s = 0; s < n; s += cfg.reset_stride) {
            lat.reset_sites.push_back(s);
        }
    }
    AnsatzSpec a;
    a.gates = cfg.gates;
    a.single_qubit = cfg.single_qubit;
    if (cfg.noise > 0) {
        a.noise = std::make_shared<KrausChannel>(depolarizing(cfg.noise));
    }
    a.correlated = cfg.correlated;
    a.correlation_period = cfg.correlation_period;
    return build_dissipative_circuit(lat, L, M, q, a, rng);
}

}  // namespace

double brickwork_sample(const BrickworkVarianceConfig &cfg, int n, Rng &rng) {
    if (cfg.site < 0 || cfg.site >= n) {
        throw ConfigError("observable site out of range");
    }
    auto circ = brickwork_circuit(cfg, n, rng);
    auto theta = uniform_angles(circ.num_params, rng);
    CostSpec spec{circ, Observable(1.0, PauliString::single(n, cfg.site, Pauli::Z)), InitialState::zero()};
    spec.light_cone = true;
    CostEvaluator eval(spec);
    if (cfg.target == "cost") {
        return eval.cost(theta);
    }
    if (cfg.target != "gradient") {
        throw ConfigError("target must be 'cost' or 'gradient'");
    }
    int mu = circ.designated_param(cfg.site);
    if (mu < 0) {
        throw ConfigError("no parameterized gate on the observable site in the final layer");
    }
    return eval.gradient(theta, mu, cfg.method);
}

std::vector<VariancePoint> run_brickwork_variance(const BrickworkVarianceConfig &cfg) {
    std::vector<VariancePoint> out;
    for (size_t k = 0; k < cfg.qubits.size(); k++) {
        int n = cfg.qubits[k];
        std::uint64_t seed = mix_seed(cfg.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
        out.push_back({n, estimate_variance([&](Rng &rng, int) { return brickwork_sample(cfg, n, rng); },
                                            cfg.samples, seed)});
    }
    return out;
}

std::string toric_ansatz_name(ToricAnsatz a) { return a == ToricAnsatz::kUnitary ? "unitary" : "dissipative"; }

ToricAnsatz parse_toric_ansatz(const std::string &name) {
    if (name == "unitary" || name == "toric_unitary") return ToricAnsatz::kUnitary;
    if (name == "dissipative" || name == "toric_dissipative") return ToricAnsatz::kDissipative;
    throw ConfigError("unknown toric ansatz '" + name + "'");
}

ToricProblem make_toric_problem(const ToricConfig &cfg, int width, ToricAnsatz ansatz) {
    ToricProblem prob;
    prob.lattice = ToricLattice(cfg.rows, width);
    prob.ansatz = ansatz;
    if (ansatz == ToricAnsatz::kUnitary) {
        int layers = cfg.unitary_layers > 0 ? cfg.unitary_layers : width;
        prob.circuit = toric_unitary_circuit(prob.lattice, layers, cfg.p);
        prob.grad_param = 1;
    } else {
        prob.circuit = toric_dissipative_circuit(prob.lattice, cfg.rounds, cfg.p);
        prob.grad_param = 1;
    }
    prob.energy = toric_energy_cost(prob.lattice, prob.circuit.num_qubits);
    const int plaquettes = static_cast<int>(prob.lattice.plaquettes().size());
    if (cfg.term < 0 || cfg.term >= plaquettes) {
        throw ConfigError("term index out of range");
    }
    prob.term_index = cfg.term;
    return prob;
}

InitialState toric_variance_initial(const ToricProblem &prob) {
    return prob.ansatz == ToricAnsatz::kUnitary ? InitialState::plus() : toric_dissipative_initial(prob.lattice);
}

InitialState toric_training_initial(const ToricProblem &prob) {
    return prob.ansatz == ToricAnsatz::kUnitary ? InitialState::zero() : toric_dissipative_initial(prob.lattice);
}

ToricPoint run_toric_point(const ToricConfig &cfg, int width, ToricAnsatz ansatz) {
    auto prob = make_toric_problem(cfg, width, ansatz);
    ToricPoint pt;
    pt.n = prob.lattice.num_qubits();
    pt.ansatz = ansatz;
    const std::uint64_t base = mix_seed(cfg.seed ^ (static_cast<std::uint64_t>(width) << 8) ^
                                        static_cast<std::uint64_t>(ansatz == ToricAnsatz::kDissipative));
    if (cfg.do_variance) {
        CostSpec spec{prob.circuit, prob.energy, toric_variance_initial(prob)};
        spec.light_cone = true;
        CostEvaluator eval(spec);
        pt.gradient = estimate_variance(
            [&](Rng &rng, int) {
                auto th = uniform_angles(prob.circuit.num_params, rng);
                return eval.gradient(th, prob.grad_param, GradientMethod::kCommutator);
            },
            cfg.samples, base);
    }
    if (cfg.do_train || cfg.do_entropy) {
        CostSpec spec{prob.circuit, prob.energy, toric_training_initial(prob)};
        spec.light_cone = true;
        CostEvaluator eval(spec);
        TrainOptions opt = cfg.train;
        if (!cfg.do_train) {
            opt.iterations = 0;
        }
        if (cfg.restarts < 1) {
            throw ConfigError("restarts must be at least 1");
        }
        TrainResult res;
        if (ansatz == ToricAnsatz::kUnitary) {
            for (int r = 0; r < cfg.restarts; r++) {
                Rng rng = stream_rng(base, 0xA11CEULL + static_cast<std::uint64_t>(r));
                auto run = train(eval, uniform_angles(prob.circuit.num_params, rng), opt);
                if (r == 0 || run.curve.back() < res.curve.back()) {
                    res = std::move(run);
                }
            }
        } else {
            res = train(eval, std::vector<double>(static_cast<size_t>(prob.circuit.num_params), std::numbers::pi),
                        opt);
        }
        pt.theta = res.theta;
        pt.train_steps = static_cast<int>(res.curve.size()) - 1;
        pt.train_aborted = res.aborted;
        auto values = eval.term_values(res.theta);
        pt.trained_term = values.at(static_cast<size_t>(prob.term_index));
        pt.trained_energy = -eval.cost(res.theta);
        if (cfg.do_entropy) {
            const int nsys = prob.lattice.num_qubits();
            DensityState s = toric_training_initial(prob).density(prob.circuit.num_qubits);
            auto ops = prob.circuit.flat_ops();
            run_ops(s, ops, res.theta, 0, ops.size());
            if (prob.circuit.num_qubits > nsys) {
                std::vector<int> keep(static_cast<size_t>(nsys));
                for (int k = 0; k < nsys; k++) {
                    keep[static_cast<size_t>(k)] = k;
                }
                s = partial_trace(s, keep);
            }
            pt.entropy_normalized = von_neumann_entropy(s) / nsys;
        }
    }
    return pt;
}

std::vector<ToricPoint> run_toric(const ToricConfig &cfg, const std::vector<ToricAnsatz> &ansaetze) {
    std::vector<ToricPoint> out;
    for (auto a : ansaetze) {
        for (int w : cfg.widths) {
            out.push_back(run_toric_point(cfg, w, a));
        }
    }
    return out;
}

BoundCheck run_bound_check(const BoundCheckConfig &cfg) {
    if (cfg.n < 2 || cfg.L < 1 || cfg.M < 1) {
        throw ConfigError("bound check needs n >= 2, L >= 1 and M >= 1");
    }
    BoundCheck out;
    out.cfg = cfg;
    // The probe is absorbed into the random brick on its pair, so it must share the final layer's parity.
    const int parity = (cfg.L * cfg.M - 1) % 2;
    const int site = cfg.site < 0 ? parity : cfg.site;
    if (site + 1 >= cfg.n || site % 2 != parity) {
        throw ConfigError("probe pair (site, site + 1) is not a brick of the final layer");
    }
    out.cfg.site = site;
    const int n_r = cfg.n_r > 0 ? cfg.n_r : cfg.n / 2;
    Lattice lat = place_reset_sites(cfg.n, n_r, 1);
    auto noise = std::make_shared<KrausChannel>(depolarizing(cfg.p));
    AnsatzSpec a;
    a.gates = TwoQubitGates::kClifford;
    a.single_qubit = EnsembleKind::kClifford1;
    a.noise = noise;
    const Matrix zz = PauliString::from_text("ZZ").dense();
    Observable obs(1.0, PauliString::single(cfg.n, site, Pauli::Z));

    BoundParams bp;
    bp.d = 1;
    bp.K = diameter(obs, lat) + 1;
    bp.L = cfg.L;
    bp.n = cfg.n;
    bp.n_r = n_r;
    bp.q = cfg.q;
    bp.D_max = contraction_profile(*noise).D_max;
    bp.C = cfg.C;
    bp.i = 1;
    bp.h_norm = 1;
    bp.sum_a2 = obs.non_identity_weight();
    out.params = bp;
    out.variance_bound = variance_lower_bound(bp);
    out.gradient_bound = gradient_variance_lower_bound(bp);

    auto sample = [&](Rng &rng, bool gradient) {
        AnsatzSpec spec = a;
        if (gradient) {
            spec.probe = ProbeGate{zz, site};
        }
        auto circ = build_dissipative_circuit(lat, cfg.L, cfg.M, cfg.q, spec, rng);
        auto theta = uniform_angles(circ.num_params, rng);
        CostSpec cs{circ, obs, InitialState::zero()};
        cs.light_cone = true;
        CostEvaluator eval(cs);
        return gradient ? eval.gradient(theta, circ.designated_param(site), GradientMethod::kCommutator)
                        : eval.cost(theta);
    };
    out.cost = estimate_variance([&](Rng &rng, int) { return sample(rng, false); }, cfg.samples, cfg.seed);
    out.gradient =
        estimate_variance([&](Rng &rng, int) { return sample(rng, true); }, cfg.samples, mix_seed(cfg.seed + 1));
    out.variance_ok = out.variance_bound.bound <= out.cost.variance + kZ99 * out.cost.std_error;
    out.gradient_ok = out.gradient_bound <= out.gradient.variance + kZ99 * out.gradient.std_error;
    return out;
}

std::vector<double> depolarizing_entropy_series(int n, double p, int L, Rng &rng) {
    if (L < 0) {
        throw ConfigError("layer count must be nonnegative");
    }
    Lattice lat(1, n);
    KrausChannel dep = depolarizing(p);
    DensityState s = DensityState::zero(n);
    std::vector<double> out{von_neumann_entropy(s)};
    for (int l = 1; l <= L; l++) {
        for (auto [x, y] : lat.brickwork_pairs(0, (l - 1) % 2)) {
            std::vector<int> sites{x, y};
            s.apply_unitary(haar_unitary(4, rng), sites);
        }
        for (int k = 0; k < n; k++) {
            std::vector<int> site{k};
            s.apply_channel(dep, site);
        }
        out.push_back(von_neumann_entropy(s));
    }
    return out;
}

}  // namespace dissim
