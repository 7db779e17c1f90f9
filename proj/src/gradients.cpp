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

#include "dissim/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "dissim/error.hpp"
#include "dissim/kernels.hpp"

namespace dissim {

namespace {

FactoredState factored_initial(const InitialState &init, int n) {
    if (init.kind == InitialState::Kind::kZero) {
        return FactoredState::zero(n);
    }
    if (init.kind == InitialState::Kind::kPlus) {
        auto dim = Eigen::Index{1} << n;
        Vector psi = Vector::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0));
        return FactoredState::pure(psi);
    }
    return FactoredState::from_density(init.density(n));
}

template <typename State>
double observe(const State &state, const std::vector<std::pair<double, PauliString>> &terms) {
    double total = 0;
    for (const auto &[a, p] : terms) {
        total += a * state.expectation(p);
    }
    return total;
}

Matrix adjoint_superoperator(const KrausChannel &ch) {
    auto dim = Eigen::Index{1} << ch.num_qubits();
    Matrix s = Matrix::Zero(dim * dim, dim * dim);
    for (const auto &k : ch.kraus()) {
        Matrix kd = k.adjoint();
        s += kron(kd, Matrix(kd.conjugate()));
    }
    return s;
}

// op <- Phi_k^*(op) for a single operation.
void heisenberg_step(Matrix &op, const Operation &gate, double theta, int n) {
    if (gate.kind == OpKind::kChannel) {
        const auto &ch = *gate.channel;
        if (ch.num_qubits() <= 2) {
            apply_superoperator(op, adjoint_superoperator(ch), gate.sites, n);
        } else {
            Matrix acc = Matrix::Zero(op.rows(), op.cols());
            for (const auto &k : ch.kraus()) {
                Matrix t = op;
                Matrix kd = k.adjoint();
                apply_left(t, kd, gate.sites, n);
                apply_right_adjoint(t, kd, gate.sites, n);
                acc += t;
            }
            op = std::move(acc);
        }
        return;
    }
    Matrix ud = gate.matrix(theta).adjoint();
    apply_left(op, ud, gate.sites, n);
    apply_right_adjoint(op, ud, gate.sites, n);
}

double involution_scale(const Operation &op) {
    const auto &w = op.eigenvalues;
    double r = w.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < w.size(); k++) {
        if (std::abs(std::abs(w(k)) - r) > 1e-10) {
            throw ConfigError("parameter shift needs a generator with H^2 proportional to I (op '" +
                              op.label + "')");
        }
    }
    return r;
}

}  // namespace

GradientMethod parse_gradient_method(const std::string &name) {
    if (name == "commutator") return GradientMethod::kCommutator;
    if (name == "parameter_shift" || name == "shift") return GradientMethod::kParameterShift;
    if (name == "finite_diff" || name == "fd") return GradientMethod::kFiniteDiff;
    throw ConfigError("unknown gradient method '" + name + "'");
}

CostEvaluator::CostEvaluator(const CostSpec &spec) : num_params_(spec.circuit.num_params) {
    const auto &circ = spec.circuit;
    num_terms_ = spec.observable.terms.size();
    if (spec.observable.num_qubits() != 0 && spec.observable.num_qubits() != circ.num_qubits) {
        throw ConfigError("observable size does not match circuit");
    }
    std::vector<int> active;
    for (size_t t = 0; t < spec.observable.terms.size(); t++) {
        const auto &[a, p] = spec.observable.terms[t];
        if (p.is_identity()) {
            constant_ += a * p.sign;
            constant_terms_.push_back(static_cast<int>(t));
        } else {
            active.push_back(static_cast<int>(t));
        }
    }
    if (active.empty()) {
        return;
    }
    if (!spec.light_cone) {
        std::vector<int> all(static_cast<size_t>(circ.num_qubits));
        for (int k = 0; k < circ.num_qubits; k++) {
            all[static_cast<size_t>(k)] = k;
        }
        add_part(circ, active, spec.observable, spec.rho0, all, spec.backend);
        return;
    }
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int t : active) {
        auto cone = reduce_to_light_cone(circ, spec.observable.terms[static_cast<size_t>(t)].second.support());
        groups[cone.sites].push_back(t);
    }
    for (auto &[sites, ids] : groups) {
        std::set<int> support;
        for (int t : ids) {
            for (int s : spec.observable.terms[static_cast<size_t>(t)].second.support()) {
                support.insert(s);
            }
        }
        auto red = reduce_to_light_cone(circ, std::vector<int>(support.begin(), support.end()));
        Part part;
        part.circuit = std::move(red.circuit);
        part.term_index = ids;
        for (int t : ids) {
            const auto &[a, p] = spec.observable.terms[static_cast<size_t>(t)];
            part.terms.emplace_back(a, restrict_pauli(p, red.sites));
        }
        part.rho0 = spec.rho0.marginal(circ.num_qubits, red.sites);
        part.factored = spec.backend == Backend::kFactored ||
                        (spec.backend == Backend::kAuto && part.rho0.is_pure() && prefers_factored(part.circuit));
        mark_causal(part);
        parts_.push_back(std::move(part));
    }
}

void CostEvaluator::add_part(const CircuitProgram &circ, std::vector<int> term_ids, const Observable &obs,
                             const InitialState &rho0, std::vector<int> sites, Backend backend) {
    (void)sites;
    Part part;
    part.circuit = circ;
    part.term_index = std::move(term_ids);
    for (int t : part.term_index) {
        part.terms.push_back(obs.terms[static_cast<size_t>(t)]);
    }
    part.rho0 = rho0;
    part.factored = backend == Backend::kFactored ||
                    (backend == Backend::kAuto && rho0.is_pure() && prefers_factored(circ));
    mark_causal(part);
    parts_.push_back(std::move(part));
}

void CostEvaluator::mark_causal(Part &part) {
    std::set<int> support;
    for (const auto &[a, p] : part.terms) {
        for (int q : p.support()) {
            support.insert(q);
        }
    }
    auto red = reduce_to_light_cone(part.circuit, std::vector<int>(support.begin(), support.end()));
    part.causal.assign(part.circuit.flat_ops().size(), 0);
    for (int k : red.kept_ops) {
        part.causal[static_cast<size_t>(k)] = 1;
    }
}

std::vector<int> CostEvaluator::part_sizes() const {
    std::vector<int> out;
    for (const auto &p : parts_) {
        out.push_back(p.circuit.num_qubits);
    }
    return out;
}

double CostEvaluator::part_cost(const Part &part, std::span<const double> theta) const {
    auto ops = part.circuit.flat_ops();
    int n = part.circuit.num_qubits;
    if (part.factored) {
        FactoredState s = factored_initial(part.rho0, n);
        run_ops(s, ops, theta, 0, ops.size());
        return observe(s, part.terms);
    }
    DensityState s = part.rho0.density(n);
    run_ops(s, ops, theta, 0, ops.size());
    return observe(s, part.terms);
}

double CostEvaluator::cost(std::span<const double> theta) const {
    if (static_cast<int>(theta.size()) < num_params_) {
        throw ConfigError("parameter vector too short");
    }
    double total = constant_;
    for (const auto &part : parts_) {
        total += part_cost(part, theta);
    }
    return total;
}

std::vector<double> CostEvaluator::term_values(std::span<const double> theta) const {
    std::vector<double> out(num_terms_, 0.0);
    for (int t : constant_terms_) {
        out[static_cast<size_t>(t)] = 1.0;
    }
    for (const auto &part : parts_) {
        auto ops = part.circuit.flat_ops();
        int n = part.circuit.num_qubits;
        auto fill = [&](const auto &state) {
            for (size_t j = 0; j < part.terms.size(); j++) {
                PauliString p = part.terms[j].second;
                out[static_cast<size_t>(part.term_index[j])] = state.expectation(p);
            }
        };
        if (part.factored) {
            FactoredState s = factored_initial(part.rho0, n);
            run_ops(s, ops, theta, 0, ops.size());
            fill(s);
        } else {
            DensityState s = part.rho0.density(n);
            run_ops(s, ops, theta, 0, ops.size());
            fill(s);
        }
    }
    return out;
}

double CostEvaluator::part_shift_gradient(const Part &part, std::span<const double> theta, int mu) const {
    auto ops = part.circuit.flat_ops();
    int n = part.circuit.num_qubits;
    std::vector<size_t> occ;
    for (size_t k = 0; k < ops.size(); k++) {
        if (ops[k]->kind == OpKind::kRotation && ops[k]->param == mu && part.causal[k]) {
            occ.push_back(k);
        }
    }
    if (occ.empty()) {
        return 0.0;
    }
    auto run = [&](auto state) {
        double g = 0;
        size_t pos = 0;
        for (size_t k : occ) {
            run_ops(state, ops, theta, pos, k);
            pos = k;
            const auto &op = *ops[k];
            double r = involution_scale(op);
            double shift = std::numbers::pi / (4.0 * r);
            double base = theta[static_cast<size_t>(mu)];
            auto plus = state;
            auto minus = state;
            apply_op(plus, op, base + shift);
            apply_op(minus, op, base - shift);
            run_ops(plus, ops, theta, k + 1, ops.size());
            run_ops(minus, ops, theta, k + 1, ops.size());
            g += r * (observe(plus, part.terms) - observe(minus, part.terms));
        }
        return g;
    };
    if (part.factored) {
        return run(factored_initial(part.rho0, n));
    }
    return run(part.rho0.density(n));
}

double CostEvaluator::part_commutator_gradient(const Part &part, std::span<const double> theta, int mu) const {
    auto ops = part.circuit.flat_ops();
    int n = part.circuit.num_qubits;
    std::vector<size_t> occ;
    for (size_t k = 0; k < ops.size(); k++) {
        if (ops[k]->kind == OpKind::kRotation && ops[k]->param == mu && part.causal[k]) {
            occ.push_back(k);
        }
    }
    if (occ.empty()) {
        return 0.0;
    }
    // States right after each occurrence.
    std::vector<Matrix> sigma;
    DensityState s = part.rho0.density(n);
    size_t pos = 0;
    for (size_t k : occ) {
        run_ops(s, ops, theta, pos, k + 1);
        pos = k + 1;
        sigma.push_back(s.rho());
    }
    // Backward pass with the support of the evolving observable.
    Observable obs;
    for (const auto &[a, p] : part.terms) {
        obs.add(a, p);
    }
    Matrix o = obs.dense();
    std::set<int> support;
    for (const auto &[a, p] : part.terms) {
        for (int q : p.support()) {
            support.insert(q);
        }
    }
    double g = 0;
    size_t next = occ.size();
    for (size_t k = ops.size(); k-- > occ.front();) {
        const auto &op = *ops[k];
        bool touches = std::any_of(op.sites.begin(), op.sites.end(), [&](int q) { return support.count(q) > 0; });
        if (next > 0 && k == occ[next - 1]) {
            next--;
            if (touches) {
                Matrix ho = o;
                apply_left(ho, op.generator, op.sites, n);
                Matrix comm = ho - ho.adjoint();
                cplx tr = sigma[next].cwiseProduct(comm.transpose()).sum();
                g += (cplx(0, 1) * tr).real();
            }
        }
        if (!touches) {
            continue;
        }
        heisenberg_step(o, op, op_angle(op, theta), n);
        if (op.is_perfect_reset()) {
            support.erase(op.sites.front());
        } else {
            support.insert(op.sites.begin(), op.sites.end());
        }
    }
    return g;
}

double CostEvaluator::gradient(std::span<const double> theta, int mu, GradientMethod method, double fd_step) const {
    if (mu < 0 || mu >= num_params_) {
        throw ConfigError("parameter index " + std::to_string(mu) + " out of range");
    }
    if (static_cast<int>(theta.size()) < num_params_) {
        throw ConfigError("parameter vector too short");
    }
    switch (method) {
        case GradientMethod::kFiniteDiff: {
            std::vector<double> t(theta.begin(), theta.end());
            t[static_cast<size_t>(mu)] += fd_step;
            double up = cost(t);
            t[static_cast<size_t>(mu)] -= 2 * fd_step;
            double down = cost(t);
            return (up - down) / (2 * fd_step);
        }
        case GradientMethod::kParameterShift: {
            double g = 0;
            for (const auto &part : parts_) {
                g += part_shift_gradient(part, theta, mu);
            }
            return g;
        }
        case GradientMethod::kCommutator: {
            double g = 0;
            for (const auto &part : parts_) {
                g += part_commutator_gradient(part, theta, mu);
            }
            return g;
        }
    }
    return 0.0;
}

std::vector<double> CostEvaluator::gradient_fd_all(std::span<const double> theta, double fd_step) const {
    std::vector<double> g(static_cast<size_t>(num_params_));
    for (int mu = 0; mu < num_params_; mu++) {
        g[static_cast<size_t>(mu)] = gradient(theta, mu, GradientMethod::kFiniteDiff, fd_step);
    }
    return g;
}

double cost(const CostSpec &spec, std::span<const double> theta) {
    return CostEvaluator(spec).cost(theta);
}

double gradient_commutator(const CostSpec &spec, std::span<const double> theta, int mu) {
    return CostEvaluator(spec).gradient(theta, mu, GradientMethod::kCommutator);
}

double gradient(const CostSpec &spec, std::span<const double> theta, int mu, GradientMethod method) {
    return CostEvaluator(spec).gradient(theta, mu, method);
}

}  // namespace dissim
