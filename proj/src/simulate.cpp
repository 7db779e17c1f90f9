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

#include "dissim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dissim/error.hpp"

namespace dissim {

namespace {

Matrix plus_projector() {
    return Matrix::Constant(2, 2, cplx(0.5, 0));
}

void check_theta(const CircuitProgram &circ, std::span<const double> theta) {
    if (static_cast<int>(theta.size()) < circ.num_params) {
        throw ConfigError("parameter vector has " + std::to_string(theta.size()) + " entries, circuit needs " +
                          std::to_string(circ.num_params));
    }
}

bool intersects(const std::vector<int> &sites, const std::set<int> &s) {
    return std::any_of(sites.begin(), sites.end(), [&](int x) { return s.count(x) > 0; });
}

}  // namespace

DensityState InitialState::density(int n) const {
    switch (kind) {
        case Kind::kZero:
            return DensityState::zero(n);
        case Kind::kPlus:
            return DensityState::product(std::vector<Matrix>(static_cast<size_t>(n), plus_projector()));
        case Kind::kMixed:
            return DensityState::maximally_mixed(n);
        case Kind::kProduct:
            if (static_cast<int>(factors.size()) != n) {
                throw ConfigError("product initial state has the wrong number of factors");
            }
            return DensityState::product(factors);
        case Kind::kDense:
            return DensityState(n, dense);
    }
    return DensityState::zero(n);
}

InitialState InitialState::marginal(int n, const std::vector<int> &sites) const {
    switch (kind) {
        case Kind::kZero:
        case Kind::kPlus:
        case Kind::kMixed:
            return *this;
        case Kind::kProduct: {
            std::vector<Matrix> f;
            for (int s : sites) {
                f.push_back(factors.at(static_cast<size_t>(s)));
            }
            return product(std::move(f));
        }
        case Kind::kDense:
            return from_density(partial_trace(DensityState(n, dense), sites));
    }
    return *this;
}

DensityState evaluate(const CircuitProgram &circ, std::span<const double> theta, const DensityState &rho0) {
    check_theta(circ, theta);
    if (rho0.num_qubits() != circ.num_qubits) {
        throw ConfigError("initial state size does not match circuit");
    }
    DensityState s = rho0;
    auto ops = circ.flat_ops();
    run_ops(s, ops, theta, 0, ops.size());
    return s;
}

FactoredState evaluate_factored(const CircuitProgram &circ, std::span<const double> theta,
                                const FactoredState &rho0) {
    check_theta(circ, theta);
    if (rho0.num_qubits() != circ.num_qubits) {
        throw ConfigError("initial state size does not match circuit");
    }
    FactoredState s = rho0;
    auto ops = circ.flat_ops();
    run_ops(s, ops, theta, 0, ops.size());
    return s;
}

bool prefers_factored(const CircuitProgram &circ) {
    for (const auto *op : circ.flat_ops()) {
        if (op->kind == OpKind::kChannel && !op->is_perfect_reset() && !op->channel->is_unitary()) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> light_cone(const CircuitProgram &circ, const std::vector<int> &support) {
    std::set<int> s(support.begin(), support.end());
    std::vector<std::vector<int>> out(circ.layers.size());
    for (size_t li = circ.layers.size(); li-- > 0;) {
        const auto &layer = circ.layers[li];
        for (auto it = layer.ops.rbegin(); it != layer.ops.rend(); ++it) {
            if (!intersects(it->sites, s)) {
                continue;
            }
            if (it->is_perfect_reset()) {
                s.erase(it->sites.front());
            } else {
                s.insert(it->sites.begin(), it->sites.end());
            }
        }
        out[li] = std::vector<int>(s.begin(), s.end());
    }
    return out;
}

ConeReduction reduce_to_light_cone(const CircuitProgram &circ, const std::vector<int> &support) {
    auto ops = circ.flat_ops();
    std::set<int> s(support.begin(), support.end());
    std::set<int> all(support.begin(), support.end());
    std::vector<int> kept;
    for (size_t k = ops.size(); k-- > 0;) {
        const auto &op = *ops[k];
        if (!intersects(op.sites, s)) {
            continue;
        }
        kept.push_back(static_cast<int>(k));
        all.insert(op.sites.begin(), op.sites.end());
        if (op.is_perfect_reset()) {
            s.erase(op.sites.front());
        } else {
            s.insert(op.sites.begin(), op.sites.end());
        }
    }
    std::reverse(kept.begin(), kept.end());

    ConeReduction red;
    red.sites = std::vector<int>(all.begin(), all.end());
    red.kept_ops = kept;
    std::vector<int> remap(static_cast<size_t>(circ.num_qubits), -1);
    for (size_t j = 0; j < red.sites.size(); j++) {
        remap[static_cast<size_t>(red.sites[j])] = static_cast<int>(j);
    }
    red.circuit.num_qubits = static_cast<int>(red.sites.size());
    red.circuit.lattice = Lattice(1, std::max(1, red.circuit.num_qubits));
    red.circuit.L = circ.L;
    red.circuit.M = circ.M;
    red.circuit.num_params = circ.num_params;
    Layer layer{LayerKind::kCustom, 0, {}};
    for (int k : kept) {
        Operation op = *ops[static_cast<size_t>(k)];
        for (int &site : op.sites) {
            site = remap[static_cast<size_t>(site)];
        }
        layer.ops.push_back(std::move(op));
    }
    red.circuit.layers.push_back(std::move(layer));
    return red;
}

PauliString restrict_pauli(const PauliString &p, const std::vector<int> &sites) {
    PauliString out(static_cast<int>(sites.size()));
    out.sign = p.sign;
    std::vector<bool> covered(static_cast<size_t>(p.num_qubits()), false);
    for (size_t j = 0; j < sites.size(); j++) {
        out.letters[j] = p.letters[static_cast<size_t>(sites[j])];
        covered[static_cast<size_t>(sites[j])] = true;
    }
    for (int k = 0; k < p.num_qubits(); k++) {
        if (!covered[static_cast<size_t>(k)] && p.letters[static_cast<size_t>(k)] != Pauli::I) {
            throw ConfigError("Pauli string has support outside the retained sites");
        }
    }
    return out;
}

}  // namespace dissim
