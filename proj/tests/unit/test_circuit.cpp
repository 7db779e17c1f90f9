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

#include <gtest/gtest.h>

#include <set>

#include <numbers>

#include "dissim/circuit.hpp"
#include "dissim/error.hpp"
#include "dissim/gradients.hpp"
#include "dissim/simulate.hpp"

namespace dissim {
namespace {

CircuitProgram custom(int n, std::vector<Operation> ops) {
    CircuitProgram c;
    c.num_qubits = n;
    c.lattice = Lattice(1, n);
    for (const auto &op : ops) {
        c.num_params = std::max(c.num_params, op.param + 1);
    }
    c.layers.push_back(Layer{LayerKind::kCustom, 0, std::move(ops)});
    return c;
}

TEST(Circuit, Schedule) {
    EXPECT_EQ(chi(5, 5), 1);
    EXPECT_EQ(chi(4, 5), 0);
    EXPECT_EQ(chi(3, 1), 1);
    EXPECT_THROW(chi(0, 5), ConfigError);
}

TEST(Circuit, LayerCounts) {
    Rng rng(1);
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHardwareEfficient;
    a.noise = std::make_shared<KrausChannel>(depolarizing(0.1));
    a.single_qubit = EnsembleKind::kClifford1;
    auto c = build_dissipative_circuit(place_reset_sites(6, 3, 1), 2, 3, 1.0, a, rng);
    EXPECT_EQ(c.count_layers(LayerKind::kReset), 3);
    EXPECT_EQ(c.count_layers(LayerKind::kBrickwork), 6);
    EXPECT_EQ(c.count_layers(LayerKind::kNoise), 6);
    EXPECT_EQ(c.count_layers(LayerKind::kSingleQubit), 6);
    EXPECT_GE(c.designated_param(1), 0);
}

TEST(Circuit, CorrelatedParametersRepeat) {
    Rng r1(2), r2(2);
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHardwareEfficient;
    auto plain = build_dissipative_circuit(Lattice(1, 4), 10, 1, 0.0, a, r1);
    a.correlated = true;
    a.correlation_period = 5;
    auto corr = build_dissipative_circuit(Lattice(1, 4), 10, 1, 0.0, a, r2);
    EXPECT_EQ(plain.num_params, 60);
    std::vector<int> first, second;
    for (const auto &layer : corr.layers) {
        if (layer.kind != LayerKind::kBrickwork) continue;
        for (const auto &op : layer.ops) (layer.index <= 5 ? first : second).push_back(op.param);
    }
    EXPECT_EQ(first, second);
    std::set<int> distinct(first.begin(), first.end());
    distinct.erase(-1);
    EXPECT_EQ(static_cast<int>(distinct.size()), corr.num_params);
}

TEST(Circuit, GateLibrary) {
    EXPECT_LT((rx(0.7) - expm_hermitian(PauliString::from_text("X").dense(), 0.35)).norm(), 1e-13);
    Matrix h = hadamard_gate();
    EXPECT_LT((h * h - Matrix::Identity(2, 2)).norm(), 1e-14);
    Matrix s = s_gate();
    EXPECT_LT((s * s - PauliString::from_text("Z").dense()).norm(), 1e-14);
    Matrix b = hardware_efficient_brick(0.1, 0.2, 0.3, 0.4);
    EXPECT_LT((b * b.adjoint() - Matrix::Identity(4, 4)).norm(), 1e-13);
}

TEST(Circuit, RotationMatrix) {
    auto op = Operation::rotation(PauliString::from_text("ZZ").dense(), {0, 1}, 0, "zz");
    EXPECT_LT((op.matrix(0.4) - expm_hermitian(PauliString::from_text("ZZ").dense(), 0.4)).norm(), 1e-13);
}

TEST(LightCone, OneBrickLayer) {
    auto c = custom(4, {Operation::fixed(cnot_gate(), {0, 1}, "cnot"), Operation::fixed(cnot_gate(), {2, 3}, "cnot")});
    auto cone = light_cone(c, {0});
    for (const auto &s : cone) {
        for (int q : s) EXPECT_LE(q, 1);
    }
    auto red = reduce_to_light_cone(c, {0});
    EXPECT_EQ(red.sites, (std::vector<int>{0, 1}));
    EXPECT_EQ(red.kept_ops, (std::vector<int>{0}));
}

TEST(LightCone, PerfectResetCutsCone) {
    auto c = custom(3, {Operation::fixed(cnot_gate(), {1, 2}, "cnot"), Operation::reset(1.0, 1),
                        Operation::fixed(cnot_gate(), {0, 1}, "cnot")});
    auto red = reduce_to_light_cone(c, {0});
    EXPECT_EQ(red.sites, (std::vector<int>{0, 1}));
    EXPECT_EQ(red.kept_ops, (std::vector<int>{1, 2}));
    auto partial = custom(3, {Operation::fixed(cnot_gate(), {1, 2}, "cnot"), Operation::reset(0.5, 1),
                              Operation::fixed(cnot_gate(), {0, 1}, "cnot")});
    EXPECT_EQ(reduce_to_light_cone(partial, {0}).sites, (std::vector<int>{0, 1, 2}));
}

TEST(LightCone, ReducedCostEqualsFullCost) {
    Rng rng(3);
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHardwareEfficient;
    a.noise = std::make_shared<KrausChannel>(depolarizing(0.05));
    auto c = build_dissipative_circuit(place_reset_sites(8, 4, 1), 2, 2, 1.0, a, rng);
    std::vector<double> theta(static_cast<size_t>(c.num_params));
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    for (auto &t : theta) t = u(rng);
    Observable obs(0.7, PauliString::single(8, 1, Pauli::Z));
    obs.add(-0.4, PauliString::from_text("IIIIIXXI"));
    CostSpec full{c, obs, InitialState::zero()};
    CostSpec cone = full;
    cone.light_cone = true;
    CostEvaluator ec(cone);
    EXPECT_NEAR(cost(full, theta), ec.cost(theta), 1e-12);
    for (int s : ec.part_sizes()) EXPECT_LT(s, 8);
}

TEST(Simulate, FactoredMatchesDense) {
    Rng rng(4);
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHaar;
    auto c = build_dissipative_circuit(place_reset_sites(6, 3, 1), 2, 3, 1.0, a, rng);
    EXPECT_TRUE(prefers_factored(c));
    std::vector<double> theta(static_cast<size_t>(c.num_params), 0.3);
    auto d = evaluate(c, theta, DensityState::zero(6));
    auto f = evaluate_factored(c, theta, FactoredState::zero(6));
    EXPECT_LT((d.rho() - f.to_density().rho()).norm(), 1e-12);
}

TEST(Simulate, InitialStateMarginals) {
    auto plus = InitialState::plus();
    auto m = plus.marginal(4, {1, 3}).density(2);
    EXPECT_NEAR(m.expectation(PauliString::from_text("XX")), 1.0, 1e-14);
    auto mixed = InitialState::mixed().density(2);
    EXPECT_NEAR(mixed.expectation(PauliString::from_text("ZI")), 0.0, 1e-14);
}

}  // namespace
}  // namespace dissim
