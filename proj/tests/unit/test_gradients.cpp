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

#include <numbers>

#include "dissim/error.hpp"
#include "dissim/gradients.hpp"
#include "dissim/train.hpp"

namespace dissim {
namespace {

struct Instance {
    CircuitProgram circuit;
    Observable observable;
    std::vector<double> theta;
};

Instance random_instance(int n, std::uint64_t seed, TwoQubitGates gates) {
    Rng rng(seed);
    AnsatzSpec a;
    a.gates = gates;
    a.noise = std::make_shared<KrausChannel>(depolarizing(0.1));
    Instance in;
    in.circuit = build_dissipative_circuit(place_reset_sites(n, n / 2, 1), 2, 2, 0.7, a, rng);
    in.observable = Observable(1.0, PauliString::single(n, 1, Pauli::Z));
    in.observable.add(0.5, PauliString::single(n, n - 1, Pauli::X));
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    for (int k = 0; k < in.circuit.num_params; k++) in.theta.push_back(u(rng));
    return in;
}

TEST(Gradients, MethodsAgree) {
    for (auto gates : {TwoQubitGates::kHardwareEfficient, TwoQubitGates::kQaoa}) {
        auto in = random_instance(4, 11, gates);
        for (bool lc : {false, true}) {
            CostSpec spec{in.circuit, in.observable, InitialState::zero()};
            spec.light_cone = lc;
            CostEvaluator eval(spec);
            for (int mu = 0; mu < in.circuit.num_params; mu++) {
                double c = eval.gradient(in.theta, mu, GradientMethod::kCommutator);
                double s = eval.gradient(in.theta, mu, GradientMethod::kParameterShift);
                double f = eval.gradient(in.theta, mu, GradientMethod::kFiniteDiff, 1e-5);
                EXPECT_NEAR(c, s, 1e-10);
                EXPECT_NEAR(c, f, 1e-7);
            }
        }
    }
}

TEST(Gradients, BackendsAgree) {
    auto in = random_instance(6, 12, TwoQubitGates::kHardwareEfficient);
    CostSpec dense{in.circuit, in.observable, InitialState::zero()};
    dense.backend = Backend::kDense;
    CostSpec fact = dense;
    fact.backend = Backend::kFactored;
    EXPECT_NEAR(cost(dense, in.theta), cost(fact, in.theta), 1e-12);
    const int mu = in.circuit.designated_param(1);
    EXPECT_NEAR(gradient(dense, in.theta, mu, GradientMethod::kParameterShift),
                gradient(fact, in.theta, mu, GradientMethod::kParameterShift), 1e-12);
}

TEST(Gradients, IdentityTermIsConstant) {
    auto in = random_instance(4, 13, TwoQubitGates::kHardwareEfficient);
    Observable o = in.observable;
    o.add(2.5, PauliString(4));
    CostSpec a{in.circuit, in.observable, InitialState::zero()};
    CostSpec b{in.circuit, o, InitialState::zero()};
    b.light_cone = true;
    EXPECT_NEAR(cost(b, in.theta) - cost(a, in.theta), 2.5, 1e-12);
    CostEvaluator eb(b);
    auto values = eb.term_values(in.theta);
    ASSERT_EQ(values.size(), 3u);
    EXPECT_DOUBLE_EQ(values[2], 1.0);
}

TEST(Gradients, OutsideConeIsExactlyZero) {
    Rng rng(14);
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHardwareEfficient;
    auto c = build_dissipative_circuit(Lattice(1, 8), 1, 1, 0.0, a, rng);
    std::vector<double> theta(static_cast<size_t>(c.num_params), 0.9);
    CostSpec spec{c, Observable(1.0, PauliString::single(8, 0, Pauli::Z)), InitialState::zero()};
    CostEvaluator eval(spec);
    auto ops = c.flat_ops();
    int checked = 0;
    for (const auto *op : ops) {
        if (op->param < 0 || op->sites.front() < 2) continue;
        for (auto m : {GradientMethod::kCommutator, GradientMethod::kParameterShift}) {
            EXPECT_EQ(eval.gradient(theta, op->param, m), 0.0);
            checked++;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Gradients, ShiftRequiresTwoEigenvalues) {
    Matrix h = Matrix::Zero(4, 4);
    h(0, 0) = 1;
    h(1, 1) = 0.5;
    h(2, 2) = -0.2;
    CircuitProgram c;
    c.num_qubits = 2;
    c.lattice = Lattice(1, 2);
    c.num_params = 1;
    c.layers.push_back(Layer{LayerKind::kCustom, 0,
                             {Operation::fixed(kron(hadamard_gate(), hadamard_gate()), {0, 1}, "hh"),
                              Operation::rotation(h, {0, 1}, 0, "h")}});
    CostSpec spec{c, Observable(1.0, PauliString::from_text("XI")), InitialState::zero()};
    std::vector<double> theta{0.3};
    EXPECT_THROW(gradient(spec, theta, 0, GradientMethod::kParameterShift), ConfigError);
    double f = CostEvaluator(spec).gradient(theta, 0, GradientMethod::kFiniteDiff, 1e-5);
    EXPECT_NEAR(gradient_commutator(spec, theta, 0), f, 1e-8);
}

TEST(Gradients, ParseMethod) {
    EXPECT_EQ(parse_gradient_method("commutator"), GradientMethod::kCommutator);
    EXPECT_EQ(parse_gradient_method("parameter_shift"), GradientMethod::kParameterShift);
    EXPECT_EQ(parse_gradient_method("finite_diff"), GradientMethod::kFiniteDiff);
    EXPECT_THROW(parse_gradient_method("adjoint"), ConfigError);
}

TEST(Train, ZeroIterationsKeepsTheta) {
    auto in = random_instance(4, 15, TwoQubitGates::kHardwareEfficient);
    CostEvaluator eval(CostSpec{in.circuit, in.observable, InitialState::zero()});
    TrainOptions opt;
    opt.iterations = 0;
    auto r = train(eval, in.theta, opt);
    EXPECT_EQ(r.theta, in.theta);
    ASSERT_EQ(r.curve.size(), 1u);
    EXPECT_NEAR(r.curve[0], eval.cost(in.theta), 1e-15);
}

TEST(Train, DescendsSingleRotation) {
    CircuitProgram c;
    c.num_qubits = 1;
    c.lattice = Lattice(1, 1);
    c.num_params = 1;
    c.layers.push_back(Layer{LayerKind::kCustom, 0,
                             {Operation::rotation(PauliString::from_text("X").dense() / 2, {0}, 0, "rx")}});
    CostEvaluator eval(CostSpec{c, Observable(1.0, PauliString::from_text("Z")), InitialState::zero()});
    TrainOptions opt;
    opt.step = 0.5;
    opt.iterations = 200;
    opt.method = GradientMethod::kCommutator;
    auto r = train(eval, {0.3}, opt);
    EXPECT_FALSE(r.aborted);
    EXPECT_NEAR(r.curve.back(), -1.0, 1e-6);
    for (size_t k = 1; k < r.curve.size(); k++) EXPECT_LE(r.curve[k], r.curve[k - 1] + 1e-15);
}

}  // namespace
}  // namespace dissim
