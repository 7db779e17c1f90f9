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

#include <cmath>

#include "dissim/channels.hpp"
#include "dissim/ensembles.hpp"
#include "dissim/error.hpp"
#include "dissim/simulate.hpp"
#include "dissim/steady_state.hpp"

namespace dissim {
namespace {

CircuitProgram custom(int n, std::vector<Operation> ops) {
    CircuitProgram c;
    c.num_qubits = n;
    c.lattice = Lattice(1, n);
    for (const auto &op : ops) c.num_params = std::max(c.num_params, op.param + 1);
    c.layers.push_back(Layer{LayerKind::kCustom, 0, std::move(ops)});
    return c;
}

TEST(SteadyState, SingleResetMap) {
    for (double q : {0.3, 1.0}) {
        auto map = assemble_jump_map(custom(1, {Operation::reset(q, 0)}), {});
        RealMatrix omega = RealMatrix::Zero(3, 3);
        omega.diagonal() << std::sqrt(1 - q), std::sqrt(1 - q), 1 - q;
        RealVector offset(3);
        offset << 0, 0, q;
        EXPECT_LT((map.omega - omega).norm(), 1e-12);
        EXPECT_LT((map.offset - offset).norm(), 1e-12);
    }
}

TEST(SteadyState, PerfectResetConvergesImmediately) {
    auto map = assemble_jump_map(custom(1, {Operation::fixed(hadamard_gate(), {0}, "h"), Operation::reset(1.0, 0)}),
                                 {});
    auto it = steady_state_fixed_point(map);
    EXPECT_TRUE(it.report.converged);
    EXPECT_LE(it.report.iterations, 2);
    auto cf = steady_state_closed_form(map);
    EXPECT_LT((cf.v - it.v).norm(), 1e-12);
    EXPECT_NEAR(cf.v(2), 1.0, 1e-12);
}

TEST(SteadyState, NeedsReset) {
    EXPECT_THROW(assemble_jump_map(custom(1, {Operation::fixed(hadamard_gate(), {0}, "h")}), {}), ConfigError);
}

TEST(SteadyState, UntouchedQubitIsSingular) {
    auto map = assemble_jump_map(custom(2, {Operation::reset(1.0, 0)}), {});
    EXPECT_THROW(steady_state_closed_form(map), NumericalError);
}

TEST(SteadyState, MapMatchesSimulation) {
    Rng rng(5);
    auto c = custom(2, {Operation::fixed(haar_unitary(4, rng), {0, 1}, "u"), Operation::reset(0.6, 1),
                        Operation::rotation(PauliString::single(1, 0, Pauli::X).dense(), {0}, 0, "rx")});
    std::vector<double> theta{0.4};
    auto map = assemble_jump_map(c, theta);
    auto rho = random_density(2, 2, rng);
    auto out = evaluate(c, theta, rho);
    RealVector predicted = map.apply(traceless_part(to_coherence(rho)));
    EXPECT_LT((predicted - traceless_part(to_coherence(out))).norm(), 1e-12);
    auto back = from_coherence(full_coherence(2, predicted));
    EXPECT_LT((back.rho() - out.rho()).norm(), 1e-12);
}

TEST(SteadyState, ClosedFormIsFixedPoint) {
    Rng rng(6);
    auto c = custom(2, {Operation::fixed(haar_unitary(4, rng), {0, 1}, "u"), Operation::reset(0.8, 0)});
    auto map = assemble_jump_map(c, {});
    auto ss = steady_state_closed_form(map);
    EXPECT_LT(fixed_point_residual(map, ss.v), 1e-12);
    auto it = steady_state_fixed_point(map, 1e-13);
    EXPECT_LT((it.v - ss.v).norm(), 1e-10);
}

TEST(SteadyState, BellPumpTargetIsFixed) {
    BellPumpOptions opt;
    opt.correction_angle = M_PI;
    opt.tau = 0;
    auto jump = bell_pump_jump(opt);
    std::vector<double> theta{M_PI};
    auto target = DensityState::pure(bell_pump_target());
    auto inf = layered_convergence(jump, theta, target, DensityState::zero(3), 3);
    ASSERT_EQ(inf.size(), 3u);
    EXPECT_NEAR(inf.back(), 0.0, 1e-12);
}

}  // namespace
}  // namespace dissim
