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

#include "dissim/error.hpp"
#include "dissim/vwc.hpp"

namespace dissim {
namespace {

TEST(Vwc, NoiselessHistoryIsAPath) {
    for (int T = 1; T <= 5; T++) {
        auto chain = build_chain(T, 0);
        EXPECT_EQ(reachable_states(chain).size(), static_cast<size_t>(T + 1));
    }
}

TEST(Vwc, GeneratorColumnsSumToZero) {
    auto chain = build_chain(4, 0.2);
    Eigen::RowVectorXd ones = Eigen::RowVectorXd::Ones(chain.Q.rows());
    RealVector sums = (ones * chain.Q).transpose();
    EXPECT_LT(sums.cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Vwc, NoiselessOverlap) {
    for (int T = 1; T <= 8; T++) {
        auto chain = build_chain(T, 0);
        auto st = stationary_distribution(chain);
        EXPECT_NEAR(output_overlap(chain, st.pi), 1.0 / (T + 1), 1e-12);
        EXPECT_NEAR(output_overlap(chain, st.pi, true), 1.0, 1e-12);
        EXPECT_NEAR(st.pi.sum(), 1.0, 1e-12);
    }
}

TEST(Vwc, StrongNoiseRandomizesRegister) {
    auto chain = build_chain(3, 1e4);
    auto st = stationary_distribution(chain);
    EXPECT_NEAR(output_overlap(chain, st.pi), 1.0 / 8, 1e-3);
}

TEST(Vwc, OverlapDecreasesWithNoise) {
    double prev = 1;
    for (double kappa : {0.0, 0.05, 0.1, 0.2, 0.4}) {
        auto chain = build_chain(4, kappa);
        double o = output_overlap(chain, stationary_distribution(chain).pi);
        EXPECT_LT(o, prev);
        prev = o;
    }
}

TEST(Vwc, DenseAndSparseAgree) {
    auto chain = build_chain(4, 0.1);
    auto a = stationary_distribution(chain);
    auto b = stationary_distribution_dense(chain);
    EXPECT_LT((a.pi - b.pi).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(a.residual, 1e-12);
}

TEST(Vwc, IterativeSolverForLargeNoisyChains) {
    auto chain = build_chain(kDirectVwcGates + 1, 0.1);
    auto st = stationary_distribution(chain);
    EXPECT_EQ(st.method, "bicgstab");
    EXPECT_LT(st.residual, 1e-10);
    EXPECT_NEAR(st.pi.sum(), 1.0, 1e-10);
    EXPECT_GE(st.pi.minCoeff(), -1e-12);
}

TEST(Vwc, Validation) {
    EXPECT_THROW(build_chain(0, 0), ConfigError);
    EXPECT_THROW(build_chain(kMaxVwcGates + 1, 0), ConfigError);
    EXPECT_THROW(build_chain(3, -1), ConfigError);
    EXPECT_THROW(stationary_distribution_dense(build_chain(kDenseVwcGates + 1, 0)), BudgetError);
}

}  // namespace
}  // namespace dissim
