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

#include "dissim/bounds.hpp"
#include "dissim/entropy.hpp"
#include "dissim/error.hpp"

namespace dissim {
namespace {

TEST(Bounds, WorkedExample) {
    BoundParams p;
    p.d = 1;
    p.K = 1;
    p.L = 2;
    p.n = 6;
    p.n_r = 3;
    auto t = variance_lower_bound(p);
    EXPECT_DOUBLE_EQ(t.delta, 1.5);
    EXPECT_DOUBLE_EQ(t.Delta, 2.5);
    EXPECT_DOUBLE_EQ(t.Lambda, 3.75);
    EXPECT_DOUBLE_EQ(t.Gamma, 0.5);
    EXPECT_NEAR(t.bound, std::pow(kDefaultCliffordConstant, -3.75), 1e-30);
    EXPECT_NEAR(t.log_bound, std::log(t.bound), 1e-12);
}

TEST(Bounds, EveryQubitResetIsSizeIndependent) {
    double first = 0;
    for (int n : {4, 9, 16}) {
        BoundParams p;
        p.n = n;
        p.n_r = n;
        p.D_max = 0.9;
        p.q = 0.8;
        auto t = variance_lower_bound(p);
        EXPECT_DOUBLE_EQ(t.delta, 1);
        EXPECT_DOUBLE_EQ(t.Delta, 1);
        EXPECT_DOUBLE_EQ(t.Lambda, 1);
        EXPECT_DOUBLE_EQ(t.Gamma, 1);
        if (n == 4) first = t.bound;
        EXPECT_DOUBLE_EQ(t.bound, first);
    }
}

TEST(Bounds, VanishingFactors) {
    BoundParams p;
    p.q = 0;
    EXPECT_EQ(variance_lower_bound(p).bound, 0.0);
    EXPECT_EQ(gradient_variance_lower_bound(p), 0.0);
    EXPECT_TRUE(std::isinf(log_gradient_variance_lower_bound(p)));
    p.q = 1;
    p.i = 2;
    EXPECT_EQ(gradient_variance_lower_bound(p), 0.0);
    p.i = 1;
    EXPECT_GT(gradient_variance_lower_bound(p), 0.0);
}

TEST(Bounds, GradientBoundFinalLayer) {
    BoundParams p;
    p.q = 0.5;
    p.h_norm = 1;
    auto t = variance_lower_bound(p);
    double expect = t.bound / 64;
    EXPECT_NEAR(gradient_variance_lower_bound(p) / expect, 1.0, 1e-12);
}

TEST(Bounds, MonotoneInContraction) {
    BoundParams a, b;
    a.D_max = 0.9;
    b.D_max = 0.8;
    a.q = b.q = 0.7;
    EXPECT_GT(variance_lower_bound(a).bound, variance_lower_bound(b).bound);
}

TEST(Bounds, Validation) {
    BoundParams p;
    p.n_r = 0;
    EXPECT_THROW(validate(p), ConfigError);
    p = BoundParams{};
    p.q = 1.5;
    EXPECT_THROW(validate(p), ConfigError);
    p = BoundParams{};
    p.D_max = 1.5;
    EXPECT_THROW(validate(p), ConfigError);
}

TEST(Entropy, SingleLayer) {
    EntropyBoundParams p{4, 1, 0.25, 1, 2.0};
    EXPECT_DOUBLE_EQ(single_layer_bound(p), 0.75 * 2 + 0.25 * 3);
}

TEST(Entropy, Layered) {
    EntropyBoundParams p{5, 0, 0.1, 3, 0};
    EXPECT_NEAR(layered_bound(p), (1 - std::pow(0.9, 3)) * 5, 1e-14);
    p.L = 0;
    EXPECT_EQ(layered_bound(p), 0.0);
}

TEST(Entropy, Validation) {
    EXPECT_THROW(validate(EntropyBoundParams{2, 3, 0.1, 1, 0}), ConfigError);
    EXPECT_THROW(validate(EntropyBoundParams{2, 0, 1.1, 1, 0}), ConfigError);
    EXPECT_THROW(validate(EntropyBoundParams{2, 0, 0.1, 1, -1}), ConfigError);
}

}  // namespace
}  // namespace dissim
