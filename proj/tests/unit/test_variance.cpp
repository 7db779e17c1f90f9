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
#include <omp.h>

#include "dissim/error.hpp"
#include "dissim/experiments.hpp"
#include "dissim/variance.hpp"

namespace dissim {
namespace {

double noisy_sample(Rng &rng, int) {
    std::normal_distribution<double> g(0.3, 2.0);
    double acc = 0;
    for (int k = 0; k < 50; k++) acc += g(rng);
    return acc / 50;
}

TEST(Variance, ParallelMatchesSerialBitwise) {
    omp_set_num_threads(4);
    auto par = estimate_variance(noisy_sample, 1001, 42);
    auto ser = estimate_variance_serial(noisy_sample, 1001, 42);
    EXPECT_EQ(par.mean, ser.mean);
    EXPECT_EQ(par.variance, ser.variance);
    EXPECT_EQ(par.std_error, ser.std_error);
    EXPECT_EQ(par.samples, 1001);
    EXPECT_EQ(par.seed, 42u);
    omp_set_num_threads(1);
    auto one = estimate_variance(noisy_sample, 1001, 42);
    EXPECT_EQ(one.variance, par.variance);
}

TEST(Variance, SamplesAreStreamed) {
    auto a = draw_samples(noisy_sample, 10, 7);
    auto b = draw_samples(noisy_sample, 20, 7);
    for (size_t k = 0; k < a.size(); k++) EXPECT_EQ(a[k], b[k]);
}

TEST(Variance, ExceptionsPropagate) {
    auto bad = [](Rng &, int i) -> double {
        if (i == 5) throw ConfigError("bad sample");
        return 0.0;
    };
    EXPECT_THROW(estimate_variance(bad, 10, 1), ConfigError);
}

TEST(Variance, Summary) {
    std::vector<double> v{1, 2, 3, 4};
    auto s = summarize(v);
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.variance, 5.0 / 3.0, 1e-15);
    EXPECT_NEAR(s.mean_std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
    EXPECT_GT(s.std_error, 0);
}

TEST(Variance, JackknifeMatchesGaussianTheory) {
    auto s = estimate_variance(
        [](Rng &rng, int) {
            std::normal_distribution<double> g(0, 1);
            return g(rng);
        },
        20000, 3);
    EXPECT_NEAR(s.variance, 1.0, 5 * s.std_error);
    EXPECT_NEAR(s.std_error, std::sqrt(2.0 / 20000), 0.2 * std::sqrt(2.0 / 20000));
}

TEST(Variance, PairwiseSum) {
    std::vector<double> v(1000, 0.1);
    EXPECT_NEAR(pairwise_sum(v), 100.0, 1e-12);
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(Fits, LinearFit) {
    std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
    auto f = linear_fit(x, y);
    EXPECT_NEAR(f.slope, 2, 1e-14);
    EXPECT_NEAR(f.intercept, 1, 1e-14);
    EXPECT_NEAR(f.r2, 1, 1e-14);
}

TEST(Fits, ScalingClasses) {
    std::vector<std::pair<double, double>> expo, flat;
    for (int n : {4, 6, 8, 10}) {
        expo.emplace_back(n, std::pow(2.0, -n));
        flat.emplace_back(n, 0.01);
    }
    auto e = scaling_fit(expo);
    EXPECT_NEAR(e.fit.slope, -std::log(2.0), 1e-12);
    EXPECT_EQ(e.cls, ScalingClass::kExponential);
    auto f = scaling_fit(flat);
    EXPECT_NEAR(f.fit.slope, 0, 1e-14);
    EXPECT_EQ(f.cls, ScalingClass::kPlateau);
    EXPECT_THROW(scaling_fit({{4, 1.0}, {6, 0.0}, {8, 1.0}}), NumericalError);
    EXPECT_THROW(scaling_fit({{4, 1.0}, {6, 1.0}}), ConfigError);
}

TEST(Experiments, BrickworkSampleIsReproducible) {
    BrickworkVarianceConfig cfg;
    cfg.layers = 6;
    cfg.reset_every = 3;
    Rng a = stream_rng(9, 4);
    Rng b = stream_rng(9, 4);
    EXPECT_EQ(brickwork_sample(cfg, 6, a), brickwork_sample(cfg, 6, b));
}

TEST(Experiments, BrickworkMethodsAgree) {
    BrickworkVarianceConfig cfg;
    cfg.layers = 6;
    cfg.reset_every = 3;
    for (auto m : {GradientMethod::kCommutator, GradientMethod::kFiniteDiff}) {
        auto other = cfg;
        other.method = m;
        Rng a = stream_rng(9, 5);
        Rng b = stream_rng(9, 5);
        EXPECT_NEAR(brickwork_sample(cfg, 4, a), brickwork_sample(other, 4, b), 1e-7);
    }
}

}  // namespace
}  // namespace dissim
