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

#ifndef DISSIM_VARIANCE_HPP
#define DISSIM_VARIANCE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

struct VarianceEstimate {
    double mean = 0;
    /// Unbiased sample variance.
    double variance = 0;
    /// Standard error of the variance.
    double std_error = 0;
    /// Standard error of the mean.
    double mean_std_error = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string error_method = "jackknife";
    int threads = 1;
};

/// Value of one Monte-Carlo sample. Must be safe to call concurrently with distinct generators.
using SampleFn = std::function<double(Rng &rng, int index)>;

/// Sample i uses stream_rng(seed, i); samples run in parallel (OpenMP), the reduction is serial.
VarianceEstimate estimate_variance(const SampleFn &sample, int n_samples, std::uint64_t seed);
/// Serial reference for estimate_variance; results are bitwise identical.
VarianceEstimate estimate_variance_serial(const SampleFn &sample, int n_samples, std::uint64_t seed);

/// Samples of estimate_variance without the reduction.
std::vector<double> draw_samples(const SampleFn &sample, int n_samples, std::uint64_t seed);
/// Mean, unbiased variance and jackknife standard errors.
VarianceEstimate summarize(std::span<const double> values);

/// Recursive pairwise summation.
double pairwise_sum(std::span<const double> values);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 1;
};
/// Least squares y = slope*x + intercept; r2 = 1 for a constant series.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

enum class ScalingClass { kExponential, kPlateau, kUndetermined };
std::string scaling_class_name(ScalingClass c);

struct ScalingFit {
    LinearFit fit;
    ScalingClass cls = ScalingClass::kUndetermined;
};
/// Fit of ln(value) against n. Exponential: slope < -0.2 and R^2 > 0.9; plateau: |slope| < 0.05.
ScalingFit scaling_fit(const std::vector<std::pair<double, double>> &series);

}  // namespace dissim

#endif
