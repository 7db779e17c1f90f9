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

#ifndef DISSIM_BOUNDS_HPP
#define DISSIM_BOUNDS_HPP

namespace dissim {

/// |CL(1)| * |CL(2)|.
inline constexpr double kDefaultCliffordConstant = 24.0 * 11520.0;

struct BoundParams {
    int d = 1;
    /// Linear extent of the observable's terms, in sites per axis.
    int K = 1;
    /// Layers between resets.
    int L = 1;
    int n = 1;
    int n_r = 1;
    double q = 1;
    double D_max = 1;
    double C = kDefaultCliffordConstant;
    /// Layers between the differentiated gate and the measurement (1 = final layer).
    int i = 1;
    double h_norm = 1;
    /// Sum of squared non-identity observable coefficients.
    double sum_a2 = 1;
};

struct BoundTerms {
    double bound = 0;
    double log_bound = 0;
    double Delta = 0;
    double Lambda = 0;
    double Gamma = 0;
    double delta = 0;
};

void validate(const BoundParams &p);
BoundTerms variance_lower_bound(const BoundParams &p);
double gradient_variance_lower_bound(const BoundParams &p);
/// Natural log of gradient_variance_lower_bound; -inf when the bound vanishes.
double log_gradient_variance_lower_bound(const BoundParams &p);

}  // namespace dissim

#endif
