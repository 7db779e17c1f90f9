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

#include "dissim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dissim/error.hpp"

namespace dissim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// exponent * log(base) with 0^0 = 1.
double log_power(double base, double exponent) {
    if (exponent == 0) {
        return 0;
    }
    if (base == 0) {
        return kNegInf;
    }
    return exponent * std::log(base);
}

}  // namespace

void validate(const BoundParams &p) {
    if (p.d < 1 || p.K < 1 || p.L < 1 || p.n < 1 || p.n_r < 1 || p.n_r > p.n || p.i < 1) {
        throw ConfigError("bound parameters d, K, L, n, n_r, i must be positive with n_r <= n");
    }
    if (p.q < 0 || p.q > 1 || p.D_max < 0 || p.D_max > 1) {
        throw ConfigError("bound parameters q and D_max must lie in [0, 1]");
    }
    if (p.C <= 0 || p.h_norm < 0 || p.sum_a2 < 0) {
        throw ConfigError("bound parameters C, h_norm, sum_a2 must be positive");
    }
}

BoundTerms variance_lower_bound(const BoundParams &p) {
    validate(p);
    const double d = p.d;
    const double K = p.K;
    const double L = p.L;
    const double Kd = std::pow(K, d);
    BoundTerms t;
    t.delta = 0.5 * std::pow(static_cast<double>(p.n) / p.n_r, 1.0 / d) + K / 2.0;
    t.Delta = std::max(d * (t.delta - 1) + L, d * (K - 1) + L);
    t.Lambda = std::max(std::pow(t.delta, d) * (d * (t.delta - 1) + L), Kd * (d * (K - 1) + L));
    t.Gamma = static_cast<double>(p.n_r) / p.n * Kd * (d * (K - 1) + L) / L;
    t.log_bound = (p.sum_a2 > 0 ? std::log(p.sum_a2) : kNegInf) - t.Lambda * std::log(p.C) +
                  log_power(p.D_max, 2 * Kd * t.Delta) + log_power(p.q, 2 * t.Gamma + 2);
    t.bound = std::exp(t.log_bound);
    return t;
}

double log_gradient_variance_lower_bound(const BoundParams &p) {
    auto t = variance_lower_bound(p);
    const double Kd = std::pow(static_cast<double>(p.K), p.d);
    const double im1 = p.i - 1;
    const double gamma = im1 / p.L * Kd * p.n_r / p.n;
    double h2 = p.h_norm * p.h_norm / 64.0;
    return (p.sum_a2 > 0 ? std::log(p.sum_a2) : kNegInf) + log_power(p.D_max, 2 * Kd * im1 + 2 * t.Delta) -
           (Kd * im1 + t.Lambda) * std::log(p.C) + (h2 > 0 ? std::log(h2) : kNegInf) +
           log_power(p.q, 2 * t.Gamma + 2) + log_power(1 - p.q, 2 * gamma);
}

double gradient_variance_lower_bound(const BoundParams &p) { return std::exp(log_gradient_variance_lower_bound(p)); }

}  // namespace dissim
