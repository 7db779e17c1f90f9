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

#include "dissim/variance.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include "dissim/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dissim {

namespace {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> draw_samples(const SampleFn &sample, int n_samples, std::uint64_t seed) {
    if (n_samples < 2) {
        throw ConfigError("at least 2 samples are required");
    }
    std::vector<double> values(static_cast<size_t>(n_samples));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n_samples; i++) {
        try {
            Rng rng = stream_rng(seed, static_cast<std::uint64_t>(i));
            values[static_cast<size_t>(i)] = sample(rng, i);
        } catch (...) {
#pragma omp critical(dissim_sample_error)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return values;
}

VarianceEstimate estimate_variance(const SampleFn &sample, int n_samples, std::uint64_t seed) {
    auto values = draw_samples(sample, n_samples, seed);
    auto est = summarize(values);
    est.seed = seed;
    est.threads = thread_count();
    return est;
}

VarianceEstimate estimate_variance_serial(const SampleFn &sample, int n_samples, std::uint64_t seed) {
    if (n_samples < 2) {
        throw ConfigError("at least 2 samples are required");
    }
    std::vector<double> values(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; i++) {
        Rng rng = stream_rng(seed, static_cast<std::uint64_t>(i));
        values[static_cast<size_t>(i)] = sample(rng, i);
    }
    auto est = summarize(values);
    est.seed = seed;
    return est;
}

VarianceEstimate summarize(std::span<const double> values) {
    const size_t n = values.size();
    if (n < 2) {
        throw ConfigError("at least 2 samples are required");
    }
    const double nd = static_cast<double>(n);
    VarianceEstimate est;
    est.samples = static_cast<int>(n);
    est.mean = pairwise_sum(values) / nd;
    std::vector<double> dev(n), dev2(n);
    for (size_t i = 0; i < n; i++) {
        dev[i] = values[i] - est.mean;
        dev2[i] = dev[i] * dev[i];
    }
    const double s1 = pairwise_sum(dev);
    const double s2 = pairwise_sum(dev2);
    est.variance = std::max(0.0, (s2 - s1 * s1 / nd) / (nd - 1));
    est.mean_std_error = std::sqrt(est.variance / nd);
    if (n < 3) {
        est.std_error = std::numeric_limits<double>::infinity();
        return est;
    }
    // Leave-one-out variances.
    std::vector<double> loo(n);
    for (size_t i = 0; i < n; i++) {
        double a = s1 - dev[i];
        double b = s2 - dev2[i];
        loo[i] = (b - a * a / (nd - 1)) / (nd - 2);
    }
    const double loo_mean = pairwise_sum(loo) / nd;
    std::vector<double> sq(n);
    for (size_t i = 0; i < n; i++) {
        sq[i] = (loo[i] - loo_mean) * (loo[i] - loo_mean);
    }
    est.std_error = std::sqrt((nd - 1) / nd * pairwise_sum(sq));
    return est;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ConfigError("linear fit needs at least two points of equal-length series");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) {
        throw ConfigError("linear fit needs distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

std::string scaling_class_name(ScalingClass c) {
    switch (c) {
        case ScalingClass::kExponential:
            return "exponential";
        case ScalingClass::kPlateau:
            return "plateau";
        case ScalingClass::kUndetermined:
            return "undetermined";
    }
    return "undetermined";
}

ScalingFit scaling_fit(const std::vector<std::pair<double, double>> &series) {
    if (series.size() < 3) {
        throw ConfigError("scaling fit needs at least 3 sizes");
    }
    std::vector<double> x, y;
    for (const auto &[n, v] : series) {
        if (!(v > 0)) {
            throw NumericalError("scaling fit needs positive values");
        }
        x.push_back(n);
        y.push_back(std::log(v));
    }
    ScalingFit out;
    out.fit = linear_fit(x, y);
    if (out.fit.slope < -0.2 && out.fit.r2 > 0.9) {
        out.cls = ScalingClass::kExponential;
    } else if (std::abs(out.fit.slope) < 0.05) {
        out.cls = ScalingClass::kPlateau;
    }
    return out;
}

}  // namespace dissim
