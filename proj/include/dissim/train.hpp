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

#ifndef DISSIM_TRAIN_HPP
#define DISSIM_TRAIN_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dissim/gradients.hpp"

namespace dissim {

struct TrainOptions {
    double step = 0.05;
    int iterations = 300;
    GradientMethod method = GradientMethod::kFiniteDiff;
    double fd_step = 1e-4;
    /// Abort after this many consecutive cost increases.
    int divergence_window = 10;
};

struct TrainResult {
    std::vector<double> theta;
    /// Cost before every step and after the last one.
    std::vector<double> curve;
    bool aborted = false;
    std::string message;
};

/// Plain gradient descent on the evaluator's cost.
TrainResult train(const CostEvaluator &eval, std::vector<double> theta0, const TrainOptions &opt);

}  // namespace dissim

#endif
