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

#include "dissim/train.hpp"

#include "dissim/error.hpp"

namespace dissim {

TrainResult train(const CostEvaluator &eval, std::vector<double> theta0, const TrainOptions &opt) {
    if (opt.iterations < 0 || !(opt.step > 0) || opt.divergence_window < 1) {
        throw ConfigError("training needs iterations >= 0, step > 0 and divergence_window >= 1");
    }
    if (static_cast<int>(theta0.size()) != eval.num_params()) {
        throw ConfigError("initial parameter vector has the wrong length");
    }
    TrainResult out;
    out.theta = std::move(theta0);
    double current = eval.cost(out.theta);
    out.curve.push_back(current);
    int rising = 0;
    for (int it = 0; it < opt.iterations; it++) {
        std::vector<double> g(out.theta.size());
        for (int mu = 0; mu < eval.num_params(); mu++) {
            g[static_cast<size_t>(mu)] = eval.gradient(out.theta, mu, opt.method, opt.fd_step);
        }
        for (size_t k = 0; k < g.size(); k++) {
            out.theta[k] -= opt.step * g[k];
        }
        double next = eval.cost(out.theta);
        rising = next > current ? rising + 1 : 0;
        current = next;
        out.curve.push_back(current);
        if (rising >= opt.divergence_window) {
            out.aborted = true;
            out.message = "cost increased for " + std::to_string(rising) + " consecutive steps";
            break;
        }
    }
    return out;
}

}  // namespace dissim
