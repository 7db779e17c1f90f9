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

#include "dissim/entropy.hpp"

#include <cmath>

#include "dissim/error.hpp"

namespace dissim {

void validate(const EntropyBoundParams &par) {
    if (par.n < 1 || par.n_c < 0 || par.n_c > par.n) {
        throw ConfigError("entropy bound needs n >= 1 and 0 <= n_c <= n");
    }
    if (!(par.p >= 0 && par.p <= 1)) {
        throw ConfigError("entropy bound needs 0 <= p <= 1");
    }
    if (par.L < 0 || par.S0 < 0) {
        throw ConfigError("entropy bound needs L >= 0 and S0 >= 0");
    }
}

double single_layer_bound(const EntropyBoundParams &par) {
    validate(par);
    return (1 - par.p) * par.S0 + par.p * (par.n - par.n_c);
}

double layered_bound(const EntropyBoundParams &par) {
    validate(par);
    return (1 - std::pow(1 - par.p, par.L)) * (par.n - par.n_c);
}

}  // namespace dissim
