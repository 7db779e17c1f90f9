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

#ifndef DISSIM_ENTROPY_HPP
#define DISSIM_ENTROPY_HPP

namespace dissim {

/// Entropies in bits.
struct EntropyBoundParams {
    int n = 1;
    /// Qubits protected from noise.
    int n_c = 0;
    /// Depolarizing rate, or the logical rate p_l for corrected qubits.
    double p = 0;
    int L = 1;
    double S0 = 0;
};

void validate(const EntropyBoundParams &par);
/// (1 - p) S0 + p (n - n_c).
double single_layer_bound(const EntropyBoundParams &par);
/// (1 - (1 - p)^L) (n - n_c), for a pure start.
double layered_bound(const EntropyBoundParams &par);

}  // namespace dissim

#endif
