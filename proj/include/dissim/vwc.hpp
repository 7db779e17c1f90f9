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

#ifndef DISSIM_VWC_HPP
#define DISSIM_VWC_HPP

#include <Eigen/SparseCore>
#include <cstdint>
#include <string>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

/// Classical history chain of a dissipative computation with T gates under bit-flip noise.
///
/// State (register b in {0,1}^T, clock t in 0..T) has index t * 2^T + b, with register bit i
/// stored as bit i of b. Clock moves t-1 <-> t apply U_t (U_1 = X on bit 0, U_t = CNOT bit t-2 -> t-1);
/// at clock 0 every set bit decays to 0; every bit flips at rate kappa. All other rates are 1.
struct HistoryChain {
    int T = 1;
    double kappa = 0;
    /// Column convention: Q(j, i) is the rate i -> j, columns sum to zero.
    Eigen::SparseMatrix<double> Q;

    std::int64_t num_states() const { return static_cast<std::int64_t>(T + 1) << T; }
    std::int64_t index(std::uint64_t bits, int clock) const {
        return (static_cast<std::int64_t>(clock) << T) + static_cast<std::int64_t>(bits);
    }
};

inline constexpr int kMaxVwcGates = 16;
inline constexpr int kDenseVwcGates = 6;
/// Largest T solved by sparse LU when kappa > 0; larger noisy chains use preconditioned BiCGSTAB.
inline constexpr int kDirectVwcGates = 9;

HistoryChain build_chain(int T, double kappa);
/// States reachable from (0^T, 0).
std::vector<std::int64_t> reachable_states(const HistoryChain &chain);

struct StationaryResult {
    RealVector pi;
    /// ||Q pi||_inf.
    double residual = 0;
    std::string method;
};

/// Solves Q pi = 0, sum pi = 1 with pi_0 pinned (sparse LU, or BiCGSTAB for large noisy chains).
StationaryResult stationary_distribution(const HistoryChain &chain);
/// Dense LU reference (T <= kDenseVwcGates).
StationaryResult stationary_distribution_dense(const HistoryChain &chain);

/// Stationary probability that the register is 1^T (or, conditioned, that it is 1^T given clock T).
double output_overlap(const HistoryChain &chain, const RealVector &pi, bool clock_conditioned = false);

}  // namespace dissim

#endif
