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

#include "dissim/vwc.hpp"

#include <Eigen/LU>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <cmath>
#include <deque>

#include "dissim/error.hpp"

namespace dissim {

namespace {

std::uint64_t apply_gate(std::uint64_t bits, int t) {
    if (t == 1) {
        return bits ^ 1u;
    }
    std::uint64_t control = (bits >> (t - 2)) & 1u;
    return bits ^ (control << (t - 1));
}

// Outgoing transitions (target, rate) of one state.
template <typename Visit>
void for_each_transition(int T, double kappa, std::uint64_t bits, int clock, Visit visit) {
    const auto idx = [T](std::uint64_t b, int c) { return (static_cast<std::int64_t>(c) << T) + static_cast<std::int64_t>(b); };
    if (clock < T) {
        visit(idx(apply_gate(bits, clock + 1), clock + 1), 1.0);
    }
    if (clock > 0) {
        visit(idx(apply_gate(bits, clock), clock - 1), 1.0);
    }
    for (int i = 0; i < T; i++) {
        if (clock == 0 && ((bits >> i) & 1u)) {
            visit(idx(bits & ~(std::uint64_t{1} << i), clock), 1.0);
        }
        if (kappa > 0) {
            visit(idx(bits ^ (std::uint64_t{1} << i), clock), kappa);
        }
    }
}

}  // namespace

HistoryChain build_chain(int T, double kappa) {
    if (T < 1 || T > kMaxVwcGates) {
        throw ConfigError("gate count T must lie in 1.." + std::to_string(kMaxVwcGates));
    }
    if (!(kappa >= 0) || !std::isfinite(kappa)) {
        throw ConfigError("noise rate kappa must be nonnegative");
    }
    HistoryChain chain;
    chain.T = T;
    chain.kappa = kappa;
    const auto n = chain.num_states();
    std::vector<Eigen::Triplet<double>> trips;
    for (int clock = 0; clock <= T; clock++) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << T); bits++) {
            const auto from = chain.index(bits, clock);
            double out = 0;
            for_each_transition(T, kappa, bits, clock, [&](std::int64_t to, double rate) {
                trips.emplace_back(to, from, rate);
                out += rate;
            });
            trips.emplace_back(from, from, -out);
        }
    }
    chain.Q.resize(n, n);
    chain.Q.setFromTriplets(trips.begin(), trips.end());
    return chain;
}

std::vector<std::int64_t> reachable_states(const HistoryChain &chain) {
    std::vector<bool> seen(static_cast<size_t>(chain.num_states()), false);
    std::deque<std::int64_t> queue{0};
    seen[0] = true;
    std::vector<std::int64_t> out;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        out.push_back(s);
        const int clock = static_cast<int>(s >> chain.T);
        const auto bits = static_cast<std::uint64_t>(s & ((std::int64_t{1} << chain.T) - 1));
        for_each_transition(chain.T, chain.kappa, bits, clock, [&](std::int64_t to, double) {
            if (!seen[static_cast<size_t>(to)]) {
                seen[static_cast<size_t>(to)] = true;
                queue.push_back(to);
            }
        });
    }
    return out;
}

namespace {

double stationarity_residual(const HistoryChain &chain, const RealVector &pi) {
    return (chain.Q * pi).cwiseAbs().maxCoeff();
}

}  // namespace

StationaryResult stationary_distribution(const HistoryChain &chain) {
    const auto n = chain.num_states();
    // Pin pi_0 = 1: solve Q[1:, 1:] x = -Q[1:, 0], then normalize.
    std::vector<Eigen::Triplet<double>> trips;
    RealVector rhs = RealVector::Zero(n - 1);
    for (int k = 0; k < chain.Q.outerSize(); k++) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(chain.Q, k); it; ++it) {
            if (it.row() == 0) {
                continue;
            }
            if (it.col() == 0) {
                rhs(it.row() - 1) = -it.value();
            } else {
                trips.emplace_back(static_cast<int>(it.row() - 1), static_cast<int>(it.col() - 1), it.value());
            }
        }
    }
    StationaryResult out;
    out.pi = RealVector::Zero(n);
    out.pi(0) = 1;
    if (n > 1) {
        Eigen::SparseMatrix<double> a(n - 1, n - 1);
        a.setFromTriplets(trips.begin(), trips.end());
        a.makeCompressed();
        if (chain.kappa == 0 || chain.T <= kDirectVwcGates) {
            Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
            lu.compute(a);
            if (lu.info() != Eigen::Success) {
                throw NumericalError("sparse LU of the history chain failed: " + lu.lastErrorMessage());
            }
            out.pi.tail(n - 1) = lu.solve(rhs);
            out.method = "sparse_lu";
        } else {
            // Bit-flip noise turns the register into a hypercube; LU fill-in grows ~10x per gate.
            Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> solver;
            solver.setTolerance(1e-15);
            solver.setMaxIterations(100000);
            solver.compute(a);
            out.pi.tail(n - 1) = solver.solve(rhs);
            if (solver.info() != Eigen::Success && solver.error() > 1e-10) {
                throw NumericalError("BiCGSTAB on the history chain did not converge (relative residual " +
                                     std::to_string(solver.error()) + ")");
            }
            out.method = "bicgstab";
        }
    }
    out.pi /= out.pi.sum();
    out.residual = stationarity_residual(chain, out.pi);
    return out;
}

StationaryResult stationary_distribution_dense(const HistoryChain &chain) {
    if (chain.T > kDenseVwcGates) {
        throw BudgetError("dense stationary solve limited to T <= " + std::to_string(kDenseVwcGates));
    }
    RealMatrix a = RealMatrix(chain.Q);
    a.row(0).setOnes();
    RealVector rhs = RealVector::Zero(a.rows());
    rhs(0) = 1;
    StationaryResult out;
    out.pi = a.fullPivLu().solve(rhs);
    out.residual = stationarity_residual(chain, out.pi);
    out.method = "dense_lu";
    return out;
}

double output_overlap(const HistoryChain &chain, const RealVector &pi, bool clock_conditioned) {
    const std::uint64_t ones = (std::uint64_t{1} << chain.T) - 1;
    if (clock_conditioned) {
        double total = 0;
        for (std::uint64_t b = 0; b <= ones; b++) {
            total += pi(chain.index(b, chain.T));
        }
        return total > 0 ? pi(chain.index(ones, chain.T)) / total : 0.0;
    }
    double p = 0;
    for (int clock = 0; clock <= chain.T; clock++) {
        p += pi(chain.index(ones, clock));
    }
    return p;
}

}  // namespace dissim
