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

#ifndef DISSIM_EXPERIMENTS_HPP
#define DISSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissim/bounds.hpp"
#include "dissim/circuit.hpp"
#include "dissim/gradients.hpp"
#include "dissim/toric.hpp"
#include "dissim/train.hpp"
#include "dissim/variance.hpp"

namespace dissim {

/// Variance of a cost or gradient over random brickwork circuits on a 1-d chain.
struct BrickworkVarianceConfig {
    std::vector<int> qubits{4, 6, 8, 10};
    int layers = 40;
    /// Layers between resets; 0 means no resets (unitary circuit).
    int reset_every = 0;
    /// Every reset_stride-th site is reset.
    int reset_stride = 2;
    double q = 1;
    TwoQubitGates gates = TwoQubitGates::kHardwareEfficient;
    std::optional<EnsembleKind> single_qubit;
    double noise = 0;
    bool correlated = false;
    int correlation_period = 5;
    /// Observable Z on this site.
    int site = 1;
    /// "gradient" (designated parameter at `site`) or "cost".
    std::string target = "gradient";
    GradientMethod method = GradientMethod::kParameterShift;
    int samples = 200;
    std::uint64_t seed = 7;
};

struct VariancePoint {
    int n = 0;
    VarianceEstimate estimate;
};

/// One random instance: circuit gates are drawn from rng first, then theta ~ U[0, 2 pi).
double brickwork_sample(const BrickworkVarianceConfig &cfg, int n, Rng &rng);
std::vector<VariancePoint> run_brickwork_variance(const BrickworkVarianceConfig &cfg);

enum class ToricAnsatz { kUnitary, kDissipative };
std::string toric_ansatz_name(ToricAnsatz a);
ToricAnsatz parse_toric_ansatz(const std::string &name);

struct ToricConfig {
    /// Lattice widths w; n = 2 * rows * w.
    std::vector<int> widths{3, 4, 5};
    int rows = 1;
    double p = 0.1;
    /// Unitary layers; 0 means one layer per column (depth grows as n / 2).
    int unitary_layers = 0;
    int rounds = 2;
    int samples = 200;
    std::uint64_t seed = 11;
    /// Plaquette (in pumping order) reported as the single Hamiltonian term.
    int term = 1;
    TrainOptions train;
    /// Random initializations of the unitary ansatz; the run with the lowest final cost is kept.
    int restarts = 1;
    bool do_variance = true;
    bool do_train = true;
    bool do_entropy = false;
};

struct ToricProblem {
    ToricLattice lattice;
    ToricAnsatz ansatz = ToricAnsatz::kUnitary;
    CircuitProgram circuit;
    Observable energy;
    /// Index of the single term in energy.terms.
    int term_index = 0;
    /// Parameter whose gradient variance is reported.
    int grad_param = 0;
};

ToricProblem make_toric_problem(const ToricConfig &cfg, int width, ToricAnsatz ansatz);
/// Initial state of the gradient-variance experiment (|+> unitary, mixed + ancilla dissipative).
InitialState toric_variance_initial(const ToricProblem &prob);
/// Initial state of training and entropy runs (|0> unitary, mixed + ancilla dissipative).
InitialState toric_training_initial(const ToricProblem &prob);

struct ToricPoint {
    int n = 0;
    ToricAnsatz ansatz = ToricAnsatz::kUnitary;
    std::optional<VarianceEstimate> gradient;
    double trained_term = 0;
    /// -<H> / (number of terms); 1 in a ground state.
    double trained_energy = 0;
    int train_steps = 0;
    bool train_aborted = false;
    /// S / n of the trained system state (ancilla traced out), in bits.
    double entropy_normalized = 0;
    std::vector<double> theta;
};

ToricPoint run_toric_point(const ToricConfig &cfg, int width, ToricAnsatz ansatz);
std::vector<ToricPoint> run_toric(const ToricConfig &cfg, const std::vector<ToricAnsatz> &ansaetze);

/// Monte-Carlo check of the analytic lower bounds on a Clifford brickwork chain.
struct BoundCheckConfig {
    int n = 4;
    int L = 1;
    int M = 2;
    /// Reset sites; 0 means n / 2.
    int n_r = 0;
    double q = 1;
    double p = 0.1;
    int samples = 2000;
    std::uint64_t seed = 3;
    /// Observable Z on this site; the probe gate acts on (site, site + 1), which must be a brick pair
    /// of the final layer. -1 picks the first such pair.
    int site = -1;
    double C = kDefaultCliffordConstant;
};

struct BoundCheck {
    BoundCheckConfig cfg;
    BoundParams params;
    BoundTerms variance_bound;
    double gradient_bound = 0;
    VarianceEstimate cost;
    VarianceEstimate gradient;
    /// Bound <= variance + z_99 * stderr.
    bool variance_ok = false;
    bool gradient_ok = false;
};

inline constexpr double kZ99 = 2.3263478740408408;

BoundCheck run_bound_check(const BoundCheckConfig &cfg);

/// Entropy (bits) after l = 0..L layers of [Haar brickwork, depolarizing p on every qubit] from |0...0>.
std::vector<double> depolarizing_entropy_series(int n, double p, int L, Rng &rng);

}  // namespace dissim

#endif
