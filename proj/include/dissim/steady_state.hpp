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

#ifndef DISSIM_STEADY_STATE_HPP
#define DISSIM_STEADY_STATE_HPP

#include <span>
#include <string>
#include <vector>

#include "dissim/circuit.hpp"
#include "dissim/state.hpp"

namespace dissim {

/// One jump acting on traceless coherence vectors: v -> omega v + offset.
struct AffineJumpMap {
    int n = 0;
    RealMatrix omega;
    RealVector offset;

    RealVector apply(const RealVector &v) const { return omega * v + offset; }
};

struct SolveReport {
    std::string method;
    int iterations = 0;
    double residual = 0;
    bool converged = false;
};

struct SteadyState {
    /// Traceless part (length 4^n - 1).
    RealVector v;
    SolveReport report;
};

inline constexpr int kMaxSteadyStateQubits = 5;

/// Full Pauli transfer matrix of the circuit, T_ij = Tr(P_i Phi(P_j)) / 2^n.
RealMatrix circuit_ptm(const CircuitProgram &circ, std::span<const double> theta);
/// Requires at least one reset in the circuit.
AffineJumpMap assemble_jump_map(const CircuitProgram &circ, std::span<const double> theta);

/// ||v - (omega v + offset)||_2.
double fixed_point_residual(const AffineJumpMap &map, const RealVector &v);

/// (I - omega)^-1 offset by LU; NumericalError naming the eigenvalue near 1 when singular.
SteadyState steady_state_closed_form(const AffineJumpMap &map);
/// Richardson iteration from |0...0>; not converged (no exception) on max_iter or stall.
SteadyState steady_state_fixed_point(const AffineJumpMap &map, double tol = 1e-10, int max_iter = 100000);

/// Coherence vector (with leading 1) <-> traceless part.
RealVector traceless_part(const CoherenceVector &cv);
CoherenceVector full_coherence(int n, const RealVector &traceless);

/// Infidelity 1 - F(rho_M, target) after M = 1..m_max jumps from rho0.
std::vector<double> layered_convergence(const CircuitProgram &jump, std::span<const double> theta,
                                        const DensityState &target, const DensityState &rho0, int m_max);

struct BellPumpOptions {
    /// Correction angle; pi gives an exact CNOT.
    double correction_angle = 0.7853981633974483;
    /// Trotter step of exp(-i tau XX) exp(-i tau ZZ) at the start of each jump; 0 disables it.
    double tau = 0.1;
    /// Depolarizing rate after every gate; 0 disables it.
    double noise = 0;
};

/// Three-qubit jump pumping qubits 0, 1 into (|00> + |11>)/sqrt(2); qubit 2 is the ancilla.
/// Parameter 0 is the correction angle.
CircuitProgram bell_pump_jump(const BellPumpOptions &opt);
/// |Phi+> (x) |0>.
Vector bell_pump_target();

}  // namespace dissim

#endif
