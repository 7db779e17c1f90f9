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

#ifndef DISSIM_TORIC_HPP
#define DISSIM_TORIC_HPP

#include <memory>
#include <vector>

#include "dissim/circuit.hpp"
#include "dissim/pauli.hpp"
#include "dissim/simulate.hpp"

namespace dissim {

/// Toric code on a periodic rows x cols vertex lattice with qubits on edges.
///
/// Edge (r, c) owns two qubits: horizontal h(r, c) = 2(r*cols + c) joining (r, c)-(r, c+1) and
/// vertical v(r, c) = h(r, c) + 1 joining (r, c)-(r+1, c). Edges appearing twice in one star or
/// plaquette cancel.
struct ToricLattice {
    int rows = 1;
    int cols = 3;

    ToricLattice() = default;
    ToricLattice(int rows, int cols);

    int num_qubits() const { return 2 * rows * cols; }
    int h(int r, int c) const;
    int v(int r, int c) const;
    /// Qubit supports of the X-type plaquette stabilizers, in snake order.
    std::vector<std::vector<int>> plaquettes() const;
    /// Qubit supports of the Z-type vertex stabilizers, in snake order.
    std::vector<std::vector<int>> vertices() const;
};

struct Stabilizer {
    PauliString string;
    bool x_type = false;
};

/// Plaquettes (XX..X) followed by vertices (ZZ..Z).
std::vector<Stabilizer> toric_stabilizers(const ToricLattice &lat);
/// H = -sum A - sum B.
Observable toric_hamiltonian(const ToricLattice &lat);
/// H divided by its number of terms; the ground-state value is -1.
Observable toric_energy_cost(const ToricLattice &lat, int total_qubits);
/// Rank over GF(2) of the symplectic representation.
int symplectic_rank(const std::vector<PauliString> &strings);

/// Correction qubit of stabilizer k: the first qubit shared with stabilizer k+1 (cyclically).
std::vector<int> correction_qubits(const std::vector<std::vector<int>> &supports);

/// CR_X(theta) = |0><0| (x) I + |1><1| (x) R_X(theta), control first; generator |1><1| (x) X/2.
Matrix controlled_rx_generator();

/// One stabilizer pump on `ancilla`: [H], CR_X(theta) from each support qubit with S on the control,
/// CR_X(theta) ancilla -> correction, [H], ancilla reset. Noise after every CR_X on both qubits.
std::vector<Layer> toric_dissipative_jump(const std::vector<int> &support, int correction, bool x_type,
                                          int param, int ancilla, std::shared_ptr<const KrausChannel> noise);

/// Plaquette rotations exp(-i theta_A A/2), vertex rotations exp(-i theta_B B/2), then an R_Y(theta_M)
/// mixer on every qubit; depolarizing noise on the qubits of every gate.
std::vector<Layer> toric_unitary_layer(const ToricLattice &lat, int first_param,
                                       std::shared_ptr<const KrausChannel> noise);

/// `layers` unitary layers (3 parameters each).
CircuitProgram toric_unitary_circuit(const ToricLattice &lat, int layers, double p);
/// `rounds` pumping rounds (vertices then plaquettes) with one ancilla as the last qubit.
/// Parameters: 0 = theta_X (plaquette pumps), 1 = theta_Z (vertex pumps).
CircuitProgram toric_dissipative_circuit(const ToricLattice &lat, int rounds, double p);
/// Fully mixed system with the ancilla in |0>.
InitialState toric_dissipative_initial(const ToricLattice &lat);

}  // namespace dissim

#endif
