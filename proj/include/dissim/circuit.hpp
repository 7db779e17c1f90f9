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

#ifndef DISSIM_CIRCUIT_HPP
#define DISSIM_CIRCUIT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dissim/channels.hpp"
#include "dissim/ensembles.hpp"
#include "dissim/lattice.hpp"
#include "dissim/types.hpp"

namespace dissim {

enum class OpKind { kUnitary, kRotation, kChannel };

/// One gate or channel on a list of sites.
///
/// kRotation ops realize exp(-i theta_param H); H is stored with its eigendecomposition.
struct Operation {
    OpKind kind = OpKind::kUnitary;
    std::vector<int> sites;
    std::string label;
    Matrix unitary;
    Matrix generator;
    int param = -1;
    std::shared_ptr<const KrausChannel> channel;
    /// Strength of an amplitude-damping reset (channel ops only), -1 otherwise.
    double reset_q = -1;

    static Operation fixed(Matrix u, std::vector<int> sites, std::string label);
    static Operation rotation(const Matrix &h, std::vector<int> sites, int param, std::string label);
    static Operation noise(std::shared_ptr<const KrausChannel> ch, std::vector<int> sites,
                           std::string label);
    static Operation reset(double q, int site);

    /// Unitary of a fixed or rotation op at angle theta.
    Matrix matrix(double theta) const;
    bool is_perfect_reset() const { return reset_q == 1.0; }

    RealVector eigenvalues;
    Matrix eigenvectors;
};

enum class LayerKind { kReset, kBrickwork, kNoise, kSingleQubit, kCustom };

struct Layer {
    LayerKind kind = LayerKind::kCustom;
    /// 1-based layer index k of the circuit model (0 for custom blocks).
    int index = 0;
    std::vector<Operation> ops;
};

/// Ordered layers acting on `num_qubits` qubits with a parameter vector of size num_params.
struct CircuitProgram {
    int num_qubits = 0;
    Lattice lattice;
    int L = 1;
    int M = 1;
    int num_params = 0;
    std::vector<Layer> layers;

    std::vector<const Operation *> flat_ops() const;
    int count_layers(LayerKind kind) const;
    /// Last rotation acting on `site` in the final brickwork layer; -1 if none.
    int designated_param(int site) const;
};

/// 1 iff l mod L == 0.
int chi(int l, int L);

enum class TwoQubitGates { kHaar, kClifford, kHardwareEfficient, kQaoa, kIdentity };
TwoQubitGates parse_two_qubit_gates(const std::string &name);
std::string two_qubit_gates_name(TwoQubitGates g);

/// Extra parameterized gate exp(-i theta H) on a designated pair in the final layer.
struct ProbeGate {
    Matrix generator;  // 4x4 Hermitian, 0 < ||H|| <= 1
    int first_site = 0;
};

struct AnsatzSpec {
    TwoQubitGates gates = TwoQubitGates::kHaar;
    std::optional<EnsembleKind> single_qubit;  // V layer
    std::shared_ptr<const KrausChannel> noise;  // single-qubit, applied to every site
    /// Blocks of correlation_period layers share structure and parameters.
    bool correlated = false;
    int correlation_period = 5;
    std::optional<ProbeGate> probe;
};

/// Layered circuit: for k = 1..L*M: reset (if chi(k)), two-qubit layer, noise, single-qubit layer.
/// Random gates are drawn from `rng` once and frozen into the program.
CircuitProgram build_dissipative_circuit(const Lattice &lat, int L, int M, double q,
                                         const AnsatzSpec &ansatz, Rng &rng);

// Gate library. R_A(theta) = exp(-i theta A / 2).
Matrix rx(double theta);
Matrix ry(double theta);
Matrix rz(double theta);
Matrix cnot_gate();
Matrix hadamard_gate();
Matrix s_gate();
/// [R_Y(t1) (x) R_Y(t2)] CNOT [R_X(t3) (x) R_X(t4)].
Matrix hardware_efficient_brick(double t1, double t2, double t3, double t4);
/// exp(-i theta H) for Hermitian H.
Matrix expm_hermitian(const Matrix &h, double theta);

/// Ops of one QAOA chain layer on n sites (R_ZZ even pairs, R_ZZ odd pairs, R_X, R_Y);
/// parameters numbered from `first_param`.
std::vector<Operation> qaoa_chain_layer(int n, int first_param);

}  // namespace dissim

#endif
