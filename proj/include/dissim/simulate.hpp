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

#ifndef DISSIM_SIMULATE_HPP
#define DISSIM_SIMULATE_HPP

#include <span>
#include <vector>

#include "dissim/circuit.hpp"
#include "dissim/pauli.hpp"
#include "dissim/state.hpp"

namespace dissim {

/// Initial state description; product kinds have cheap marginals.
struct InitialState {
    enum class Kind { kZero, kPlus, kMixed, kProduct, kDense };
    Kind kind = Kind::kZero;
    std::vector<Matrix> factors;  // kProduct: one 2x2 density matrix per site
    Matrix dense;                 // kDense

    static InitialState zero() { return {Kind::kZero, {}, {}}; }
    static InitialState plus() { return {Kind::kPlus, {}, {}}; }
    static InitialState mixed() { return {Kind::kMixed, {}, {}}; }
    static InitialState product(std::vector<Matrix> f) { return {Kind::kProduct, std::move(f), {}}; }
    static InitialState from_density(const DensityState &s) { return {Kind::kDense, {}, s.rho()}; }

    DensityState density(int n) const;
    /// Marginal on `sites` (in order), as an InitialState on |sites| qubits.
    InitialState marginal(int n, const std::vector<int> &sites) const;
    bool is_pure() const { return kind == Kind::kZero || kind == Kind::kPlus; }
};

enum class Backend { kAuto, kDense, kFactored };

/// Applies one op at angle theta (ignored for fixed ops and channels).
template <typename State>
void apply_op(State &state, const Operation &op, double theta) {
    switch (op.kind) {
        case OpKind::kUnitary:
            state.apply_unitary(op.unitary, op.sites);
            break;
        case OpKind::kRotation:
            state.apply_unitary(op.matrix(theta), op.sites);
            break;
        case OpKind::kChannel:
            if (op.is_perfect_reset()) {
                state.apply_reset(op.sites.front());
            } else {
                state.apply_channel(*op.channel, op.sites);
            }
            break;
    }
}

inline double op_angle(const Operation &op, std::span<const double> theta) {
    return op.kind == OpKind::kRotation ? theta[static_cast<size_t>(op.param)] : 0.0;
}

template <typename State>
void run_ops(State &state, const std::vector<const Operation *> &ops, std::span<const double> theta,
             size_t begin, size_t end) {
    for (size_t k = begin; k < end; k++) {
        apply_op(state, *ops[k], op_angle(*ops[k], theta));
    }
}

/// Dense evaluation Phi(rho0).
DensityState evaluate(const CircuitProgram &circ, std::span<const double> theta, const DensityState &rho0);
FactoredState evaluate_factored(const CircuitProgram &circ, std::span<const double> theta,
                                const FactoredState &rho0);

/// True when every channel op is a reset or unitary, so the factored backend stays low rank.
bool prefers_factored(const CircuitProgram &circ);

/// Backward light cone. Entry k is the support of the backward-evolved observable at the
/// input of layer k. Perfect resets (q = 1) remove their site.
std::vector<std::vector<int>> light_cone(const CircuitProgram &circ, const std::vector<int> &support);

/// The causal restriction of a circuit to an observable support.
struct ConeReduction {
    CircuitProgram circuit;      // on sites.size() qubits, one custom layer
    std::vector<int> sites;      // reduced qubit j is original site sites[j]
    std::vector<int> kept_ops;   // indices into the original flat op list
};
ConeReduction reduce_to_light_cone(const CircuitProgram &circ, const std::vector<int> &support);

/// Restricts a Pauli string to the given sites (others must be identity).
PauliString restrict_pauli(const PauliString &p, const std::vector<int> &sites);

}  // namespace dissim

#endif
