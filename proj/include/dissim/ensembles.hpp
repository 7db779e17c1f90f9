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

#ifndef DISSIM_ENSEMBLES_HPP
#define DISSIM_ENSEMBLES_HPP

#include <string>
#include <vector>

#include "dissim/pauli.hpp"
#include "dissim/types.hpp"

namespace dissim {

enum class EnsembleKind { kHaar1, kHaar2, kClifford1, kClifford2, kFixed };

EnsembleKind parse_ensemble(const std::string &name);
std::string ensemble_name(EnsembleKind kind);

/// Haar-random unitary of dimension 2 or 4 (Ginibre + QR with diagonal phase fix).
Matrix haar_unitary(int dim, Rng &rng);

/// Strips global phase: the first entry (row-major) with modulus > 1e-9 becomes real positive.
Matrix canonical_phase(const Matrix &u);

/// The 24 single-qubit Cliffords modulo phase, in breadth-first order over words in {H, S}.
const std::vector<Matrix> &clifford1_group();
/// The 11520 two-qubit Cliffords modulo phase, closure over {H(x)I, I(x)H, S(x)I, I(x)S, CNOT}.
const std::vector<Matrix> &clifford2_group();
Matrix clifford1_sample(Rng &rng);
Matrix clifford2_sample(Rng &rng);

/// Enumerates the closure of `generators` under multiplication modulo global phase.
std::vector<Matrix> group_closure(const std::vector<Matrix> &generators);

/// Two-qubit Clifford table cache. Format: "DSCL" magic, uint32 version, uint32 count,
/// then count * 16 complex<double> entries in row-major order.
void save_clifford2_cache(const std::string &path);
std::vector<Matrix> load_clifford2_cache(const std::string &path);

/// Draws one unitary from the ensemble (kFixed is not drawable).
Matrix sample_unitary(EnsembleKind kind, Rng &rng);

/// || E[U O U^dag] - Tr(O)/d I ||_max. Exact enumeration for Clifford kinds, otherwise
/// `samples` Monte-Carlo draws.
struct MomentCheck {
    double deviation;
    double stderr_max;  // 0 for exact mode
};
MomentCheck check_first_moment(EnsembleKind kind, const Matrix &op, bool exact, int samples = 0,
                               std::uint64_t seed = 0);

/// Max coefficient error of E[U(x)U (P1(x)P2) U^dag(x)U^dag] against the Pauli 2-mixing identity.
double check_pauli_mixing(EnsembleKind kind, const PauliString &p1, const PauliString &p2);

/// |E[Tr(P U B U^dag)^2] - 3^-|P| sum_{supp Q = supp P} Tr(Q B)^2| with U a layer of
/// single-qubit Cliffords, by exhaustive enumeration.
struct SecondMomentCheck {
    double lhs;
    double rhs;
};
SecondMomentCheck check_single_layer_second_moment(const PauliString &p, const Matrix &b);

}  // namespace dissim

#endif
