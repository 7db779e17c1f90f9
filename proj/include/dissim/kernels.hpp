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

#ifndef DISSIM_KERNELS_HPP
#define DISSIM_KERNELS_HPP

#include <span>

#include "dissim/pauli.hpp"
#include "dissim/types.hpp"

namespace dissim {

// Local-operator kernels on matrices whose row (and column) index is an n-qubit basis index.
// `sites[0]` is the most significant qubit of the local operator. All kernels are serial;
// parallelism lives one level up, across Monte-Carlo samples.

/// m <- (G on sites) * m, acting on the row index of every column.
void apply_left(Matrix &m, const Matrix &g, std::span<const int> sites, int n);
/// m <- m * (G on sites)^dag, acting on the column index.
void apply_right_adjoint(Matrix &m, const Matrix &g, std::span<const int> sites, int n);
/// rho <- S(rho) for a superoperator S (row-major pair index, see KrausChannel::superoperator).
void apply_superoperator(Matrix &rho, const Matrix &s, std::span<const int> sites, int n);

/// Tr(P rho) for a dense square rho.
cplx pauli_trace(const Matrix &rho, const PauliString &p);
/// sum_k f_k^dag P f_k over the columns of f.
cplx pauli_trace_factored(const Matrix &f, const PauliString &p);
/// m <- P m (row action), including the sign of P.
void apply_pauli_left(Matrix &m, const PauliString &p);

/// Validates a site list against n and the operator size; throws ConfigError.
void check_sites(std::span<const int> sites, int n, Eigen::Index op_dim);

}  // namespace dissim

#endif
