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

#ifndef DISSIM_STATE_HPP
#define DISSIM_STATE_HPP

#include <span>
#include <vector>

#include "dissim/channels.hpp"
#include "dissim/pauli.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// Dense density matrix on n qubits.
class DensityState {
   public:
    DensityState() = default;
    DensityState(int n, Matrix rho);

    static DensityState zero(int n);
    static DensityState maximally_mixed(int n);
    static DensityState pure(const Vector &psi);
    /// Tensor product of single-qubit density matrices, site 0 first.
    static DensityState product(const std::vector<Matrix> &factors);

    int num_qubits() const { return n_; }
    const Matrix &rho() const { return rho_; }
    Matrix &rho() { return rho_; }

    void apply_unitary(const Matrix &u, std::span<const int> sites);
    void apply_channel(const KrausChannel &ch, std::span<const int> sites);
    /// rho -> |0><0|_site (x) Tr_site(rho).
    void apply_reset(int site);
    double expectation(const PauliString &p) const;
    double expectation(const Observable &obs) const;
    double trace() const;

   private:
    int n_ = 0;
    Matrix rho_;
};

/// rho = F F^dag with F of shape 2^n x r. Exact; rank is trimmed after non-unitary steps.
class FactoredState {
   public:
    FactoredState() = default;
    FactoredState(int n, Matrix f);

    static FactoredState zero(int n);
    static FactoredState pure(const Vector &psi);
    static FactoredState from_density(const DensityState &state);

    int num_qubits() const { return n_; }
    int rank() const {
        flush();
        return static_cast<int>(f_.cols());
    }
    const Matrix &factor() const {
        flush();
        return f_;
    }

    void apply_unitary(const Matrix &u, std::span<const int> sites);
    void apply_channel(const KrausChannel &ch, std::span<const int> sites);
    /// Perfect reset of `site`. Consecutive resets are deferred and applied as one partial trace,
    /// which bounds the rank by the dimension of the unreset qubits.
    void apply_reset(int site);
    double expectation(const PauliString &p) const;
    double expectation(const Observable &obs) const;
    double trace() const;
    DensityState to_density() const;

    /// Re-orthogonalizes F and drops directions with weight below rel_tol * trace.
    void compress(double rel_tol = 1e-15);

   private:
    void flush() const;

    int n_ = 0;
    mutable Matrix f_;
    mutable std::vector<int> pending_;
};

/// Real coherence vector v_P = Tr(P rho) over the 4^n Pauli basis; v[0] = 1.
struct CoherenceVector {
    int n = 0;
    RealVector v;
};

CoherenceVector to_coherence(const DensityState &state);
/// Throws NumericalError when the reconstructed matrix has eigenvalues below -tol.
DensityState from_coherence(const CoherenceVector &cv, double tol = 1e-8);

double purity(const DensityState &state);
/// Von Neumann entropy in bits; eigenvalues below 1e-12 and roundoff below 0 are clamped to 0.
double von_neumann_entropy(const DensityState &state);
double von_neumann_entropy(const Matrix &rho);
/// <psi|rho|psi>.
double fidelity(const DensityState &state, const Vector &psi);
/// Uhlmann fidelity (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
double fidelity(const DensityState &a, const DensityState &b);
/// Reduced state on `keep` (in the given order).
DensityState partial_trace(const DensityState &state, const std::vector<int> &keep);

double min_eigenvalue(const Matrix &hermitian);

/// Random density matrix of the given rank (Ginibre), test fixture.
DensityState random_density(int n, int rank, Rng &rng);

}  // namespace dissim

#endif
