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

#ifndef DISSIM_CHANNELS_HPP
#define DISSIM_CHANNELS_HPP

#include <array>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

inline constexpr double kCptpTolerance = 1e-10;

/// A CPTP map given by Kraus operators, with its Pauli transfer matrix cached at construction.
class KrausChannel {
   public:
    KrausChannel() = default;
    /// Throws ConfigError if the set is not trace preserving within `tol`.
    explicit KrausChannel(std::vector<Matrix> kraus, double tol = kCptpTolerance);

    static KrausChannel identity(int n_qubits);
    static KrausChannel unitary(const Matrix &u);

    int num_qubits() const { return n_qubits_; }
    const std::vector<Matrix> &kraus() const { return kraus_; }
    /// M_ij = Tr(P_i Phi(P_j)) / 2^n over the Pauli basis (site 0 most significant).
    const RealMatrix &ptm() const { return ptm_; }
    /// Superoperator S with vec(Phi(rho))_(a,b) = sum S_(ab),(cd) rho_cd, row-major pair index.
    const Matrix &superoperator() const { return superop_; }
    bool is_unitary() const { return kraus_.size() == 1; }

    Matrix apply(const Matrix &rho) const;
    Matrix apply_adjoint(const Matrix &op) const;
    Matrix choi() const;
    double min_choi_eigenvalue() const;

   private:
    int n_qubits_ = 0;
    std::vector<Matrix> kraus_;
    RealMatrix ptm_;
    Matrix superop_;
};

struct NormalForm {
    Eigen::Vector3d c;
    Eigen::Vector3d D;
    Matrix U;
    Matrix V;
};

RealMatrix ptm_from_kraus(const KrausChannel &ch);
KrausChannel adjoint(const KrausChannel &ch);
/// Returns a o b (apply b first).
KrausChannel compose(const KrausChannel &a, const KrausChannel &b);
KrausChannel tensor(const KrausChannel &a, const KrausChannel &b);

/// rho -> (1-p) rho + p I/2.
KrausChannel depolarizing(double p);
/// K1 = [[0, sqrt q],[0, 0]], K2 = [[1, 0],[0, sqrt(1-q)]].
KrausChannel amplitude_damping(double q);

/// Channel with PTM block diag(D) and shift c in the standard frame: a diagonal
/// Pauli channel followed by the affine shift, realized exactly when physical.
NormalForm normal_form(const KrausChannel &ch);
/// PTM of rho -> U N(V rho V^dag) U^dag for the normal form.
RealMatrix normal_form_ptm(const NormalForm &nf);

bool is_unital(const KrausChannel &ch, double tol = 1e-10);
struct ContractionProfile {
    Eigen::Vector3d D;
    double D_max;
};
ContractionProfile contraction_profile(const KrausChannel &ch);

/// 3x3 rotation of Bloch vectors induced by a single-qubit unitary: R_ij = Tr(P_i U P_j U^dag)/2.
Eigen::Matrix3d bloch_rotation(const Matrix &u);
/// Single-qubit unitary realizing a proper rotation R (up to global phase).
Matrix unitary_from_rotation(const Eigen::Matrix3d &r);

/// Random channel with `num_kraus` operators from a Gaussian isometry (test fixture).
KrausChannel random_channel(int n_qubits, int num_kraus, Rng &rng);
/// Random mixed-unitary (hence unital) single-qubit channel (test fixture).
KrausChannel random_unital_channel(int num_terms, Rng &rng);

}  // namespace dissim

#endif
