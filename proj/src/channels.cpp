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

#include "dissim/channels.hpp"

#include <cmath>
#include <random>

#include "dissim/ensembles.hpp"
#include "dissim/error.hpp"
#include "dissim/pauli.hpp"

namespace dissim {

namespace {

int qubits_for_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        n++;
    }
    if ((Eigen::Index{1} << n) != dim) {
        throw ConfigError("operator dimension is not a power of two");
    }
    return n;
}

std::vector<Matrix> pauli_basis(int n) {
    std::vector<Matrix> basis;
    std::uint64_t count = std::uint64_t{1} << (2 * n);
    basis.reserve(count);
    for (std::uint64_t k = 0; k < count; k++) {
        basis.push_back(PauliString::from_basis_index(n, k).dense());
    }
    return basis;
}

void check_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus, double tol) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw ConfigError("channel needs at least one Kraus operator");
    }
    auto dim = kraus_.front().rows();
    n_qubits_ = qubits_for_dim(dim);
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto &k : kraus_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw ConfigError("Kraus operators must be square and equally sized");
        }
        sum += k.adjoint() * k;
    }
    double err = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (err > tol) {
        throw ConfigError("Kraus set is not trace preserving (error " + std::to_string(err) + ")");
    }
    superop_ = Matrix::Zero(dim * dim, dim * dim);
    for (const auto &k : kraus_) {
        superop_ += kron(k, Matrix(k.conjugate()));
    }
    ptm_ = ptm_from_kraus(*this);
}

KrausChannel KrausChannel::identity(int n_qubits) {
    auto dim = Eigen::Index{1} << n_qubits;
    return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::unitary(const Matrix &u) {
    return KrausChannel({u});
}

Matrix KrausChannel::apply(const Matrix &rho) const {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : kraus_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Matrix KrausChannel::apply_adjoint(const Matrix &op) const {
    Matrix out = Matrix::Zero(op.rows(), op.cols());
    for (const auto &k : kraus_) {
        out += k.adjoint() * op * k;
    }
    return out;
}

Matrix KrausChannel::choi() const {
    auto dim = kraus_.front().rows();
    Matrix c = Matrix::Zero(dim * dim, dim * dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            Matrix e = Matrix::Zero(dim, dim);
            e(i, j) = 1;
            c.block(i * dim, j * dim, dim, dim) = apply(e);
        }
    }
    return c;
}

double KrausChannel::min_choi_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(choi(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

RealMatrix ptm_from_kraus(const KrausChannel &ch) {
    int n = ch.num_qubits();
    auto basis = pauli_basis(n);
    auto count = static_cast<Eigen::Index>(basis.size());
    double norm = std::ldexp(1.0, -n);
    RealMatrix m(count, count);
    for (Eigen::Index j = 0; j < count; j++) {
        Matrix image = ch.apply(basis[j]);
        for (Eigen::Index i = 0; i < count; i++) {
            // Tr(P_i A) = sum_ab (P_i)_ba A_ab; P_i is Hermitian so use conj(P_i)_ab.
            m(i, j) = (basis[i].conjugate().cwiseProduct(image)).sum().real() * norm;
        }
    }
    return m;
}

KrausChannel adjoint(const KrausChannel &ch) {
    std::vector<Matrix> ks;
    for (const auto &k : ch.kraus()) {
        ks.push_back(k.adjoint());
    }
    // The adjoint of a CPTP map is unital but need not be trace preserving.
    return KrausChannel(std::move(ks), std::numeric_limits<double>::infinity());
}

KrausChannel compose(const KrausChannel &a, const KrausChannel &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ConfigError("compose: dimension mismatch");
    }
    std::vector<Matrix> ks;
    for (const auto &ka : a.kraus()) {
        for (const auto &kb : b.kraus()) {
            ks.push_back(ka * kb);
        }
    }
    return KrausChannel(std::move(ks));
}

KrausChannel tensor(const KrausChannel &a, const KrausChannel &b) {
    std::vector<Matrix> ks;
    for (const auto &ka : a.kraus()) {
        for (const auto &kb : b.kraus()) {
            ks.push_back(kron(ka, kb));
        }
    }
    return KrausChannel(std::move(ks));
}

KrausChannel depolarizing(double p) {
    check_probability(p, "depolarizing rate");
    std::vector<Matrix> ks;
    ks.push_back(std::sqrt(1.0 - 0.75 * p) * Matrix::Identity(2, 2));
    if (p > 0) {
        for (Pauli q : {Pauli::X, Pauli::Y, Pauli::Z}) {
            ks.push_back(std::sqrt(0.25 * p) * PauliString::single(1, 0, q).dense());
        }
    }
    return KrausChannel(std::move(ks));
}

KrausChannel amplitude_damping(double q) {
    check_probability(q, "reset strength");
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(q);
    Matrix k2 = Matrix::Zero(2, 2);
    k2(0, 0) = 1;
    k2(1, 1) = std::sqrt(1.0 - q);
    std::vector<Matrix> ks{k1, k2};
    if (q == 0) {
        ks = {k2};
    } else if (q == 1) {
        ks = {k1, k2};
    }
    return KrausChannel(std::move(ks));
}

Eigen::Matrix3d bloch_rotation(const Matrix &u) {
    Eigen::Matrix3d r;
    Matrix paulis[3] = {PauliString::from_text("X").dense(), PauliString::from_text("Y").dense(),
                        PauliString::from_text("Z").dense()};
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            r(i, j) = 0.5 * (paulis[i] * u * paulis[j] * u.adjoint()).trace().real();
        }
    }
    return r;
}

Matrix unitary_from_rotation(const Eigen::Matrix3d &r) {
    Eigen::AngleAxisd aa(r);
    const double half = 0.5 * aa.angle();
    const auto &axis = aa.axis();
    Matrix sigma = axis.x() * PauliString::from_text("X").dense() +
                   axis.y() * PauliString::from_text("Y").dense() +
                   axis.z() * PauliString::from_text("Z").dense();
    return std::cos(half) * Matrix::Identity(2, 2) - cplx(0, std::sin(half)) * sigma;
}

NormalForm normal_form(const KrausChannel &ch) {
    if (ch.num_qubits() != 1) {
        throw ConfigError("normal_form requires a single-qubit channel");
    }
    const RealMatrix &m = ch.ptm();
    Eigen::Matrix3d block = m.block(1, 1, 3, 3);
    Eigen::Vector3d shift = m.block(1, 0, 3, 1);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d o1 = svd.matrixU();
    Eigen::Matrix3d o2 = svd.matrixV();
    Eigen::Vector3d d = svd.singularValues();
    if (o1.determinant() < 0) {
        o1.col(2) *= -1;
        d(2) *= -1;
    }
    if (o2.determinant() < 0) {
        o2.col(2) *= -1;
        d(2) *= -1;
    }
    NormalForm nf;
    nf.D = d;
    nf.c = o1.transpose() * shift;
    nf.U = unitary_from_rotation(o1);
    nf.V = unitary_from_rotation(o2.transpose());
    return nf;
}

RealMatrix normal_form_ptm(const NormalForm &nf) {
    RealMatrix core = RealMatrix::Zero(4, 4);
    core(0, 0) = 1;
    for (int k = 0; k < 3; k++) {
        core(k + 1, 0) = nf.c(k);
        core(k + 1, k + 1) = nf.D(k);
    }
    RealMatrix ru = RealMatrix::Identity(4, 4);
    RealMatrix rv = RealMatrix::Identity(4, 4);
    ru.block(1, 1, 3, 3) = bloch_rotation(nf.U);
    rv.block(1, 1, 3, 3) = bloch_rotation(nf.V);
    return ru * core * rv;
}

bool is_unital(const KrausChannel &ch, double tol) {
    auto dim = Eigen::Index{1} << ch.num_qubits();
    Matrix image = ch.apply(Matrix::Identity(dim, dim));
    return (image - Matrix::Identity(dim, dim)).norm() <= tol;
}

ContractionProfile contraction_profile(const KrausChannel &ch) {
    NormalForm nf = normal_form(ch);
    return {nf.D, nf.D.cwiseAbs().maxCoeff()};
}

KrausChannel random_channel(int n_qubits, int num_kraus, Rng &rng) {
    auto dim = Eigen::Index{1} << n_qubits;
    std::normal_distribution<double> normal;
    Matrix g(dim * num_kraus, dim);
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            g(i, j) = cplx(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix iso = qr.householderQ() * Matrix::Identity(g.rows(), dim);
    std::vector<Matrix> ks;
    for (int k = 0; k < num_kraus; k++) {
        ks.push_back(iso.block(k * dim, 0, dim, dim));
    }
    return KrausChannel(std::move(ks));
}

KrausChannel random_unital_channel(int num_terms, Rng &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> w(num_terms);
    double total = 0;
    for (auto &x : w) {
        x = uniform(rng) + 1e-3;
        total += x;
    }
    std::vector<Matrix> ks;
    for (int k = 0; k < num_terms; k++) {
        ks.push_back(std::sqrt(w[k] / total) * haar_unitary(2, rng));
    }
    return KrausChannel(std::move(ks));
}

}  // namespace dissim
