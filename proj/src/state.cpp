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

#include "dissim/state.hpp"

#include <algorithm>
#include <cmath>

#include "dissim/error.hpp"
#include "dissim/kernels.hpp"

namespace dissim {

namespace {

Eigen::Index dim_of(int n) {
    return Eigen::Index{1} << n;
}

void check_dense_budget(int n) {
    if (n < 0 || n > kMaxDenseQubits) {
        throw BudgetError(std::to_string(n) + " qubits exceed the dense budget of " +
                          std::to_string(kMaxDenseQubits));
    }
}

}  // namespace

DensityState::DensityState(int n, Matrix rho) : n_(n), rho_(std::move(rho)) {
    check_dense_budget(n);
    if (rho_.rows() != dim_of(n) || rho_.cols() != dim_of(n)) {
        throw ConfigError("density matrix size does not match qubit count");
    }
}

DensityState DensityState::zero(int n) {
    check_dense_budget(n);
    Matrix rho = Matrix::Zero(dim_of(n), dim_of(n));
    rho(0, 0) = 1;
    return {n, std::move(rho)};
}

DensityState DensityState::maximally_mixed(int n) {
    check_dense_budget(n);
    return {n, Matrix::Identity(dim_of(n), dim_of(n)) / static_cast<double>(dim_of(n))};
}

DensityState DensityState::pure(const Vector &psi) {
    int n = 0;
    while (dim_of(n) < psi.size()) {
        n++;
    }
    if (dim_of(n) != psi.size()) {
        throw ConfigError("state vector length is not a power of two");
    }
    return {n, psi * psi.adjoint()};
}

DensityState DensityState::product(const std::vector<Matrix> &factors) {
    Matrix rho = Matrix::Identity(1, 1);
    for (const auto &f : factors) {
        rho = kron(rho, f);
    }
    return {static_cast<int>(factors.size()), std::move(rho)};
}

void DensityState::apply_unitary(const Matrix &u, std::span<const int> sites) {
    apply_left(rho_, u, sites, n_);
    apply_right_adjoint(rho_, u, sites, n_);
}

void DensityState::apply_channel(const KrausChannel &ch, std::span<const int> sites) {
    if (static_cast<int>(sites.size()) != ch.num_qubits()) {
        throw ConfigError("channel arity does not match site count");
    }
    if (ch.is_unitary()) {
        apply_unitary(ch.kraus().front(), sites);
        return;
    }
    if (ch.num_qubits() <= 2) {
        apply_superoperator(rho_, ch.superoperator(), sites, n_);
        return;
    }
    Matrix acc = Matrix::Zero(rho_.rows(), rho_.cols());
    for (const auto &k : ch.kraus()) {
        Matrix term = rho_;
        apply_left(term, k, sites, n_);
        apply_right_adjoint(term, k, sites, n_);
        acc += term;
    }
    rho_ = std::move(acc);
}

void DensityState::apply_reset(int site) {
    if (site < 0 || site >= n_) {
        throw ConfigError("reset site out of range");
    }
    const Eigen::Index bit = Eigen::Index{1} << (n_ - 1 - site);
    for (Eigen::Index a = 0; a < rho_.rows(); a++) {
        for (Eigen::Index b = 0; b < rho_.cols(); b++) {
            if ((a & bit) || (b & bit)) {
                continue;
            }
            rho_(a, b) += rho_(a | bit, b | bit);
        }
    }
    for (Eigen::Index a = 0; a < rho_.rows(); a++) {
        for (Eigen::Index b = 0; b < rho_.cols(); b++) {
            if ((a & bit) || (b & bit)) {
                rho_(a, b) = 0;
            }
        }
    }
}

double DensityState::expectation(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw ConfigError("observable size does not match state");
    }
    return pauli_trace(rho_, p).real();
}

double DensityState::expectation(const Observable &obs) const {
    double total = 0;
    for (const auto &[a, p] : obs.terms) {
        total += a * expectation(p);
    }
    return total;
}

double DensityState::trace() const {
    return rho_.trace().real();
}

FactoredState::FactoredState(int n, Matrix f) : n_(n), f_(std::move(f)) {
    if (n < 0 || n > 2 * kMaxDenseQubits) {
        throw BudgetError(std::to_string(n) + " qubits exceed the factored-state budget");
    }
    if (f_.rows() != dim_of(n)) {
        throw ConfigError("factor row count does not match qubit count");
    }
}

FactoredState FactoredState::zero(int n) {
    Matrix f = Matrix::Zero(dim_of(n), 1);
    f(0, 0) = 1;
    return {n, std::move(f)};
}

FactoredState FactoredState::pure(const Vector &psi) {
    int n = 0;
    while (dim_of(n) < psi.size()) {
        n++;
    }
    return {n, Matrix(psi)};
}

FactoredState FactoredState::from_density(const DensityState &state) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(state.rho());
    const auto &w = es.eigenvalues();
    double cutoff = 1e-15 * std::max(1.0, w.cwiseAbs().maxCoeff());
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < w.size(); k++) {
        if (w(k) > cutoff) {
            keep.push_back(k);
        }
    }
    Matrix f(state.rho().rows(), static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); c++) {
        f.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]) * std::sqrt(w(keep[c]));
    }
    return {state.num_qubits(), std::move(f)};
}

void FactoredState::apply_unitary(const Matrix &u, std::span<const int> sites) {
    flush();
    apply_left(f_, u, sites, n_);
}

void FactoredState::apply_channel(const KrausChannel &ch, std::span<const int> sites) {
    if (static_cast<int>(sites.size()) != ch.num_qubits()) {
        throw ConfigError("channel arity does not match site count");
    }
    if (ch.is_unitary()) {
        apply_unitary(ch.kraus().front(), sites);
        return;
    }
    flush();
    const auto r = f_.cols();
    const auto m = static_cast<Eigen::Index>(ch.kraus().size());
    Matrix stacked(f_.rows(), r * m);
    for (Eigen::Index k = 0; k < m; k++) {
        Matrix part = f_;
        apply_left(part, ch.kraus()[static_cast<size_t>(k)], sites, n_);
        stacked.middleCols(k * r, r) = part;
    }
    f_ = std::move(stacked);
    compress();
}

void FactoredState::apply_reset(int site) {
    if (site < 0 || site >= n_) {
        throw ConfigError("reset site out of range");
    }
    if (std::find(pending_.begin(), pending_.end(), site) == pending_.end()) {
        pending_.push_back(site);
    }
}

void FactoredState::flush() const {
    if (pending_.empty()) {
        return;
    }
    std::sort(pending_.begin(), pending_.end());
    const int nr = static_cast<int>(pending_.size());
    const int nk = n_ - nr;
    std::vector<int> kept;
    for (int s = 0; s < n_; s++) {
        if (!std::binary_search(pending_.begin(), pending_.end(), s)) {
            kept.push_back(s);
        }
    }
    const Eigen::Index cols = f_.cols();
    const Eigen::Index dim_k = dim_of(nk);
    const Eigen::Index dim_r = dim_of(nr);
    // g(k, c + r * cols) = F(index(r, k), c): columns of the reduced factor on the kept qubits.
    Matrix g(dim_k, cols * dim_r);
    std::vector<Eigen::Index> full(static_cast<size_t>(dim_k * dim_r));
    for (Eigen::Index r = 0; r < dim_r; r++) {
        for (Eigen::Index k = 0; k < dim_k; k++) {
            Eigen::Index idx = 0;
            for (int j = 0; j < nr; j++) {
                if ((r >> (nr - 1 - j)) & 1) idx |= Eigen::Index{1} << (n_ - 1 - pending_[static_cast<size_t>(j)]);
            }
            for (int j = 0; j < nk; j++) {
                if ((k >> (nk - 1 - j)) & 1) idx |= Eigen::Index{1} << (n_ - 1 - kept[static_cast<size_t>(j)]);
            }
            full[static_cast<size_t>(r * dim_k + k)] = idx;
            g.block(k, r * cols, 1, cols) = f_.row(idx);
        }
    }
    if (g.cols() > dim_k) {
        Matrix rho = g * g.adjoint();
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
        const auto &w = es.eigenvalues();
        double cutoff = 1e-15 * std::max(w.sum(), 0.0);
        Eigen::Index first = 0;
        while (first < w.size() && w(first) <= cutoff) {
            first++;
        }
        Eigen::Index keep = w.size() - first;
        g = es.eigenvectors().rightCols(keep) * w.tail(keep).cwiseSqrt().asDiagonal();
    }
    f_ = Matrix::Zero(f_.rows(), g.cols());
    for (Eigen::Index k = 0; k < dim_k; k++) {
        f_.row(full[static_cast<size_t>(k)]) = g.row(k);
    }
    pending_.clear();
}

void FactoredState::compress(double rel_tol) {
    flush();
    const auto r = f_.cols();
    const auto dim = f_.rows();
    if (r == 0) {
        return;
    }
    if (r <= dim) {
        Matrix gram = f_.adjoint() * f_;
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
        const auto &w = es.eigenvalues();
        double cutoff = rel_tol * std::max(w.sum(), 0.0);
        Eigen::Index first = 0;
        while (first < w.size() && w(first) <= cutoff) {
            first++;
        }
        f_ = (f_ * es.eigenvectors().rightCols(w.size() - first)).eval();
    } else {
        Matrix rho = f_ * f_.adjoint();
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
        const auto &w = es.eigenvalues();
        double cutoff = rel_tol * std::max(w.sum(), 0.0);
        Eigen::Index first = 0;
        while (first < w.size() && w(first) <= cutoff) {
            first++;
        }
        Eigen::Index keep = w.size() - first;
        f_ = es.eigenvectors().rightCols(keep) * w.tail(keep).cwiseSqrt().asDiagonal();
    }
}

double FactoredState::expectation(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw ConfigError("observable size does not match state");
    }
    flush();
    return pauli_trace_factored(f_, p).real();
}

double FactoredState::expectation(const Observable &obs) const {
    double total = 0;
    for (const auto &[a, p] : obs.terms) {
        total += a * expectation(p);
    }
    return total;
}

double FactoredState::trace() const {
    flush();
    return f_.squaredNorm();
}

DensityState FactoredState::to_density() const {
    flush();
    return {n_, f_ * f_.adjoint()};
}

CoherenceVector to_coherence(const DensityState &state) {
    int n = state.num_qubits();
    CoherenceVector cv{n, RealVector(Eigen::Index{1} << (2 * n))};
    for (Eigen::Index k = 0; k < cv.v.size(); k++) {
        cv.v(k) = pauli_trace(state.rho(), PauliString::from_basis_index(n, static_cast<std::uint64_t>(k))).real();
    }
    return cv;
}

DensityState from_coherence(const CoherenceVector &cv, double tol) {
    int n = cv.n;
    auto dim = dim_of(n);
    if (cv.v.size() != dim * dim) {
        throw ConfigError("coherence vector length does not match qubit count");
    }
    Matrix rho = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < cv.v.size(); k++) {
        if (cv.v(k) == 0) {
            continue;
        }
        Matrix id = Matrix::Identity(dim, dim) * (cv.v(k) / static_cast<double>(dim));
        auto p = PauliString::from_basis_index(n, static_cast<std::uint64_t>(k));
        apply_pauli_left(id, p);
        rho += id;
    }
    DensityState out(n, std::move(rho));
    if (min_eigenvalue(out.rho()) < -tol) {
        throw NumericalError("coherence vector is not a physical state");
    }
    return out;
}

double purity(const DensityState &state) {
    return state.rho().cwiseAbs2().sum();
}

double von_neumann_entropy(const Matrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); k++) {
        double lam = es.eigenvalues()(k);
        if (lam > 1e-12) {
            s -= lam * std::log2(lam);
        }
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityState &state) {
    return von_neumann_entropy(state.rho());
}

double fidelity(const DensityState &state, const Vector &psi) {
    return (psi.adjoint() * state.rho() * psi)(0, 0).real();
}

double fidelity(const DensityState &a, const DensityState &b) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(b.rho());
    Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0);
    Matrix sqrt_b = es.eigenvectors() * w.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    Matrix inner = sqrt_b * a.rho() * sqrt_b;
    Eigen::SelfAdjointEigenSolver<Matrix> es2(inner, Eigen::EigenvaluesOnly);
    double root = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return root * root;
}

DensityState partial_trace(const DensityState &state, const std::vector<int> &keep) {
    int n = state.num_qubits();
    int m = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int s = 0; s < n; s++) {
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) {
            traced.push_back(s);
        }
    }
    auto index_of = [n](const std::vector<int> &sites, std::uint64_t local) {
        std::uint64_t full = 0;
        int k = static_cast<int>(sites.size());
        for (int b = 0; b < k; b++) {
            if ((local >> (k - 1 - b)) & 1) {
                full |= std::uint64_t{1} << (n - 1 - sites[b]);
            }
        }
        return full;
    };
    auto dk = dim_of(m);
    auto de = dim_of(n - m);
    std::vector<std::uint64_t> keep_idx(static_cast<size_t>(dk));
    std::vector<std::uint64_t> env_idx(static_cast<size_t>(de));
    for (Eigen::Index a = 0; a < dk; a++) {
        keep_idx[a] = index_of(keep, static_cast<std::uint64_t>(a));
    }
    for (Eigen::Index e = 0; e < de; e++) {
        env_idx[e] = index_of(traced, static_cast<std::uint64_t>(e));
    }
    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index b = 0; b < dk; b++) {
        for (Eigen::Index a = 0; a < dk; a++) {
            cplx acc = 0;
            for (Eigen::Index e = 0; e < de; e++) {
                acc += state.rho()(static_cast<Eigen::Index>(keep_idx[a] | env_idx[e]),
                                   static_cast<Eigen::Index>(keep_idx[b] | env_idx[e]));
            }
            out(a, b) = acc;
        }
    }
    return {m, std::move(out)};
}

double min_eigenvalue(const Matrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityState random_density(int n, int rank, Rng &rng) {
    std::normal_distribution<double> normal;
    Matrix g(dim_of(n), rank);
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            g(i, j) = cplx(normal(rng), normal(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return {n, std::move(rho)};
}

}  // namespace dissim
