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

#include "dissim/ensembles.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <deque>
#include <fstream>
#include <unordered_set>

#include "dissim/error.hpp"

namespace dissim {

namespace {

std::string matrix_key(const Matrix &u) {
    std::string key;
    key.reserve(static_cast<size_t>(u.size()) * 2 * sizeof(std::int64_t));
    for (Eigen::Index i = 0; i < u.rows(); i++) {
        for (Eigen::Index j = 0; j < u.cols(); j++) {
            std::int64_t parts[2] = {std::llround(u(i, j).real() * 1e6),
                                     std::llround(u(i, j).imag() * 1e6)};
            key.append(reinterpret_cast<const char *>(parts), sizeof(parts));
        }
    }
    return key;
}

Matrix hadamard() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Matrix phase_s() {
    Matrix s = Matrix::Identity(2, 2);
    s(1, 1) = cplx(0, 1);
    return s;
}

Matrix cnot() {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return c;
}

constexpr char kCacheMagic[4] = {'D', 'S', 'C', 'L'};
constexpr std::uint32_t kCacheVersion = 1;

}  // namespace

EnsembleKind parse_ensemble(const std::string &name) {
    if (name == "haar1") return EnsembleKind::kHaar1;
    if (name == "haar2") return EnsembleKind::kHaar2;
    if (name == "clifford1") return EnsembleKind::kClifford1;
    if (name == "clifford2") return EnsembleKind::kClifford2;
    if (name == "fixed") return EnsembleKind::kFixed;
    throw ConfigError("unknown ensemble '" + name + "'");
}

std::string ensemble_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::kHaar1:
            return "haar1";
        case EnsembleKind::kHaar2:
            return "haar2";
        case EnsembleKind::kClifford1:
            return "clifford1";
        case EnsembleKind::kClifford2:
            return "clifford2";
        case EnsembleKind::kFixed:
            return "fixed";
    }
    return "fixed";
}

Matrix haar_unitary(int dim, Rng &rng) {
    if (dim != 2 && dim != 4) {
        throw ConfigError("haar_unitary supports dim 2 or 4");
    }
    std::normal_distribution<double> normal;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            g(i, j) = cplx(normal(rng), normal(rng)) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < dim; k++) {
        cplx d = r(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return q;
}

Matrix canonical_phase(const Matrix &u) {
    for (Eigen::Index i = 0; i < u.rows(); i++) {
        for (Eigen::Index j = 0; j < u.cols(); j++) {
            if (std::abs(u(i, j)) > 1e-9) {
                cplx phase = u(i, j) / std::abs(u(i, j));
                return u / phase;
            }
        }
    }
    return u;
}

std::vector<Matrix> group_closure(const std::vector<Matrix> &generators) {
    auto dim = generators.front().rows();
    std::vector<Matrix> elements;
    std::unordered_set<std::string> seen;
    std::deque<Matrix> frontier;
    Matrix id = Matrix::Identity(dim, dim);
    seen.insert(matrix_key(id));
    elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Matrix cur = frontier.front();
        frontier.pop_front();
        for (const auto &g : generators) {
            Matrix next = canonical_phase(g * cur);
            if (seen.insert(matrix_key(next)).second) {
                elements.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return elements;
}

const std::vector<Matrix> &clifford1_group() {
    static const std::vector<Matrix> group = group_closure({hadamard(), phase_s()});
    return group;
}

const std::vector<Matrix> &clifford2_group() {
    static const std::vector<Matrix> group = [] {
        Matrix id = Matrix::Identity(2, 2);
        return group_closure({kron(hadamard(), id), kron(id, hadamard()), kron(phase_s(), id),
                              kron(id, phase_s()), cnot()});
    }();
    return group;
}

Matrix clifford1_sample(Rng &rng) {
    const auto &g = clifford1_group();
    std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
    return g[pick(rng)];
}

Matrix clifford2_sample(Rng &rng) {
    const auto &g = clifford2_group();
    std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
    return g[pick(rng)];
}

void save_clifford2_cache(const std::string &path) {
    const auto &g = clifford2_group();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write Clifford cache '" + path + "'");
    }
    auto count = static_cast<std::uint32_t>(g.size());
    out.write(kCacheMagic, 4);
    out.write(reinterpret_cast<const char *>(&kCacheVersion), sizeof(kCacheVersion));
    out.write(reinterpret_cast<const char *>(&count), sizeof(count));
    for (const auto &u : g) {
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                double parts[2] = {u(i, j).real(), u(i, j).imag()};
                out.write(reinterpret_cast<const char *>(parts), sizeof(parts));
            }
        }
    }
}

std::vector<Matrix> load_clifford2_cache(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read Clifford cache '" + path + "'");
    }
    char magic[4];
    std::uint32_t version = 0;
    std::uint32_t count = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char *>(&version), sizeof(version));
    in.read(reinterpret_cast<char *>(&count), sizeof(count));
    if (!in || std::memcmp(magic, kCacheMagic, 4) != 0) {
        throw ConfigError("'" + path + "' is not a Clifford cache");
    }
    if (version != kCacheVersion) {
        throw ConfigError("unsupported Clifford cache version " + std::to_string(version));
    }
    std::vector<Matrix> table(count, Matrix(4, 4));
    for (auto &u : table) {
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                double parts[2];
                in.read(reinterpret_cast<char *>(parts), sizeof(parts));
                u(i, j) = cplx(parts[0], parts[1]);
            }
        }
    }
    if (!in) {
        throw ConfigError("truncated Clifford cache '" + path + "'");
    }
    return table;
}

Matrix sample_unitary(EnsembleKind kind, Rng &rng) {
    switch (kind) {
        case EnsembleKind::kHaar1:
            return haar_unitary(2, rng);
        case EnsembleKind::kHaar2:
            return haar_unitary(4, rng);
        case EnsembleKind::kClifford1:
            return clifford1_sample(rng);
        case EnsembleKind::kClifford2:
            return clifford2_sample(rng);
        case EnsembleKind::kFixed:
            break;
    }
    throw ConfigError("fixed ensemble cannot be sampled");
}

MomentCheck check_first_moment(EnsembleKind kind, const Matrix &op, bool exact, int samples,
                               std::uint64_t seed) {
    auto dim = op.rows();
    Matrix target = op.trace() / static_cast<double>(dim) * Matrix::Identity(dim, dim);
    if (exact) {
        const std::vector<Matrix> *group = nullptr;
        if (kind == EnsembleKind::kClifford1 && dim == 2) {
            group = &clifford1_group();
        } else if (kind == EnsembleKind::kClifford2 && dim == 4) {
            group = &clifford2_group();
        } else {
            throw ConfigError("exact moment check needs a Clifford ensemble of matching dimension");
        }
        Matrix mean = Matrix::Zero(dim, dim);
        for (const auto &u : *group) {
            mean += u * op * u.adjoint();
        }
        mean /= static_cast<double>(group->size());
        return {(mean - target).cwiseAbs().maxCoeff(), 0.0};
    }
    if (samples < 2) {
        throw ConfigError("sampled moment check needs at least 2 samples");
    }
    Rng rng(seed);
    Matrix sum = Matrix::Zero(dim, dim);
    Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < samples; s++) {
        Matrix u = sample_unitary(kind, rng);
        Matrix x = u * op * u.adjoint();
        sum += x;
        sum_sq += x.cwiseAbs2();
    }
    Matrix mean = sum / static_cast<double>(samples);
    Eigen::MatrixXd var = (sum_sq / samples - mean.cwiseAbs2()) * samples / (samples - 1.0);
    double se = std::sqrt(var.maxCoeff() / samples);
    return {(mean - target).cwiseAbs().maxCoeff(), se};
}

double check_pauli_mixing(EnsembleKind kind, const PauliString &p1, const PauliString &p2) {
    const std::vector<Matrix> *group = nullptr;
    int n = p1.num_qubits();
    if (kind == EnsembleKind::kClifford1 && n == 1) {
        group = &clifford1_group();
    } else if (kind == EnsembleKind::kClifford2 && n == 2) {
        group = &clifford2_group();
    } else {
        throw ConfigError("Pauli mixing check needs a Clifford ensemble of matching dimension");
    }
    if (p2.num_qubits() != n) {
        throw ConfigError("Pauli size mismatch");
    }
    auto d = Eigen::Index{1} << n;
    Matrix pp = kron(p1.dense(), p2.dense());
    Matrix mean = Matrix::Zero(d * d, d * d);
    for (const auto &u : *group) {
        Matrix uu = kron(u, u);
        mean += uu * pp * uu.adjoint();
    }
    mean /= static_cast<double>(group->size());

    Matrix expected = Matrix::Zero(d * d, d * d);
    PauliString a = p1;
    PauliString b = p2;
    a.sign = b.sign = 1;
    double sign = p1.sign * p2.sign;
    if (a == b) {
        if (a.is_identity()) {
            expected = sign * Matrix::Identity(d * d, d * d);
        } else {
            double coeff = sign / static_cast<double>(d * d - 1);
            for (std::uint64_t k = 1; k < static_cast<std::uint64_t>(d * d); k++) {
                Matrix q = PauliString::from_basis_index(n, k).dense();
                expected += coeff * kron(q, q);
            }
        }
    }
    Matrix diff = mean - expected;
    double worst = 0;
    for (std::uint64_t k1 = 0; k1 < static_cast<std::uint64_t>(d * d); k1++) {
        Matrix q1 = PauliString::from_basis_index(n, k1).dense();
        for (std::uint64_t k2 = 0; k2 < static_cast<std::uint64_t>(d * d); k2++) {
            Matrix q = kron(q1, PauliString::from_basis_index(n, k2).dense());
            double c = std::abs((q * diff).trace()) / static_cast<double>(d * d);
            worst = std::max(worst, c);
        }
    }
    return worst;
}

SecondMomentCheck check_single_layer_second_moment(const PauliString &p, const Matrix &b) {
    int n = p.num_qubits();
    auto dim = Eigen::Index{1} << n;
    if (b.rows() != dim || b.cols() != dim) {
        throw ConfigError("second-moment check: size mismatch");
    }
    if (n > 3) {
        throw ConfigError("second-moment check enumerates at most 3 qubits");
    }
    const auto &group = clifford1_group();
    Matrix pd = p.dense();
    std::vector<size_t> idx(n, 0);
    double total = 0;
    size_t count = 0;
    while (true) {
        Matrix u = Matrix::Identity(1, 1);
        for (int k = 0; k < n; k++) {
            u = kron(u, group[idx[k]]);
        }
        cplx t = (pd * u * b * u.adjoint()).trace();
        total += t.real() * t.real();
        count++;
        int k = n - 1;
        while (k >= 0 && ++idx[k] == group.size()) {
            idx[k] = 0;
            k--;
        }
        if (k < 0) {
            break;
        }
    }
    double lhs = total / static_cast<double>(count);

    auto supp = p.support();
    double rhs = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); k++) {
        PauliString q = PauliString::from_basis_index(n, k);
        if (q.support() != supp) {
            continue;
        }
        double t = (q.dense() * b).trace().real();
        rhs += t * t;
    }
    rhs /= std::pow(3.0, static_cast<double>(supp.size()));
    return {lhs, rhs};
}

}  // namespace dissim
