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

#include "dissim/kernels.hpp"

#include <array>
#include <vector>

#include "dissim/error.hpp"

namespace dissim {

namespace {

constexpr int kMaxLocal = 6;

struct LocalLayout {
    std::uint64_t mask = 0;
    int dk = 1;
    std::array<std::uint64_t, std::size_t{1} << kMaxLocal> offsets{};
};

LocalLayout make_layout(std::span<const int> sites, int n) {
    LocalLayout lay;
    int k = static_cast<int>(sites.size());
    lay.dk = 1 << k;
    for (int j = 0; j < lay.dk; j++) {
        std::uint64_t off = 0;
        for (int b = 0; b < k; b++) {
            if ((j >> (k - 1 - b)) & 1) {
                off |= std::uint64_t{1} << (n - 1 - sites[b]);
            }
        }
        lay.offsets[j] = off;
    }
    for (int s : sites) {
        lay.mask |= std::uint64_t{1} << (n - 1 - s);
    }
    return lay;
}

// Iterates the basis indices with all local bits cleared.
template <typename F>
inline void for_each_base(std::uint64_t dim, std::uint64_t mask, F &&f) {
    for (std::uint64_t b = 0; b < dim; b = ((b | mask) + 1) & ~mask) {
        f(b);
    }
}

inline int popcount_parity(std::uint64_t x) {
    return __builtin_popcountll(x) & 1;
}

cplx i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

void check_sites(std::span<const int> sites, int n, Eigen::Index op_dim) {
    if (sites.empty() || static_cast<int>(sites.size()) > kMaxLocal) {
        throw ConfigError("local operators act on 1.." + std::to_string(kMaxLocal) + " sites");
    }
    if ((Eigen::Index{1} << sites.size()) != op_dim) {
        throw ConfigError("operator size does not match site count");
    }
    for (size_t a = 0; a < sites.size(); a++) {
        if (sites[a] < 0 || sites[a] >= n) {
            throw ConfigError("site " + std::to_string(sites[a]) + " out of range");
        }
        for (size_t b = a + 1; b < sites.size(); b++) {
            if (sites[a] == sites[b]) {
                throw ConfigError("site collision in local operator");
            }
        }
    }
}

void apply_left(Matrix &m, const Matrix &g, std::span<const int> sites, int n) {
    check_sites(sites, n, g.rows());
    const auto lay = make_layout(sites, n);
    const auto dim = static_cast<std::uint64_t>(m.rows());
    const int dk = lay.dk;
    std::array<cplx, 64> x{};
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        cplx *col = m.col(c).data();
        if (dk == 2) {
            const cplx g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
            const auto o1 = lay.offsets[1];
            for_each_base(dim, lay.mask, [&](std::uint64_t b) {
                cplx a0 = col[b];
                cplx a1 = col[b + o1];
                col[b] = g00 * a0 + g01 * a1;
                col[b + o1] = g10 * a0 + g11 * a1;
            });
        } else {
            for_each_base(dim, lay.mask, [&](std::uint64_t b) {
                for (int j = 0; j < dk; j++) {
                    x[j] = col[b + lay.offsets[j]];
                }
                for (int i = 0; i < dk; i++) {
                    cplx acc = 0;
                    for (int j = 0; j < dk; j++) {
                        acc += g(i, j) * x[j];
                    }
                    col[b + lay.offsets[i]] = acc;
                }
            });
        }
    }
}

void apply_right_adjoint(Matrix &m, const Matrix &g, std::span<const int> sites, int n) {
    check_sites(sites, n, g.rows());
    const auto lay = make_layout(sites, n);
    const auto dim = static_cast<std::uint64_t>(m.cols());
    const int dk = lay.dk;
    const Eigen::Index rows = m.rows();
    Matrix gc = g.conjugate();
    std::array<cplx *, 64> cols{};
    std::array<cplx, 64> x{};
    for_each_base(dim, lay.mask, [&](std::uint64_t b) {
        for (int j = 0; j < dk; j++) {
            cols[j] = m.col(static_cast<Eigen::Index>(b + lay.offsets[j])).data();
        }
        for (Eigen::Index r = 0; r < rows; r++) {
            for (int j = 0; j < dk; j++) {
                x[j] = cols[j][r];
            }
            for (int i = 0; i < dk; i++) {
                cplx acc = 0;
                for (int j = 0; j < dk; j++) {
                    acc += gc(i, j) * x[j];
                }
                cols[i][r] = acc;
            }
        }
    });
}

void apply_superoperator(Matrix &rho, const Matrix &s, std::span<const int> sites, int n) {
    const auto k = sites.size();
    check_sites(sites, n, Eigen::Index{1} << k);
    if (s.rows() != (Eigen::Index{1} << (2 * k))) {
        throw ConfigError("superoperator size does not match site count");
    }
    const auto lay = make_layout(sites, n);
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    const int dk = lay.dk;
    const int block = dk * dk;
    std::vector<cplx> x(block);
    std::vector<cplx> y(block);
    std::array<cplx *, 64> cols{};
    for_each_base(dim, lay.mask, [&](std::uint64_t cb) {
        for (int d = 0; d < dk; d++) {
            cols[d] = rho.col(static_cast<Eigen::Index>(cb + lay.offsets[d])).data();
        }
        for_each_base(dim, lay.mask, [&](std::uint64_t rb) {
            for (int c = 0; c < dk; c++) {
                for (int d = 0; d < dk; d++) {
                    x[c * dk + d] = cols[d][rb + lay.offsets[c]];
                }
            }
            for (int a = 0; a < block; a++) {
                cplx acc = 0;
                for (int b = 0; b < block; b++) {
                    acc += s(a, b) * x[b];
                }
                y[a] = acc;
            }
            for (int c = 0; c < dk; c++) {
                for (int d = 0; d < dk; d++) {
                    cols[d][rb + lay.offsets[c]] = y[c * dk + d];
                }
            }
        });
    });
}

cplx pauli_trace(const Matrix &rho, const PauliString &p) {
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    double re = 0;
    double im = 0;
    for (std::uint64_t j = 0; j < dim; j++) {
        cplx v = rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j ^ x));
        if (popcount_parity(j & z)) {
            v = -v;
        }
        re += v.real();
        im += v.imag();
    }
    return static_cast<double>(p.sign) * i_power(p.num_y()) * cplx(re, im);
}

cplx pauli_trace_factored(const Matrix &f, const PauliString &p) {
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    const auto dim = static_cast<std::uint64_t>(f.rows());
    cplx total = 0;
    for (Eigen::Index c = 0; c < f.cols(); c++) {
        const cplx *col = f.col(c).data();
        cplx acc = 0;
        for (std::uint64_t j = 0; j < dim; j++) {
            cplx v = std::conj(col[j ^ x]) * col[j];
            acc += popcount_parity(j & z) ? -v : v;
        }
        total += acc;
    }
    return static_cast<double>(p.sign) * i_power(p.num_y()) * total;
}

void apply_pauli_left(Matrix &m, const PauliString &p) {
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    const auto dim = static_cast<std::uint64_t>(m.rows());
    const cplx phase = static_cast<double>(p.sign) * i_power(p.num_y());
    Matrix out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        for (std::uint64_t j = 0; j < dim; j++) {
            cplx v = phase * m(static_cast<Eigen::Index>(j), c);
            out(static_cast<Eigen::Index>(j ^ x), c) = popcount_parity(j & z) ? -v : v;
        }
    }
    m = std::move(out);
}

}  // namespace dissim
