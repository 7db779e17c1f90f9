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

#include <gtest/gtest.h>

#include <cmath>

#include "dissim/channels.hpp"
#include "dissim/circuit.hpp"
#include "dissim/error.hpp"
#include "dissim/pauli.hpp"
#include "dissim/state.hpp"

namespace dissim {
namespace {

TEST(Channels, DepolarizingPtm) {
    const double p = 0.3;
    RealMatrix expect = RealMatrix::Identity(4, 4) * (1 - p);
    expect(0, 0) = 1;
    EXPECT_LT((depolarizing(p).ptm() - expect).norm(), 1e-14);
}

TEST(Channels, AmplitudeDampingPtm) {
    const double q = 0.4;
    const auto ch = amplitude_damping(q);
    const auto &t = ch.ptm();
    EXPECT_NEAR(t(1, 1), std::sqrt(1 - q), 1e-14);
    EXPECT_NEAR(t(2, 2), std::sqrt(1 - q), 1e-14);
    EXPECT_NEAR(t(3, 3), 1 - q, 1e-14);
    EXPECT_NEAR(t(3, 0), q, 1e-14);
    EXPECT_NEAR(t(0, 0), 1, 1e-14);
}

TEST(Channels, RejectsNonTracePreserving) {
    Matrix k = Matrix::Identity(2, 2) * 0.9;
    EXPECT_THROW(KrausChannel({k}), ConfigError);
}

TEST(Channels, CompositionAndTensor) {
    Rng rng(1);
    auto a = random_channel(1, 2, rng);
    auto b = random_channel(1, 3, rng);
    EXPECT_LT((compose(a, b).ptm() - a.ptm() * b.ptm()).norm(), 1e-12);
    EXPECT_LT((tensor(a, b).ptm() - kron(a.ptm(), b.ptm())).norm(), 1e-12);
}

TEST(Channels, AdjointPtmIsTranspose) {
    Rng rng(2);
    auto a = random_channel(1, 3, rng);
    EXPECT_LT((adjoint(a).ptm() - a.ptm().transpose()).norm(), 1e-12);
    Matrix op = Matrix::Random(2, 2);
    Matrix rho = random_density(1, 2, rng).rho();
    EXPECT_LT(std::abs((op * a.apply(rho)).trace() - (a.apply_adjoint(op) * rho).trace()), 1e-12);
}

TEST(Channels, ChoiIsPositive) {
    Rng rng(3);
    for (int k = 0; k < 20; k++) {
        auto ch = random_channel(1 + k % 2, 1 + k % 4, rng);
        EXPECT_GT(ch.min_choi_eigenvalue(), -1e-12);
    }
}

TEST(Channels, Unitality) {
    EXPECT_TRUE(is_unital(depolarizing(0.2)));
    EXPECT_FALSE(is_unital(amplitude_damping(0.2)));
    Rng rng(4);
    EXPECT_TRUE(is_unital(random_unital_channel(3, rng)));
}

TEST(Channels, SuperoperatorMatchesKraus) {
    Rng rng(5);
    auto ch = random_channel(1, 3, rng);
    Matrix rho = random_density(1, 2, rng).rho();
    Matrix out = ch.apply(rho);
    Matrix vec(4, 1);
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++) vec(2 * a + b, 0) = rho(a, b);
    Matrix res = ch.superoperator() * vec;
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++) EXPECT_LT(std::abs(res(2 * a + b, 0) - out(a, b)), 1e-12);
}

TEST(Channels, BlochRotationRoundTrip) {
    Rng rng(6);
    for (int k = 0; k < 20; k++) {
        Matrix u = rx(0.3 * k) * rz(1.1 + k) * ry(0.7 * k);
        Eigen::Matrix3d r = bloch_rotation(u);
        EXPECT_LT((r * r.transpose() - Eigen::Matrix3d::Identity()).norm(), 1e-12);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
        EXPECT_LT((bloch_rotation(unitary_from_rotation(r)) - r).norm(), 1e-10);
    }
}

TEST(Channels, NormalFormReconstructs) {
    Rng rng(7);
    for (int k = 0; k < 100; k++) {
        auto ch = random_channel(1, 1 + k % 4, rng);
        auto nf = normal_form(ch);
        EXPECT_LT((normal_form_ptm(nf) - ch.ptm()).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(Channels, NormalFormOfAmplitudeDamping) {
    for (double q : {0.0, 0.3, 1.0}) {
        auto nf = normal_form(amplitude_damping(q));
        EXPECT_LT((nf.c - Eigen::Vector3d(0, 0, q)).norm(), 1e-12);
        EXPECT_LT((nf.D - Eigen::Vector3d(std::sqrt(1 - q), std::sqrt(1 - q), 1 - q)).norm(), 1e-12);
    }
}

TEST(Channels, ContractionProfile) {
    auto prof = contraction_profile(depolarizing(0.2));
    EXPECT_NEAR(prof.D_max, 0.8, 1e-12);
    EXPECT_NEAR(contraction_profile(KrausChannel::identity(1)).D_max, 1.0, 1e-12);
}

TEST(Channels, UnitalChannelsContract) {
    Rng rng(8);
    for (int k = 0; k < 200; k++) {
        auto ch = random_unital_channel(1 + k % 3, rng);
        auto rho = random_density(1, 1 + k % 2, rng);
        DensityState out(1, ch.apply(rho.rho()));
        EXPECT_LE(purity(out), purity(rho) + 1e-12);
    }
}

}  // namespace
}  // namespace dissim
