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
#include "dissim/state.hpp"

namespace dissim {
namespace {

Vector bell() {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(3) = 1 / std::sqrt(2.0);
    return psi;
}

TEST(DensityState, ZeroAndFlip) {
    auto s = DensityState::zero(2);
    EXPECT_DOUBLE_EQ(s.expectation(PauliString::from_text("ZI")), 1.0);
    std::vector<int> site{0};
    s.apply_unitary(PauliString::from_text("X").dense(), site);
    EXPECT_NEAR(s.expectation(PauliString::from_text("ZI")), -1.0, 1e-15);
    EXPECT_NEAR(s.expectation(PauliString::from_text("IZ")), 1.0, 1e-15);
    EXPECT_NEAR(s.trace(), 1.0, 1e-15);
}

TEST(DensityState, BellReductionIsMixed) {
    auto s = DensityState::pure(bell());
    EXPECT_NEAR(von_neumann_entropy(s), 0.0, 1e-10);
    auto r = partial_trace(s, {1});
    EXPECT_LT((r.rho() - Matrix::Identity(2, 2) / 2).norm(), 1e-14);
    EXPECT_NEAR(von_neumann_entropy(r), 1.0, 1e-12);
    EXPECT_NEAR(purity(r), 0.5, 1e-14);
    EXPECT_NEAR(fidelity(s, bell()), 1.0, 1e-14);
}

TEST(DensityState, PartialTraceOrder) {
    auto r = partial_trace(DensityState::product({DensityState::zero(1).rho(), Matrix(Matrix::Identity(2, 2) / 2)}),
                           {1, 0});
    EXPECT_NEAR(r.expectation(PauliString::from_text("IZ")), 1.0, 1e-14);
    EXPECT_NEAR(r.expectation(PauliString::from_text("ZI")), 0.0, 1e-14);
}

TEST(DensityState, ResetMatchesChannel) {
    Rng rng(2);
    auto rho = random_density(3, 8, rng);
    for (int site = 0; site < 3; site++) {
        DensityState a = rho;
        DensityState b = rho;
        a.apply_reset(site);
        std::vector<int> s{site};
        b.apply_channel(amplitude_damping(1.0), s);
        EXPECT_LT((a.rho() - b.rho()).norm(), 1e-14);
    }
}

TEST(CoherenceVector, RoundTrip) {
    Rng rng(3);
    auto rho = random_density(2, 3, rng);
    auto cv = to_coherence(rho);
    EXPECT_DOUBLE_EQ(cv.v(0), 1.0);
    auto back = from_coherence(cv);
    EXPECT_LT((back.rho() - rho.rho()).norm(), 1e-13);
}

TEST(CoherenceVector, RejectsNonPhysical) {
    CoherenceVector cv{1, RealVector::Zero(4)};
    cv.v(0) = 1;
    cv.v(3) = 1.5;
    EXPECT_THROW(from_coherence(cv), NumericalError);
}

TEST(FactoredState, MatchesDenseUnderChannels) {
    Rng rng(4);
    auto d = DensityState::zero(3);
    auto f = FactoredState::zero(3);
    for (int step = 0; step < 12; step++) {
        std::vector<int> pair{step % 3, (step + 1) % 3};
        Matrix u = rx(0.3 + step) * ry(0.2 * step);
        Matrix u2 = kron(u, rz(0.5 * step)) * cnot_gate();
        d.apply_unitary(u2, pair);
        f.apply_unitary(u2, pair);
        std::vector<int> one{step % 3};
        auto ch = step % 2 ? depolarizing(0.1) : amplitude_damping(0.3);
        d.apply_channel(ch, one);
        f.apply_channel(ch, one);
        if (step % 4 == 3) {
            d.apply_reset(step % 3);
            f.apply_reset(step % 3);
            d.apply_reset((step + 2) % 3);
            f.apply_reset((step + 2) % 3);
        }
    }
    EXPECT_LT((d.rho() - f.to_density().rho()).norm(), 1e-12);
    EXPECT_NEAR(f.trace(), 1.0, 1e-12);
    EXPECT_LE(f.rank(), 8);
}

TEST(FactoredState, BatchedResetBoundsRank) {
    Rng rng(5);
    Vector psi = Vector::Random(64);
    psi.normalize();
    auto f = FactoredState::pure(psi);
    auto d = DensityState::pure(psi);
    for (int s : {0, 2, 4}) {
        f.apply_reset(s);
        d.apply_reset(s);
    }
    EXPECT_LE(f.rank(), 8);
    EXPECT_LT((f.to_density().rho() - d.rho()).norm(), 1e-12);
}

TEST(FactoredState, FromDensityRoundTrip) {
    Rng rng(6);
    auto rho = random_density(2, 2, rng);
    auto f = FactoredState::from_density(rho);
    EXPECT_EQ(f.rank(), 2);
    EXPECT_LT((f.to_density().rho() - rho.rho()).norm(), 1e-12);
}

TEST(States, Budget) {
    EXPECT_THROW(DensityState::zero(kMaxDenseQubits + 1), BudgetError);
}

TEST(States, UhlmannFidelityOfPureStates) {
    Vector a = Vector::Zero(2);
    a(0) = 1;
    Vector b = Vector::Zero(2);
    b(0) = b(1) = 1 / std::sqrt(2.0);
    EXPECT_NEAR(fidelity(DensityState::pure(a), DensityState::pure(b)), 0.5, 1e-10);
}

}  // namespace
}  // namespace dissim
