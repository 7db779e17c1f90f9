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

#include <cstdio>
#include <filesystem>

#include "dissim/ensembles.hpp"
#include "dissim/error.hpp"
#include "dissim/state.hpp"

namespace dissim {
namespace {

bool is_unitary(const Matrix &u) { return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).norm() < 1e-12; }

TEST(Ensembles, HaarIsUnitary) {
    Rng rng(1);
    for (int dim : {2, 4}) {
        for (int k = 0; k < 10; k++) {
            EXPECT_TRUE(is_unitary(haar_unitary(dim, rng)));
        }
    }
    EXPECT_THROW(haar_unitary(3, rng), ConfigError);
}

TEST(Ensembles, CanonicalPhase) {
    Rng rng(2);
    Matrix u = haar_unitary(2, rng);
    Matrix c = canonical_phase(u);
    EXPECT_LT((canonical_phase(cplx(0, 1) * u) - c).norm(), 1e-12);
    EXPECT_LT((canonical_phase(c) - c).norm(), 1e-15);
}

TEST(Ensembles, CliffordGroupSizes) {
    EXPECT_EQ(clifford1_group().size(), 24u);
    EXPECT_EQ(clifford2_group().size(), 11520u);
    Matrix h = Matrix(PauliString::from_text("X").dense() + PauliString::from_text("Z").dense()) / std::sqrt(2.0);
    Matrix s = Matrix::Identity(2, 2);
    s(1, 1) = cplx(0, 1);
    EXPECT_EQ(group_closure({h, s}).size(), 24u);
}

TEST(Ensembles, CliffordsMapPaulisToPaulis) {
    for (const auto &u : clifford1_group()) {
        for (int k = 1; k < 4; k++) {
            Matrix img = u * PauliString::from_basis_index(1, k).dense() * u.adjoint();
            int hits = 0;
            for (int j = 1; j < 4; j++) {
                cplx overlap = (img * PauliString::from_basis_index(1, j).dense()).trace() / 2.0;
                if (std::abs(std::abs(overlap) - 1) < 1e-12) hits++;
            }
            EXPECT_EQ(hits, 1);
        }
    }
}

TEST(Ensembles, Clifford2CacheRoundTrip) {
    auto path = (std::filesystem::temp_directory_path() / "dissim_c2_cache.bin").string();
    save_clifford2_cache(path);
    auto loaded = load_clifford2_cache(path);
    ASSERT_EQ(loaded.size(), clifford2_group().size());
    for (size_t k = 0; k < loaded.size(); k += 997) {
        EXPECT_EQ(loaded[k], clifford2_group()[k]);
    }
    std::remove(path.c_str());
    EXPECT_THROW(load_clifford2_cache(path), std::exception);
}

TEST(Ensembles, NameRoundTrip) {
    for (auto k : {EnsembleKind::kHaar1, EnsembleKind::kHaar2, EnsembleKind::kClifford1, EnsembleKind::kClifford2}) {
        EXPECT_EQ(parse_ensemble(ensemble_name(k)), k);
    }
    EXPECT_THROW(parse_ensemble("gaussian"), ConfigError);
}

TEST(Designs, ExactFirstMoment) {
    Matrix op = Matrix::Random(2, 2);
    EXPECT_LT(check_first_moment(EnsembleKind::kClifford1, op, true).deviation, 1e-12);
    Matrix op4 = Matrix::Random(4, 4);
    EXPECT_LT(check_first_moment(EnsembleKind::kClifford2, op4, true).deviation, 1e-12);
}

TEST(Designs, HaarFirstMomentStatistical) {
    Matrix op = PauliString::from_text("Z").dense();
    auto r = check_first_moment(EnsembleKind::kHaar1, op, false, 4000, 9);
    EXPECT_LT(r.deviation, 5 * r.stderr_max);
}

TEST(Designs, PauliMixing) {
    for (int a = 1; a < 4; a++) {
        for (int b = 1; b < 4; b++) {
            EXPECT_LT(check_pauli_mixing(EnsembleKind::kClifford1, PauliString::from_basis_index(1, a),
                                         PauliString::from_basis_index(1, b)),
                      1e-12);
        }
    }
}

TEST(Designs, SingleLayerSecondMoment) {
    Rng rng(3);
    for (const char *p : {"Z", "XI", "ZY", "IXZ"}) {
        auto ps = PauliString::from_text(p);
        Matrix b = random_density(ps.num_qubits(), 2, rng).rho();
        auto r = check_single_layer_second_moment(ps, b);
        EXPECT_NEAR(r.lhs, r.rhs, 1e-12) << p;
    }
}

}  // namespace
}  // namespace dissim
