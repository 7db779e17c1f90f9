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

#include "dissim/error.hpp"
#include "dissim/kernels.hpp"
#include "dissim/lattice.hpp"
#include "dissim/pauli.hpp"

namespace dissim {
namespace {

TEST(Pauli, ParseAndPrint) {
    auto p = PauliString::from_text("-XIZ");
    EXPECT_EQ(p.sign, -1);
    EXPECT_EQ(p.num_qubits(), 3);
    EXPECT_EQ(p.str(), "-XIZ");
    EXPECT_EQ(p.support(), (std::vector<int>{0, 2}));
    EXPECT_EQ(p.weight(), 2);
    EXPECT_THROW(PauliString::from_text("XQ"), ConfigError);
}

TEST(Pauli, BasisIndexRoundTrip) {
    EXPECT_EQ(PauliString::from_text("XZ").basis_index(), 7u);
    for (std::uint64_t k = 0; k < 64; k++) {
        EXPECT_EQ(PauliString::from_basis_index(3, k).basis_index(), k);
    }
}

TEST(Pauli, Masks) {
    auto p = PauliString::from_text("XYZ");
    EXPECT_EQ(p.x_mask(), 0b110u);
    EXPECT_EQ(p.z_mask(), 0b011u);
    EXPECT_EQ(p.num_y(), 1);
}

TEST(Pauli, ProductPhase) {
    auto r = multiply(PauliString::from_text("X"), PauliString::from_text("Y"));
    EXPECT_EQ(r.i_power, 1);
    EXPECT_EQ(r.string.str(), "+Z");
    EXPECT_FALSE(commutes(PauliString::from_text("X"), PauliString::from_text("Z")));
    EXPECT_TRUE(commutes(PauliString::from_text("XX"), PauliString::from_text("ZZ")));
}

TEST(Pauli, ProductMatchesDense) {
    for (std::uint64_t a = 0; a < 16; a++) {
        for (std::uint64_t b = 0; b < 16; b++) {
            auto pa = PauliString::from_basis_index(2, a);
            auto pb = PauliString::from_basis_index(2, b);
            auto r = multiply(pa, pb);
            cplx phase = std::pow(cplx(0, 1), r.i_power);
            Matrix expect = pa.dense() * pb.dense();
            EXPECT_LT((phase * r.string.dense() - expect).norm(), 1e-12);
            bool anti = (pa.dense() * pb.dense() + pb.dense() * pa.dense()).norm() < 1e-12;
            EXPECT_EQ(commutes(pa, pb), !anti);
        }
    }
}

TEST(Pauli, DenseIsKron) {
    Matrix x = PauliString::from_text("X").dense();
    Matrix z = PauliString::from_text("Z").dense();
    EXPECT_LT((PauliString::from_text("XZ").dense() - kron(x, z)).norm(), 1e-15);
}

TEST(Observable, WeightAndSupport) {
    Observable o(0.5, PauliString::from_text("ZII"));
    o.add(-2.0, PauliString::from_text("IXX"));
    o.add(3.0, PauliString::from_text("III"));
    EXPECT_DOUBLE_EQ(o.non_identity_weight(), 4.25);
    EXPECT_EQ(o.support(), (std::vector<int>{0, 1, 2}));
    EXPECT_NEAR(o.dense().trace().real(), 3.0 * 8, 1e-12);
}

TEST(Kernels, ApplyLeftMatchesKron) {
    Rng rng(3);
    Matrix m = Matrix::Random(8, 8);
    Matrix g = Matrix::Random(4, 4);
    Matrix a = m;
    std::vector<int> sites{0, 1};
    apply_left(a, g, sites, 3);
    EXPECT_LT((a - kron(g, Matrix::Identity(2, 2)) * m).norm(), 1e-12);
    Matrix b = m;
    std::vector<int> swapped{2, 1};
    apply_left(b, PauliString::from_text("XZ").dense(), swapped, 3);
    EXPECT_LT((b - PauliString::from_text("IZX").dense() * m).norm(), 1e-12);
}

TEST(Kernels, PauliTraces) {
    Matrix rho = Matrix::Random(4, 4);
    rho = (rho * rho.adjoint()).eval();
    auto p = PauliString::from_text("YZ");
    EXPECT_LT(std::abs(pauli_trace(rho, p) - (p.dense() * rho).trace()), 1e-12);
    Matrix f = Matrix::Random(4, 2);
    EXPECT_LT(std::abs(pauli_trace_factored(f, p) - (p.dense() * f * f.adjoint()).trace()), 1e-12);
}

TEST(Kernels, RejectsBadSites) {
    Matrix m = Matrix::Identity(4, 4);
    std::vector<int> dup{0, 0};
    EXPECT_THROW(apply_left(m, Matrix::Identity(4, 4), dup, 2), ConfigError);
    std::vector<int> out{2};
    EXPECT_THROW(apply_left(m, Matrix::Identity(2, 2), out, 2), ConfigError);
}

TEST(Lattice, ChainBrickworkNeverWraps) {
    Lattice lat(1, 6);
    using P = std::vector<std::pair<int, int>>;
    EXPECT_EQ(lat.brickwork_pairs(0, 0), (P{{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_EQ(lat.brickwork_pairs(0, 1), (P{{1, 2}, {3, 4}}));
}

TEST(Lattice, CoordinatesRoundTrip) {
    Lattice lat(2, 3);
    EXPECT_EQ(lat.num_sites(), 9);
    for (int s = 0; s < 9; s++) {
        EXPECT_EQ(lat.site_index(lat.coords(s)), s);
    }
    EXPECT_EQ(manhattan_distance(lat, 0, 8), 4);
}

TEST(Lattice, BrickworkPairsAreDisjointNeighbors) {
    Lattice lat(2, 4);
    for (int axis = 0; axis < 2; axis++) {
        for (int parity = 0; parity < 2; parity++) {
            std::vector<int> used(16, 0);
            for (auto [a, b] : lat.brickwork_pairs(axis, parity)) {
                EXPECT_EQ(manhattan_distance(lat, a, b), 1);
                EXPECT_EQ(used[a]++, 0);
                EXPECT_EQ(used[b]++, 0);
            }
        }
    }
}

TEST(Lattice, EquidistantResets) {
    auto pos = equidistant_positions(7, 3);
    EXPECT_EQ(pos, (std::vector<int>{0, 2, 4}));
    auto lat = place_reset_sites(6, 3, 1);
    EXPECT_EQ(lat.reset_sites, (std::vector<int>{0, 2, 4}));
    auto sq = place_reset_sites(16, 4, 2);
    EXPECT_EQ(sq.reset_sites.size(), 4u);
    EXPECT_THROW(place_reset_sites(6, 2, 2), ConfigError);
    EXPECT_THROW(place_reset_sites(4, 5, 1), ConfigError);
}

TEST(Lattice, Diameter) {
    Lattice lat(1, 6);
    Observable o(1.0, PauliString::from_text("IZIZII"));
    EXPECT_EQ(diameter(o, lat), 2);
    EXPECT_EQ(diameter(Observable(1.0, PauliString::single(6, 3, Pauli::X)), lat), 0);
}

}  // namespace
}  // namespace dissim
