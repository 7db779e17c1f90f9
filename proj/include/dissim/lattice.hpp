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

#ifndef DISSIM_LATTICE_HPP
#define DISSIM_LATTICE_HPP

#include <utility>
#include <vector>

#include "dissim/pauli.hpp"

namespace dissim {

/// Hypercubic lattice of side^dim sites, indexed row-major over coordinates.
struct Lattice {
    int dim = 1;
    int side = 1;
    bool periodic = false;
    std::vector<int> reset_sites;

    Lattice() = default;
    Lattice(int dim, int side, bool periodic = false);

    int num_sites() const;
    std::vector<int> coords(int site) const;
    int site_index(const std::vector<int> &coords) const;
    /// Disjoint nearest-neighbor pairs along `axis` whose lower coordinate has the given parity.
    /// Open boundaries are never wrapped.
    std::vector<std::pair<int, int>> brickwork_pairs(int axis, int parity) const;
};

int manhattan_distance(const Lattice &lat, int a, int b);
int diameter(const Observable &obs, const Lattice &lat);

/// Equidistant reset sites. Per axis the gaps lie in {floor, ceil} of (n/n_r)^(1/d);
/// larger gaps are placed last.
Lattice place_reset_sites(int n, int n_r, int d);

/// Positions of `count` marks on a ring of `length` sites; gaps differ by at most 1, larger gaps last.
std::vector<int> equidistant_positions(int length, int count);

}  // namespace dissim

#endif
