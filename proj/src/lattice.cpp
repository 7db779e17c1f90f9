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

#include "dissim/lattice.hpp"

#include <cmath>
#include <cstdlib>

#include "dissim/error.hpp"

namespace dissim {

Lattice::Lattice(int dim, int side, bool periodic) : dim(dim), side(side), periodic(periodic) {
    if (dim < 1 || side < 1) {
        throw ConfigError("lattice needs dim >= 1 and side >= 1");
    }
}

int Lattice::num_sites() const {
    int n = 1;
    for (int a = 0; a < dim; a++) {
        n *= side;
    }
    return n;
}

std::vector<int> Lattice::coords(int site) const {
    if (site < 0 || site >= num_sites()) {
        throw ConfigError("site " + std::to_string(site) + " out of range");
    }
    std::vector<int> c(dim);
    for (int a = dim - 1; a >= 0; a--) {
        c[a] = site % side;
        site /= side;
    }
    return c;
}

int Lattice::site_index(const std::vector<int> &c) const {
    int s = 0;
    for (int a = 0; a < dim; a++) {
        s = s * side + c[a];
    }
    return s;
}

std::vector<std::pair<int, int>> Lattice::brickwork_pairs(int axis, int parity) const {
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < num_sites(); s++) {
        auto c = coords(s);
        if (c[axis] % 2 != parity) {
            continue;
        }
        if (c[axis] + 1 < side) {
            c[axis]++;
            pairs.emplace_back(s, site_index(c));
        } else if (periodic && side > 2 && side % 2 == 0) {
            c[axis] = 0;
            pairs.emplace_back(s, site_index(c));
        }
    }
    return pairs;
}

int manhattan_distance(const Lattice &lat, int a, int b) {
    auto ca = lat.coords(a);
    auto cb = lat.coords(b);
    int dist = 0;
    for (int k = 0; k < lat.dim; k++) {
        int delta = std::abs(ca[k] - cb[k]);
        if (lat.periodic) {
            delta = std::min(delta, lat.side - delta);
        }
        dist += delta;
    }
    return dist;
}

int diameter(const Observable &obs, const Lattice &lat) {
    int best = 0;
    for (const auto &[coefficient, p] : obs.terms) {
        auto sites = p.support();
        for (size_t i = 0; i < sites.size(); i++) {
            for (size_t j = i + 1; j < sites.size(); j++) {
                best = std::max(best, manhattan_distance(lat, sites[i], sites[j]));
            }
        }
    }
    return best;
}

std::vector<int> equidistant_positions(int length, int count) {
    int base = length / count;
    int extra = length % count;
    std::vector<int> positions;
    int pos = 0;
    for (int k = 0; k < count; k++) {
        positions.push_back(pos);
        pos += base + (k >= count - extra ? 1 : 0);
    }
    return positions;
}

Lattice place_reset_sites(int n, int n_r, int d) {
    if (d < 1 || n_r < 1 || n_r > n) {
        throw ConfigError("reset placement needs 1 <= n_r <= n and d >= 1");
    }
    int side = static_cast<int>(std::lround(std::pow(n, 1.0 / d)));
    int per_axis = static_cast<int>(std::lround(std::pow(n_r, 1.0 / d)));
    int side_check = 1;
    int per_axis_check = 1;
    for (int a = 0; a < d; a++) {
        side_check *= side;
        per_axis_check *= per_axis;
    }
    if (side_check != n) {
        throw ConfigError("n = " + std::to_string(n) + " is not a perfect power of d");
    }
    if (per_axis_check != n_r) {
        throw ConfigError("infeasible spacing: n_r = " + std::to_string(n_r) +
                          " is not a perfect power of d");
    }
    Lattice lat(d, side);
    auto axis_positions = equidistant_positions(side, per_axis);
    std::vector<int> idx(d, 0);
    while (true) {
        std::vector<int> c(d);
        for (int a = 0; a < d; a++) {
            c[a] = axis_positions[idx[a]];
        }
        lat.reset_sites.push_back(lat.site_index(c));
        int a = d - 1;
        while (a >= 0 && ++idx[a] == per_axis) {
            idx[a] = 0;
            a--;
        }
        if (a < 0) {
            break;
        }
    }
    return lat;
}

}  // namespace dissim
