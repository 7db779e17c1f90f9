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

#include "dissim/toric.hpp"

#include <algorithm>
#include <set>

#include "dissim/error.hpp"

namespace dissim {

namespace {

std::vector<int> xor_support(std::initializer_list<int> qubits) {
    std::set<int> s;
    for (int q : qubits) {
        if (!s.erase(q)) {
            s.insert(q);
        }
    }
    return {s.begin(), s.end()};
}

PauliString stabilizer_string(int n, const std::vector<int> &support, Pauli letter) {
    PauliString p(n);
    for (int q : support) {
        p.letters[static_cast<size_t>(q)] = letter;
    }
    return p;
}

// Boustrophedon order over a rows x cols grid.
std::vector<std::pair<int, int>> snake(int rows, int cols) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < rows; r++) {
        for (int k = 0; k < cols; k++) {
            out.emplace_back(r, r % 2 == 0 ? k : cols - 1 - k);
        }
    }
    return out;
}

Layer noise_layer(const std::vector<int> &sites, const std::shared_ptr<const KrausChannel> &noise) {
    Layer layer{LayerKind::kNoise, 0, {}};
    if (noise) {
        for (int s : sites) {
            layer.ops.push_back(Operation::noise(noise, {s}, "depolarizing"));
        }
    }
    return layer;
}

}  // namespace

ToricLattice::ToricLattice(int r, int c) : rows(r), cols(c) {
    if (rows < 1 || cols < 1 || num_qubits() < 4) {
        throw ConfigError("toric lattice needs at least 4 qubits");
    }
}

int ToricLattice::h(int r, int c) const {
    r = ((r % rows) + rows) % rows;
    c = ((c % cols) + cols) % cols;
    return 2 * (r * cols + c);
}

int ToricLattice::v(int r, int c) const { return h(r, c) + 1; }

std::vector<std::vector<int>> ToricLattice::plaquettes() const {
    std::vector<std::vector<int>> out;
    for (auto [r, c] : snake(rows, cols)) {
        out.push_back(xor_support({h(r, c), h(r + 1, c), v(r, c), v(r, c + 1)}));
    }
    return out;
}

std::vector<std::vector<int>> ToricLattice::vertices() const {
    std::vector<std::vector<int>> out;
    for (auto [r, c] : snake(rows, cols)) {
        out.push_back(xor_support({h(r, c), h(r, c - 1), v(r, c), v(r - 1, c)}));
    }
    return out;
}

std::vector<Stabilizer> toric_stabilizers(const ToricLattice &lat) {
    std::vector<Stabilizer> out;
    int n = lat.num_qubits();
    for (const auto &s : lat.plaquettes()) {
        if (s.empty()) {
            throw ConfigError("degenerate plaquette");
        }
        out.push_back({stabilizer_string(n, s, Pauli::X), true});
    }
    for (const auto &s : lat.vertices()) {
        if (s.empty()) {
            throw ConfigError("degenerate vertex");
        }
        out.push_back({stabilizer_string(n, s, Pauli::Z), false});
    }
    return out;
}

Observable toric_hamiltonian(const ToricLattice &lat) {
    Observable h;
    for (const auto &s : toric_stabilizers(lat)) {
        h.terms.emplace_back(-1.0, s.string);
    }
    return h;
}

Observable toric_energy_cost(const ToricLattice &lat, int total_qubits) {
    auto stabs = toric_stabilizers(lat);
    Observable h;
    double w = 1.0 / static_cast<double>(stabs.size());
    for (const auto &s : stabs) {
        PauliString p(total_qubits);
        std::copy(s.string.letters.begin(), s.string.letters.end(), p.letters.begin());
        h.terms.emplace_back(-w, p);
    }
    return h;
}

int symplectic_rank(const std::vector<PauliString> &strings) {
    if (strings.empty()) {
        return 0;
    }
    size_t n = strings.front().letters.size();
    std::vector<std::vector<bool>> rows;
    for (const auto &p : strings) {
        std::vector<bool> row(2 * n);
        for (size_t k = 0; k < n; k++) {
            auto l = p.letters[k];
            row[k] = l == Pauli::X || l == Pauli::Y;
            row[n + k] = l == Pauli::Z || l == Pauli::Y;
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (size_t col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); col++) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto &r) { return r[col]; });
        if (pivot == rows.end()) {
            continue;
        }
        std::swap(*pivot, rows[static_cast<size_t>(rank)]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != static_cast<size_t>(rank) && rows[i][col]) {
                for (size_t k = 0; k < 2 * n; k++) {
                    rows[i][k] = rows[i][k] != rows[static_cast<size_t>(rank)][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

std::vector<int> correction_qubits(const std::vector<std::vector<int>> &supports) {
    std::vector<int> out;
    for (size_t k = 0; k < supports.size(); k++) {
        const auto &a = supports[k];
        const auto &b = supports[(k + 1) % supports.size()];
        int pick = a.front();
        for (int q : a) {
            if (std::find(b.begin(), b.end(), q) != b.end()) {
                pick = q;
                break;
            }
        }
        out.push_back(pick);
    }
    return out;
}

Matrix controlled_rx_generator() {
    Matrix g = Matrix::Zero(4, 4);
    g(2, 3) = 0.5;
    g(3, 2) = 0.5;
    return g;
}

std::vector<Layer> toric_dissipative_jump(const std::vector<int> &support, int correction, bool x_type,
                                          int param, int ancilla, std::shared_ptr<const KrausChannel> noise) {
    std::vector<Layer> out;
    const Matrix gen = controlled_rx_generator();
    const Matrix s = s_gate();
    auto frame = [&]() {
        Layer layer{LayerKind::kCustom, 0, {}};
        for (int q : support) {
            layer.ops.push_back(Operation::fixed(hadamard_gate(), {q}, "H"));
        }
        out.push_back(std::move(layer));
    };
    auto controlled = [&](int control, int target) {
        Layer layer{LayerKind::kCustom, 0, {}};
        layer.ops.push_back(Operation::rotation(gen, {control, target}, param, "CRX"));
        layer.ops.push_back(Operation::fixed(s, {control}, "S"));
        out.push_back(std::move(layer));
        out.push_back(noise_layer({control, target}, noise));
    };
    if (x_type) {
        frame();
    }
    for (int q : support) {
        controlled(q, ancilla);
    }
    controlled(ancilla, correction);
    if (x_type) {
        frame();
    }
    out.push_back(Layer{LayerKind::kReset, 0, {Operation::reset(1.0, ancilla)}});
    return out;
}

std::vector<Layer> toric_unitary_layer(const ToricLattice &lat, int first_param,
                                       std::shared_ptr<const KrausChannel> noise) {
    std::vector<Layer> out;
    int n = lat.num_qubits();
    for (const auto &st : toric_stabilizers(lat)) {
        auto sites = st.string.support();
        PauliString local = restrict_pauli(st.string, sites);
        Matrix gen = 0.5 * local.dense();
        int param = first_param + (st.x_type ? 0 : 1);
        Layer layer{LayerKind::kCustom, 0, {}};
        layer.ops.push_back(Operation::rotation(gen, sites, param, st.x_type ? "RA" : "RB"));
        out.push_back(std::move(layer));
        out.push_back(noise_layer(sites, noise));
    }
    Matrix ygen = 0.5 * PauliString::from_text("Y").dense();
    Layer mixer{LayerKind::kSingleQubit, 0, {}};
    std::vector<int> all;
    for (int q = 0; q < n; q++) {
        mixer.ops.push_back(Operation::rotation(ygen, {q}, first_param + 2, "RY"));
        all.push_back(q);
    }
    out.push_back(std::move(mixer));
    out.push_back(noise_layer(all, noise));
    return out;
}

CircuitProgram toric_unitary_circuit(const ToricLattice &lat, int layers, double p) {
    if (layers < 0) {
        throw ConfigError("layer count must be nonnegative");
    }
    CircuitProgram circ;
    circ.num_qubits = lat.num_qubits();
    circ.lattice = Lattice(1, circ.num_qubits);
    circ.L = 1;
    circ.M = layers;
    circ.num_params = 3 * layers;
    std::shared_ptr<const KrausChannel> noise;
    if (p > 0) {
        noise = std::make_shared<KrausChannel>(depolarizing(p));
    }
    for (int l = 0; l < layers; l++) {
        for (auto &layer : toric_unitary_layer(lat, 3 * l, noise)) {
            layer.index = l + 1;
            circ.layers.push_back(std::move(layer));
        }
    }
    return circ;
}

CircuitProgram toric_dissipative_circuit(const ToricLattice &lat, int rounds, double p) {
    if (rounds < 0) {
        throw ConfigError("round count must be nonnegative");
    }
    CircuitProgram circ;
    circ.num_qubits = lat.num_qubits() + 1;
    circ.lattice = Lattice(1, circ.num_qubits);
    circ.L = 1;
    circ.M = rounds;
    circ.num_params = 2;
    const int ancilla = lat.num_qubits();
    std::shared_ptr<const KrausChannel> noise;
    if (p > 0) {
        noise = std::make_shared<KrausChannel>(depolarizing(p));
    }
    auto verts = lat.vertices();
    auto plaqs = lat.plaquettes();
    auto vcorr = correction_qubits(verts);
    auto pcorr = correction_qubits(plaqs);
    for (int r = 0; r < rounds; r++) {
        auto emit = [&](const std::vector<Layer> &layers) {
            for (auto layer : layers) {
                layer.index = r + 1;
                circ.layers.push_back(std::move(layer));
            }
        };
        for (size_t k = 0; k < verts.size(); k++) {
            emit(toric_dissipative_jump(verts[k], vcorr[k], false, 1, ancilla, noise));
        }
        for (size_t k = 0; k < plaqs.size(); k++) {
            emit(toric_dissipative_jump(plaqs[k], pcorr[k], true, 0, ancilla, noise));
        }
    }
    return circ;
}

InitialState toric_dissipative_initial(const ToricLattice &lat) {
    std::vector<Matrix> f(static_cast<size_t>(lat.num_qubits()), 0.5 * Matrix::Identity(2, 2));
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1;
    f.push_back(zero);
    return InitialState::product(std::move(f));
}

}  // namespace dissim
