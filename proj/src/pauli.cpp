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

#include "dissim/pauli.hpp"

#include <algorithm>
#include <bit>

#include "dissim/error.hpp"

namespace dissim {

namespace {

Matrix single_qubit_pauli(Pauli p) {
    Matrix m = Matrix::Zero(2, 2);
    const cplx i(0, 1);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -i, i, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

// (i_power, letter) of a*b for single-qubit letters, using I,X,Y,Z = 0..3.
std::pair<int, Pauli> letter_product(Pauli a, Pauli b) {
    if (a == Pauli::I) {
        return {0, b};
    }
    if (b == Pauli::I) {
        return {0, a};
    }
    if (a == b) {
        return {0, Pauli::I};
    }
    auto ia = static_cast<int>(a);
    auto ib = static_cast<int>(b);
    auto c = static_cast<Pauli>(6 - ia - ib);
    // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? 1 : 3, c};
}

}  // namespace

PauliString PauliString::from_text(std::string_view text) {
    PauliString p;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        p.sign = text[0] == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    for (char c : text) {
        switch (c) {
            case 'I':
            case '_':
                p.letters.push_back(Pauli::I);
                break;
            case 'X':
                p.letters.push_back(Pauli::X);
                break;
            case 'Y':
                p.letters.push_back(Pauli::Y);
                break;
            case 'Z':
                p.letters.push_back(Pauli::Z);
                break;
            default:
                throw ConfigError("invalid Pauli letter '" + std::string(1, c) + "'");
        }
    }
    return p;
}

PauliString PauliString::single(int n, int site, Pauli p) {
    if (site < 0 || site >= n) {
        throw ConfigError("Pauli site out of range");
    }
    PauliString s(n);
    s.letters[site] = p;
    return s;
}

std::vector<int> PauliString::support() const {
    std::vector<int> out;
    for (int k = 0; k < num_qubits(); k++) {
        if (letters[k] != Pauli::I) {
            out.push_back(k);
        }
    }
    return out;
}

int PauliString::weight() const {
    return static_cast<int>(support().size());
}

bool PauliString::is_identity() const {
    return std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::I; });
}

std::uint64_t PauliString::basis_index() const {
    std::uint64_t k = 0;
    for (Pauli p : letters) {
        k = 4 * k + static_cast<std::uint64_t>(p);
    }
    return k;
}

PauliString PauliString::from_basis_index(int n, std::uint64_t index) {
    PauliString p(n);
    for (int k = n - 1; k >= 0; k--) {
        p.letters[k] = static_cast<Pauli>(index & 3);
        index >>= 2;
    }
    return p;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t m = 0;
    int n = num_qubits();
    for (int k = 0; k < n; k++) {
        if (letters[k] == Pauli::X || letters[k] == Pauli::Y) {
            m |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t m = 0;
    int n = num_qubits();
    for (int k = 0; k < n; k++) {
        if (letters[k] == Pauli::Z || letters[k] == Pauli::Y) {
            m |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return m;
}

int PauliString::num_y() const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), Pauli::Y));
}

Matrix PauliString::dense() const {
    Matrix m = Matrix::Identity(1, 1) * static_cast<double>(sign);
    for (Pauli p : letters) {
        m = kron(m, single_qubit_pauli(p));
    }
    return m;
}

std::string PauliString::str() const {
    std::string s = sign < 0 ? "-" : "+";
    for (Pauli p : letters) {
        s.push_back("IXYZ"[static_cast<int>(p)]);
    }
    return s;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ConfigError("Pauli size mismatch");
    }
    PauliProduct out{0, PauliString(a.num_qubits())};
    out.string.sign = a.sign * b.sign;
    for (int k = 0; k < a.num_qubits(); k++) {
        auto [ip, c] = letter_product(a.letters[k], b.letters[k]);
        out.i_power = (out.i_power + ip) % 4;
        out.string.letters[k] = c;
    }
    if (out.i_power >= 2) {
        out.i_power -= 2;
        out.string.sign = -out.string.sign;
    }
    return out;
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ConfigError("Pauli size mismatch");
    }
    int anti = 0;
    for (int k = 0; k < a.num_qubits(); k++) {
        Pauli p = a.letters[k];
        Pauli q = b.letters[k];
        if (p != Pauli::I && q != Pauli::I && p != q) {
            anti++;
        }
    }
    return anti % 2 == 0;
}

Observable::Observable(double coefficient, PauliString p) {
    add(coefficient, std::move(p));
}

void Observable::add(double coefficient, PauliString p) {
    if (!terms.empty() && terms.front().second.num_qubits() != p.num_qubits()) {
        throw ConfigError("observable term size mismatch");
    }
    coefficient *= p.sign;
    p.sign = 1;
    for (auto &[a, q] : terms) {
        if (q == p) {
            a += coefficient;
            return;
        }
    }
    terms.emplace_back(coefficient, std::move(p));
}

int Observable::num_qubits() const {
    return terms.empty() ? 0 : terms.front().second.num_qubits();
}

Matrix Observable::dense() const {
    int n = num_qubits();
    Matrix m = Matrix::Zero(std::int64_t{1} << n, std::int64_t{1} << n);
    for (const auto &[a, p] : terms) {
        m += a * p.dense();
    }
    return m;
}

double Observable::non_identity_weight() const {
    double s = 0;
    for (const auto &[a, p] : terms) {
        if (!p.is_identity()) {
            s += a * a;
        }
    }
    return s;
}

std::vector<int> Observable::support() const {
    std::vector<int> out;
    for (const auto &[a, p] : terms) {
        for (int k : p.support()) {
            out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace dissim
