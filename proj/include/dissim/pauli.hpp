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

#ifndef DISSIM_PAULI_HPP
#define DISSIM_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A tensor product of single-qubit Paulis with a real sign.
///
/// Site 0 is the leftmost tensor factor and the most significant bit of the
/// computational-basis index.
struct PauliString {
    int sign = 1;
    std::vector<Pauli> letters;

    PauliString() = default;
    explicit PauliString(int n) : letters(static_cast<size_t>(n), Pauli::I) {}

    /// Parses "XIZ" or "-XIZ".
    static PauliString from_text(std::string_view text);
    /// Single non-identity letter on `site`.
    static PauliString single(int n, int site, Pauli p);

    int num_qubits() const { return static_cast<int>(letters.size()); }
    std::vector<int> support() const;
    int weight() const;
    bool is_identity() const;
    /// Index in the Pauli basis, base 4 with site 0 most significant.
    std::uint64_t basis_index() const;
    static PauliString from_basis_index(int n, std::uint64_t index);

    /// Bit masks over basis indices: letters X/Y flip, letters Z/Y phase.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    int num_y() const;

    Matrix dense() const;
    std::string str() const;

    bool operator==(const PauliString &other) const = default;
};

struct PauliProduct {
    /// Phase as a power of i (0..3); the product is i^phase * (signs) * string.
    int i_power;
    PauliString string;
};

PauliProduct multiply(const PauliString &a, const PauliString &b);
bool commutes(const PauliString &a, const PauliString &b);

/// Sum_k a_k P_k with real coefficients and pairwise distinct strings.
struct Observable {
    std::vector<std::pair<double, PauliString>> terms;

    Observable() = default;
    Observable(double coefficient, PauliString p);

    void add(double coefficient, PauliString p);
    int num_qubits() const;
    Matrix dense() const;
    /// Sum of squared coefficients of non-identity terms.
    double non_identity_weight() const;
    std::vector<int> support() const;
};

}  // namespace dissim

#endif
