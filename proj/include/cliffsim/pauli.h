// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_PAULI_H
#define CLIFFSIM_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsim/gf2.h"

namespace cliffsim {

/// An n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit q carries X when only xs[q] is set, Z when only zs[q] is set, and Y when both are set.
/// With this convention a Hermitian string has phase 0 (sign +1) or 2 (sign -1).
struct PauliString {
    BitVector xs;
    BitVector zs;
    uint8_t phase = 0;

    PauliString() = default;
    /// The identity on n qubits.
    explicit PauliString(size_t n) : xs(n), zs(n) {
    }

    /// Parses "+XIZY", "-iXZ", "iY", "_" for identity, etc. Without a prefix the sign is +1.
    static PauliString from_str(std::string_view text);
    /// A single X, Y or Z (given as 'X', 'Y', 'Z') on qubit q of an n-qubit register.
    static PauliString single(size_t n, size_t q, char pauli);

    size_t num_qubits() const {
        return xs.size();
    }
    /// 'I', 'X', 'Y' or 'Z' at qubit q.
    char at(size_t q) const;
    /// Sets qubit q to 'I', 'X', 'Y' or 'Z' without touching the phase.
    void set(size_t q, char pauli);
    bool is_identity() const {
        return xs.none() && zs.none();
    }
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    /// -1 or +1 for Hermitian strings.
    int sign() const {
        return phase == 2 ? -1 : 1;
    }

    PauliString &operator*=(const PauliString &rhs);
    friend PauliString operator*(PauliString lhs, const PauliString &rhs) {
        return lhs *= rhs;
    }
    bool operator==(const PauliString &other) const = default;

    /// Text form such as "+XIZY" or "-iZZ".
    std::string str() const;
};

/// (x_0..x_{n-1}, z_0..z_{n-1}); the phase is discarded.
BitVector symplectic_vector(const PauliString &p);

/// The phase-0 string with the given symplectic vector (so 11 on one qubit maps to +Y).
PauliString hermitian_from_symplectic(const BitVector &v);

/// Symplectic inner product test. Throws std::invalid_argument on a size mismatch.
bool commutes(const PauliString &p, const PauliString &q);

PauliString multiply(const PauliString &p, const PauliString &q);

size_t weight(const PauliString &p);
std::vector<size_t> support(const PauliString &p);

/// Exponent k such that the product of single-qubit factors (x1,z1)(x2,z2), taken word by word,
/// picks up i^k. Only the low two bits are meaningful.
uint8_t product_phase(
    std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
    std::span<const uint64_t> z2);

}  // namespace cliffsim

#endif
