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

#include "cliffsim/pauli.h"

#include <bit>
#include <stdexcept>

namespace cliffsim {

uint8_t product_phase(
    std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
    std::span<const uint64_t> z2) {
    // Per qubit: XY = iZ, YZ = iX, ZX = iY pick up +i; the reversed orders pick up -i.
    int64_t total = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        uint64_t a_x = x1[w] & ~z1[w];
        uint64_t a_y = x1[w] & z1[w];
        uint64_t a_z = ~x1[w] & z1[w];
        uint64_t b_x = x2[w] & ~z2[w];
        uint64_t b_y = x2[w] & z2[w];
        uint64_t b_z = ~x2[w] & z2[w];
        uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        total += std::popcount(plus);
        total -= std::popcount(minus);
    }
    return static_cast<uint8_t>(((total % 4) + 4) % 4);
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && text[0] == '+') {
        text.remove_prefix(1);
    } else if (!text.empty() && text[0] == '-') {
        phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.phase = phase;
    for (size_t q = 0; q < text.size(); q++) {
        char c = text[q];
        if (c == '_') {
            c = 'I';
        }
        result.set(q, c);
    }
    return result;
}

PauliString PauliString::single(size_t n, size_t q, char pauli) {
    PauliString result(n);
    result.set(q, pauli);
    return result;
}

char PauliString::at(size_t q) const {
    bool x = xs.get(q);
    bool z = zs.get(q);
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    return z ? 'Z' : 'I';
}

void PauliString::set(size_t q, char pauli) {
    switch (pauli) {
        case 'I':
            xs.set(q, false);
            zs.set(q, false);
            break;
        case 'X':
            xs.set(q, true);
            zs.set(q, false);
            break;
        case 'Y':
            xs.set(q, true);
            zs.set(q, true);
            break;
        case 'Z':
            xs.set(q, false);
            zs.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli: '") + pauli + "'");
    }
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli string size mismatch");
    }
    uint8_t extra = product_phase(xs.words(), zs.words(), rhs.xs.words(), rhs.zs.words());
    phase = (phase + rhs.phase + extra) & 3;
    xs ^= rhs.xs;
    zs ^= rhs.zs;
    return *this;
}

std::string PauliString::str() const {
    static const char *prefixes[] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase & 3];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += at(q);
    }
    return out;
}

BitVector symplectic_vector(const PauliString &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q = p.xs.find_first(); q < n; q = p.xs.find_next(q + 1)) {
        v.set(q, true);
    }
    for (size_t q = p.zs.find_first(); q < n; q = p.zs.find_next(q + 1)) {
        v.set(n + q, true);
    }
    return v;
}

PauliString hermitian_from_symplectic(const BitVector &v) {
    if (v.size() % 2) {
        throw std::invalid_argument("symplectic vector must have even length");
    }
    size_t n = v.size() / 2;
    PauliString p(n);
    for (size_t k = v.find_first(); k < v.size(); k = v.find_next(k + 1)) {
        if (k < n) {
            p.xs.set(k, true);
        } else {
            p.zs.set(k - n, true);
        }
    }
    return p;
}

bool commutes(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli string size mismatch");
    }
    return dot(p.xs, q.zs) == dot(p.zs, q.xs);
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    return p * q;
}

size_t weight(const PauliString &p) {
    return (p.xs | p.zs).popcount();
}

std::vector<size_t> support(const PauliString &p) {
    BitVector s = p.xs;
    s |= p.zs;
    std::vector<size_t> out;
    for (size_t q = s.find_first(); q < s.size(); q = s.find_next(q + 1)) {
        out.push_back(q);
    }
    return out;
}

}  // namespace cliffsim
