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

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cliffsim/clifford_sampler.h"

namespace cliffsim {

BackwardImageTable::BackwardImageTable(const CliffordCircuit &c)
    : num_qubits_(c.num_qubits()), depth_(c.depth()), meta_((c.depth() + 1) * c.num_qubits() * 2) {
    size_t n = num_qubits_;
    for (size_t q = 0; q < n; q++) {
        for (size_t z = 0; z < 2; z++) {
            size_t bit = 2 * q + z;
            meta_[q * 2 + z] = Meta{static_cast<uint32_t>(pool_.size()), static_cast<uint32_t>(bit >> 6), 1};
            pool_.push_back(uint64_t{1} << (bit & 63));
        }
    }

    std::vector<uint64_t> buf;
    std::vector<Row> parts;
    for (size_t t = 1; t <= depth_; t++) {
        std::copy(
            meta_.begin() + (t - 1) * n * 2, meta_.begin() + t * n * 2, meta_.begin() + t * n * 2);
        for (const CliffordGate &g : c.layer(t)) {
            size_t arity = g.arity();
            CliffordGate local{g.kind, {0, 1}};
            for (size_t a = 0; a < arity; a++) {
                for (size_t z = 0; z < 2; z++) {
                    // U_t^dagger P U_t is a product of single-qubit factors on the gate's qubits.
                    PauliString p(arity);
                    p.set(a, z ? 'Z' : 'X');
                    apply_gate_inverse(p, local);
                    parts.clear();
                    for (size_t k = 0; k < arity; k++) {
                        if (p.xs[k]) {
                            parts.push_back(image(t - 1, g.qubits[k], false));
                        }
                        if (p.zs[k]) {
                            parts.push_back(image(t - 1, g.qubits[k], true));
                        }
                    }
                    size_t lo = SIZE_MAX;
                    size_t hi = 0;
                    for (const Row &r : parts) {
                        lo = std::min(lo, r.first_word);
                        hi = std::max(hi, r.first_word + r.words.size());
                    }
                    buf.assign(hi - lo, 0);
                    for (const Row &r : parts) {
                        for (size_t w = 0; w < r.words.size(); w++) {
                            buf[r.first_word - lo + w] ^= r.words[w];
                        }
                    }
                    size_t b = 0;
                    size_t e = buf.size();
                    while (b < e && buf[b] == 0) {
                        b++;
                    }
                    while (e > b && buf[e - 1] == 0) {
                        e--;
                    }
                    if (b == e) {
                        throw std::logic_error("a unitary mapped a Pauli to the identity");
                    }
                    meta_[(t * n + g.qubits[a]) * 2 + z] = Meta{
                        static_cast<uint32_t>(pool_.size()), static_cast<uint32_t>(lo + b),
                        static_cast<uint32_t>(e - b)};
                    pool_.insert(pool_.end(), buf.begin() + b, buf.begin() + e);
                }
            }
        }
    }
}

PauliString BackwardImageTable::image_pauli(size_t t, size_t q, bool z_part) const {
    PauliString p(num_qubits_);
    Row r = image(t, q, z_part);
    for (size_t w = 0; w < r.words.size(); w++) {
        uint64_t bits = r.words[w];
        while (bits) {
            size_t col = ((r.first_word + w) << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            if (col & 1) {
                p.zs.set(col >> 1, true);
            } else {
                p.xs.set(col >> 1, true);
            }
        }
    }
    return p;
}

}  // namespace cliffsim
