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

#include "cliffsim/random_circuits.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cliffsim {

namespace {

constexpr GateKind kSingleQubitKinds[] = {
    GateKind::H, GateKind::S, GateKind::SDG, GateKind::X, GateKind::Y, GateKind::Z};

void add_random_single(CounterRng &rng, std::vector<CliffordGate> &layer, uint32_t q) {
    // One extra slot leaves the qubit idle.
    uint64_t k = rng.below(std::size(kSingleQubitKinds) + 1);
    if (k < std::size(kSingleQubitKinds)) {
        layer.push_back(CliffordGate{kSingleQubitKinds[k], {q, 0}});
    }
}

}  // namespace

CliffordCircuit random_clifford_circuit(CounterRng &rng, size_t n, size_t depth) {
    std::vector<std::vector<CliffordGate>> layers(depth);
    std::vector<uint32_t> perm(n);
    for (auto &layer : layers) {
        for (size_t k = 0; k < n; k++) {
            perm[k] = static_cast<uint32_t>(k);
        }
        for (size_t k = n; k > 1; k--) {
            std::swap(perm[k - 1], perm[rng.below(k)]);
        }
        size_t k = 0;
        for (; k + 1 < n; k += 2) {
            uint32_t a = perm[k];
            uint32_t b = perm[k + 1];
            if (rng.bit()) {
                static constexpr GateKind two[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
                layer.push_back(CliffordGate{two[rng.below(3)], {a, b}});
            } else {
                add_random_single(rng, layer, a);
                add_random_single(rng, layer, b);
            }
        }
        if (k < n) {
            add_random_single(rng, layer, perm[k]);
        }
    }
    return CliffordCircuit(n, std::move(layers));
}

CliffordCircuit random_brickwork_1d(CounterRng &rng, size_t n, size_t depth) {
    std::vector<std::vector<CliffordGate>> layers(depth);
    for (size_t t = 0; t < depth; t++) {
        auto &layer = layers[t];
        size_t start = t % 2;
        if (start == 1) {
            add_random_single(rng, layer, 0);
        }
        size_t i = start;
        for (; i + 1 < n; i += 2) {
            uint32_t a = static_cast<uint32_t>(i);
            uint32_t b = a + 1;
            switch (rng.below(3)) {
                case 0:
                    layer.push_back(CliffordGate{GateKind::CNOT, {a, b}});
                    break;
                case 1:
                    layer.push_back(CliffordGate{GateKind::CNOT, {b, a}});
                    break;
                default:
                    layer.push_back(CliffordGate{GateKind::CZ, {a, b}});
                    break;
            }
        }
        if (i < n) {
            add_random_single(rng, layer, static_cast<uint32_t>(i));
        }
    }
    return CliffordCircuit(n, std::move(layers), Geometry{{n}});
}

PauliString random_pauli(CounterRng &rng, size_t n) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.xs.set(q, rng.bit());
        p.zs.set(q, rng.bit());
    }
    return p;
}

BlochVector random_unit_bloch(CounterRng &rng) {
    double z = 2 * rng.uniform() - 1;
    double phi = 2 * std::numbers::pi * rng.uniform();
    double r = std::sqrt(std::max(0.0, 1 - z * z));
    return BlochVector{r * std::cos(phi), r * std::sin(phi), z};
}

ProductState random_product_state(CounterRng &rng, size_t n) {
    ProductState s;
    for (size_t q = 0; q < n; q++) {
        BlochVector b = random_unit_bloch(rng);
        if (rng.bit()) {
            double r = rng.uniform();
            b = {b.x * r, b.y * r, b.z * r};
        }
        s.qubits.push_back(b);
    }
    return s;
}

MeasurementBasis random_measurement_basis(CounterRng &rng, size_t n) {
    MeasurementBasis m;
    for (size_t q = 0; q < n; q++) {
        m.axes.push_back(random_unit_bloch(rng));
    }
    return m;
}

SingleQubitUnitary random_single_qubit_unitary(CounterRng &rng) {
    double theta = std::acos(1 - 2 * rng.uniform());
    double phi = 2 * std::numbers::pi * rng.uniform();
    double lambda = 2 * std::numbers::pi * rng.uniform();
    return SingleQubitUnitary::from_u3(theta, phi, lambda);
}

}  // namespace cliffsim
