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

#ifndef CLIFFSIM_IQP_CIRCUIT_H
#define CLIFFSIM_IQP_CIRCUIT_H

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/rng.h"

namespace cliffsim {

enum class IqpGateKind : uint8_t { Phase, CPhase, CCZ, CNOT };

struct IqpGate {
    IqpGateKind kind;
    /// Rotation angle in radians for Phase and CPhase: diag(1, e^{i theta}) and diag(1, 1, 1, e^{i theta}).
    double theta = 0;
    /// For CNOT, qubits[0] is the control.
    std::array<uint32_t, 3> qubits{};

    size_t arity() const {
        return kind == IqpGateKind::Phase ? 1 : kind == IqpGateKind::CCZ ? 3 : 2;
    }
    bool operator==(const IqpGate &) const = default;
};

/// Diagonal gates plus CNOTs, prepared and measured in the Hadamard basis.
class IqpCircuit {
   public:
    /// Validates qubit ranges, within-layer disjointness and, with geometry, that every
    /// multi-qubit gate acts on a connected set of lattice sites.
    IqpCircuit(size_t num_qubits, std::vector<std::vector<IqpGate>> layers, std::optional<Geometry> geometry = {});

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t depth() const {
        return layers_.size();
    }
    /// Gates of layer t, 1 <= t <= depth.
    std::span<const IqpGate> layer(size_t t) const {
        return layers_[t - 1];
    }
    const std::vector<std::vector<IqpGate>> &layers() const {
        return layers_;
    }
    const std::optional<Geometry> &geometry() const {
        return geometry_;
    }
    const InteractionLayers &interactions() const {
        return interactions_;
    }
    bool operator==(const IqpCircuit &other) const {
        return num_qubits_ == other.num_qubits_ && layers_ == other.layers_ && geometry_ == other.geometry_;
    }

   private:
    size_t num_qubits_;
    std::vector<std::vector<IqpGate>> layers_;
    std::optional<Geometry> geometry_;
    InteractionLayers interactions_;
};

/// Same framing as the Clifford format with gate lines PHASE theta q, T q, CPHASE theta a b,
/// CZ a b, CCZ a b c and CNOT a b. Throws ParseError.
IqpCircuit parse_iqp_circuit(std::string_view text);
std::string render_iqp_circuit(const IqpCircuit &c);

/// Random layered circuit: qubits are paired or grouped at random; each group gets a random
/// CNOT, CPHASE or CCZ, and leftover qubits a random PHASE. Angles are multiples of pi/8.
IqpCircuit random_iqp_circuit(CounterRng &rng, size_t n, size_t depth);

}  // namespace cliffsim

#endif
