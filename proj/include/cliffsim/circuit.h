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

#ifndef CLIFFSIM_CIRCUIT_H
#define CLIFFSIM_CIRCUIT_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsim/pauli.h"

namespace cliffsim {

enum class GateKind : uint8_t { H, S, SDG, X, Y, Z, CNOT, CZ, SWAP };

const char *gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

struct CliffordGate {
    GateKind kind;
    /// For CNOT, qubits[0] is the control. Unused entries of single-qubit gates are zero.
    std::array<uint32_t, 2> qubits{};

    size_t arity() const {
        return is_two_qubit(kind) ? 2 : 1;
    }
    bool operator==(const CliffordGate &) const = default;
};

/// Hypercubic lattice with row-major qubit numbering (the last coordinate varies fastest).
struct Geometry {
    std::vector<size_t> extents;

    size_t dimension() const {
        return extents.size();
    }
    size_t num_sites() const;
    std::vector<size_t> coordinates(size_t q) const;
    size_t manhattan_distance(size_t a, size_t b) const;
    bool adjacent(size_t a, size_t b) const {
        return manhattan_distance(a, b) == 1;
    }
    bool operator==(const Geometry &) const = default;
};

/// A multi-qubit interaction used for lightcone sweeps. Single-qubit gates never appear.
struct Interaction {
    uint8_t arity;
    std::array<uint32_t, 3> qubits;
};

/// Per-layer multi-qubit gate adjacency, shared by the Clifford and IQP circuit models.
class InteractionLayers {
   public:
    InteractionLayers(size_t num_qubits, std::vector<std::vector<Interaction>> layers);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t depth() const {
        return layers_.size();
    }
    /// Interactions in layer t, 1 <= t <= depth.
    std::span<const Interaction> layer(size_t t) const {
        return layers_[t - 1];
    }
    /// Index into layer(t) of the interaction touching q, or -1.
    int32_t interaction_on(size_t t, size_t q) const {
        return owner_[(t - 1) * num_qubits_ + q];
    }

   private:
    size_t num_qubits_;
    std::vector<std::vector<Interaction>> layers_;
    std::vector<int32_t> owner_;
};

inline constexpr uint32_t kUnreached = UINT32_MAX;

/// Forward lightcone of `q`: sweeping layers 1..d, any gate touching an already reached qubit
/// reaches all its qubits. Returned sorted.
std::vector<uint32_t> forward_lightcone(const InteractionLayers &layers, size_t q);

/// Layer at which each qubit first joins the forward lightcone of `q` (0 for q itself,
/// kUnreached outside it).
std::vector<uint32_t> forward_reach_times(const InteractionLayers &layers, size_t q);

/// Bloch vector (x, y, z) of a single-qubit state or measurement axis.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 1;

    double norm() const;
    /// Component along 'X', 'Y' or 'Z'.
    double component(char pauli) const {
        return pauli == 'X' ? x : pauli == 'Y' ? y : z;
    }
    bool operator==(const BlochVector &) const = default;
};

/// Product input state given by one Bloch vector per qubit (|b| <= 1).
struct ProductState {
    std::vector<BlochVector> qubits;

    static ProductState all_zero(size_t n);
    static ProductState all_plus(size_t n);
    static ProductState all_magic(size_t n);
    /// Named single-qubit states: "|0>", "|1>", "|+>", "|->", "|+i>", "|-i>", "|A>".
    static std::optional<BlochVector> named(std::string_view name);
    void validate() const;
    bool operator==(const ProductState &) const = default;
};

/// Per-qubit Bloch axis of the outcome-0 projector U_i|0><0|U_i^dagger.
struct MeasurementBasis {
    std::vector<BlochVector> axes;

    static MeasurementBasis computational(size_t n);
    void validate() const;
    bool operator==(const MeasurementBasis &) const = default;
};

/// A layered Clifford circuit with optional lattice geometry. Immutable once constructed.
class CliffordCircuit {
   public:
    /// Validates qubit ranges, within-layer disjointness and (with geometry) nearest-neighbor
    /// two-qubit gates. Throws std::invalid_argument on violation.
    CliffordCircuit(
        size_t num_qubits, std::vector<std::vector<CliffordGate>> layers, std::optional<Geometry> geometry = {});

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t depth() const {
        return layers_.size();
    }
    /// Gates of layer t, 1 <= t <= depth.
    std::span<const CliffordGate> layer(size_t t) const {
        return layers_[t - 1];
    }
    const std::vector<std::vector<CliffordGate>> &layers() const {
        return layers_;
    }
    const std::optional<Geometry> &geometry() const {
        return geometry_;
    }
    const InteractionLayers &interactions() const {
        return interactions_;
    }
    /// Index into layer(t) of the gate touching q, or -1.
    int32_t gate_on(size_t t, size_t q) const {
        return gate_owner_[(t - 1) * num_qubits_ + q];
    }
    bool operator==(const CliffordCircuit &other) const {
        return num_qubits_ == other.num_qubits_ && layers_ == other.layers_ && geometry_ == other.geometry_;
    }

   private:
    size_t num_qubits_;
    std::vector<std::vector<CliffordGate>> layers_;
    std::optional<Geometry> geometry_;
    std::vector<int32_t> gate_owner_;
    InteractionLayers interactions_;
};

/// p <- G p G^dagger with the sign tracked.
void apply_gate(PauliString &p, const CliffordGate &gate);
/// p <- G^dagger p G.
void apply_gate_inverse(PauliString &p, const CliffordGate &gate);

/// C_upto p C_upto^dagger where C_upto applies layers 1..upto. upto = 0 is the identity.
PauliString conjugate_forward(const CliffordCircuit &c, PauliString p, size_t upto);
/// C_from^dagger p C_from. Inverse of conjugate_forward for the same index.
PauliString conjugate_backward(const CliffordCircuit &c, PauliString p, size_t from);

std::vector<uint32_t> forward_lightcone(const CliffordCircuit &c, size_t q);

/// |C_i(s)| for i = 0..depth.
std::vector<size_t> weight_profile(const CliffordCircuit &c, const PauliString &s);

/// Circuit plus the optional input and measurement blocks of a circuit file.
struct ParsedCircuit {
    CliffordCircuit circuit;
    ProductState input;
    MeasurementBasis basis;
};

/// Parses the line-oriented Clifford circuit format. Throws ParseError with the offending line.
ParsedCircuit parse_circuit(std::string_view text);
/// Inverse of parse_circuit; Bloch vectors are printed with 17 significant digits.
std::string render_circuit(const ParsedCircuit &parsed);

struct SingleQubitUnitary {
    /// Row-major 2x2 matrix.
    std::array<std::complex<double>, 4> m;

    /// U3(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]].
    static SingleQubitUnitary from_u3(double theta, double phi, double lambda);
    static SingleQubitUnitary hadamard();
    static SingleQubitUnitary identity();
    bool is_unitary(double tol = 1e-10) const;
};

/// Bloch vector of U^dagger |0><0| U.
BlochVector pulled_back_zero(const SingleQubitUnitary &u);

/// A conjugated Clifford circuit U^{(x)n} C U^{dagger (x)n} with |0...0> input and computational
/// readout is the plain Clifford circuit C with every input qubit prepared in, and every qubit
/// measured along, the Bloch vector of U^dagger|0><0|U.
ParsedCircuit canonicalize_conjugated_clifford(const SingleQubitUnitary &u, const CliffordCircuit &c);

}  // namespace cliffsim

#endif
