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

#ifndef CLIFFSIM_RANDOM_CIRCUITS_H
#define CLIFFSIM_RANDOM_CIRCUITS_H

#include "cliffsim/circuit.h"
#include "cliffsim/rng.h"

namespace cliffsim {

/// All-to-all random circuit: each layer pairs up a random permutation of the qubits; a pair
/// becomes a random two-qubit gate with probability 1/2, otherwise each of its qubits gets a
/// random single-qubit gate (or nothing).
CliffordCircuit random_clifford_circuit(CounterRng &rng, size_t n, size_t depth);

/// 1D nearest-neighbor brickwork with "lattice 1 n" geometry. Layer t places a random CNOT
/// (either orientation) or CZ on every pair (i, i+1) with i = t+1 mod 2; uncovered end qubits
/// get a random single-qubit gate.
CliffordCircuit random_brickwork_1d(CounterRng &rng, size_t n, size_t depth);

/// Uniformly random n-qubit Pauli string with phase 0, possibly the identity.
PauliString random_pauli(CounterRng &rng, size_t n);

/// Uniformly random point on the unit sphere.
BlochVector random_unit_bloch(CounterRng &rng);
/// Random inputs: half the qubits (in expectation) pure, the rest mixed with a uniform radius.
ProductState random_product_state(CounterRng &rng, size_t n);
MeasurementBasis random_measurement_basis(CounterRng &rng, size_t n);

/// Random U3 angles; the result is always unitary.
SingleQubitUnitary random_single_qubit_unitary(CounterRng &rng);

}  // namespace cliffsim

#endif
