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

#ifndef CLIFFSIM_IQP_SAMPLER_H
#define CLIFFSIM_IQP_SAMPLER_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cliffsim/clifford_sampler.h"
#include "cliffsim/gf2.h"
#include "cliffsim/iqp_circuit.h"
#include "cliffsim/noise.h"
#include "cliffsim/rng.h"

namespace cliffsim {

/// Adds C_t^dagger(Z_i) for every site carrying Pi_Z (events ProjZ and XProjZ). Only CNOTs act
/// on Z strings: backwards, Z on the target picks up Z on the control.
PropagatedErrorSet propagate_z_errors(const IqpCircuit &c, const ErrorConfiguration &b);

/// Input sign flips from deterministic Z and Y events: bit q is set when the input factor of
/// qubit q turns from |+> into |->.
BitVector input_sign_flips(const IqpCircuit &c, const ErrorConfiguration &b);

/// Qubit i is depolarized iff e_i lies in the row space of the Z parts.
std::vector<uint8_t> depolarized_qubits_z(const PropagatedErrorSet &m);

/// X-type strings commuting with every generator: the nullspace of the Z-part matrix (n columns).
Gf2Matrix centralizer_x_basis(const PropagatedErrorSet &m, size_t n);

/// Column operations turning the X-part matrix of an independent group G into [I | 0].
///
/// Add(i <- i + j) is CNOT with control j and target i, Swap is SWAP. If W is the circuit of
/// those gates, W s W^dagger = X_k for the k-th generator, so the uniform mixture over <G> becomes
/// a product of |+>/|-> on the first |G| qubits and computational-basis states on the rest.
struct IqpConverter {
    size_t num_qubits = 0;
    size_t rank = 0;
    std::vector<ColumnOp> ops;

    /// f: bit action of W^dagger (the ops applied in reverse order).
    void apply(std::span<uint64_t> bits) const;
    uint64_t apply(uint64_t bits) const;
};
/// Throws std::invalid_argument when the rows of g are dependent.
IqpConverter iqp_converter(const Gf2Matrix &g);

/// Pure state stored as (basis string, amplitude) pairs.
class SparseState {
   public:
    explicit SparseState(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amps_.size();
    }
    size_t words_per_key() const {
        return words_;
    }
    std::span<const uint64_t> key(size_t k) const {
        return {keys_.data() + k * words_, words_};
    }
    std::complex<double> amplitude(size_t k) const {
        return amps_[k];
    }
    void push(std::span<const uint64_t> key, std::complex<double> amp);

    void apply_phase(size_t q, double theta);
    void apply_cphase(size_t a, size_t b, double theta);
    void apply_ccz(size_t a, size_t b, size_t c);
    void apply_cnot(size_t control, size_t target);
    void apply_x(size_t q);
    double norm_squared() const;
    /// Sorts entries by key read as a big integer; entries sharing their high bits become contiguous.
    void sort();

    /// Dense amplitude vector (bit q of the index is qubit q). n <= 20.
    std::vector<std::complex<double>> dense() const;
    /// Hadamard-basis outcome distribution; bit q of the index is the outcome of qubit q. n <= 16.
    std::vector<double> hadamard_distribution() const;
    /// Measures qubits 0, 1, ... in the Hadamard basis from conditional marginals.
    std::vector<uint8_t> sample_hadamard(CounterRng &rng);

   private:
    bool bit(size_t entry, size_t q) const {
        return (keys_[entry * words_ + (q >> 6)] >> (q & 63)) & 1;
    }
    void flip(size_t entry, size_t q) {
        keys_[entry * words_ + (q >> 6)] ^= uint64_t{1} << (q & 63);
    }

    size_t num_qubits_;
    size_t words_;
    std::vector<uint64_t> keys_;
    std::vector<std::complex<double>> amps_;
};

/// psi_r: amplitude (-1)^{sigma . i} / sqrt(2^{|G|}) on key f(i | r << |G|) for every prefix
/// i in {0,1}^{|G|}. `sigma[k]` is the sign bit of the k-th generator and `r` has
/// num_qubits - rank bits.
SparseState converter_state(const IqpConverter &conv, std::span<const uint8_t> sigma, std::span<const uint8_t> r);

/// Applies the gate layers of c to psi with an X gate inserted at every listed (layer, qubit).
/// Noise layer t follows gate layer t; noise layer 0 precedes layer 1. Sites must be sorted.
void evolve_sparse_state(const IqpCircuit &c, SparseState &psi, std::span<const NoiseSite> x_events);

/// Flags, components and X-type bases G_j for a fixed configuration.
struct IqpPlan {
    std::vector<uint8_t> depolarized;
    std::vector<Component> components;
    /// G_j over the component's qubits in local order (|L_j| columns).
    std::vector<Gf2Matrix> generators;
    std::vector<uint32_t> outside;
    BitVector flips;
    /// Sites that put an X gate into the circuit (XInPlace, YDet, XProjZ).
    std::vector<NoiseSite> x_events;

    size_t num_depolarized() const;
};

/// Exact sampler for noisy IQP+CNOT circuits with |+> inputs and Hadamard-basis readout.
class IqpSampler {
   public:
    /// Depolarizing models are sampled through their Pauli-channel form.
    IqpSampler(IqpCircuit circuit, NoiseModel model, SamplerOptions options = {});

    const IqpCircuit &circuit() const {
        return circuit_;
    }
    ErrorConfiguration sample_configuration(CounterRng &rng) const;
    IqpPlan plan_for(const ErrorConfiguration &b) const;
    /// Full 2^n distribution conditioned on b, enumerating every r. n <= 16.
    std::vector<double> distribution_for(const ErrorConfiguration &b) const;
    ShotResult sample(CounterRng &rng) const;

   private:
    /// Sub-circuit on the component qubits (local indices) and its X events.
    IqpCircuit local_circuit(const Component &comp) const;
    std::vector<NoiseSite> local_x_events(const IqpPlan &plan, const Component &comp) const;
    std::vector<uint8_t> local_sigma(const IqpPlan &plan, size_t j) const;

    IqpCircuit circuit_;
    NoiseModel model_;
    SamplerOptions options_;
};

}  // namespace cliffsim

#endif
