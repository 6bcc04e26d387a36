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

#ifndef CLIFFSIM_ORACLE_H
#define CLIFFSIM_ORACLE_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/iqp_circuit.h"
#include "cliffsim/noise.h"
#include "cliffsim/pauli.h"

namespace cliffsim {

using Complex = std::complex<double>;

/// Largest qubit count accepted by the dense simulators.
inline constexpr size_t kMaxDenseQubits = 12;

/// Dense 2^n x 2^n density matrix. Basis index bit q holds qubit q.
class DensityMatrix {
   public:
    explicit DensityMatrix(size_t num_qubits);

    static DensityMatrix from_product(const ProductState &state);
    static DensityMatrix from_pure(std::span<const Complex> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return dim_;
    }
    Complex &at(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &at(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }

    /// rho -> U rho U^dagger for a k-qubit U (k <= 3) given row-major. Local index bit j holds qubits[j].
    void apply_unitary(std::span<const size_t> qubits, std::span<const Complex> u);
    void apply_gate(const CliffordGate &gate);
    void apply_gate(const IqpGate &gate);
    /// rho -> P rho P for P in {X, Y, Z}.
    void apply_pauli(size_t q, char pauli);
    /// rho -> (rho + P rho P) / 2.
    void project_pauli(size_t q, char pauli);
    /// Replaces the factor on qubit q by I/2.
    void maximally_mix(size_t q);
    void apply_channel(size_t q, const NoiseModel &model);
    void apply_event(size_t q, NoiseEvent event);

    Complex trace() const;
    double hermiticity_error() const;
    /// Diagonal of the matrix after rotating every qubit so that outcome 0 projects onto its axis.
    std::vector<double> measure(const MeasurementBasis &basis) const;
    std::vector<double> diagonal() const;

   private:
    size_t num_qubits_;
    size_t dim_;
    std::vector<Complex> data_;
};

/// 2x2 matrices, row-major.
std::array<Complex, 4> pauli_matrix_1q(char pauli);
/// The 2x2 unitary W with W|0> = cos(t/2)|0> + e^{i f} sin(t/2)|1>, for axis (t, f).
std::array<Complex, 4> rotation_to_axis(const BlochVector &axis);
/// Dense 2^n x 2^n matrix of p including its phase, row-major.
std::vector<Complex> dense_pauli(const PauliString &p);

/// Output distribution Tr(F_x C~(rho)). Without a configuration every noise layer applies the
/// full channel; with one, exactly the listed events act and all other sites are noiseless.
std::vector<double> exact_noisy_distribution(
    const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const NoiseModel &model,
    const ErrorConfiguration *config = nullptr);

/// As exact_noisy_distribution for |+>^n input and Hadamard-basis readout.
std::vector<double> exact_iqp_distribution(
    const IqpCircuit &c, const NoiseModel &model, const ErrorConfiguration *config = nullptr);

/// Conjugated Clifford circuit simulated directly: U^dagger on every qubit of |0..0>, the noisy
/// circuit, U on every qubit, computational readout.
std::vector<double> exact_ccc_distribution(
    const SingleQubitUnitary &u, const CliffordCircuit &c, const NoiseModel &model,
    const ErrorConfiguration *config = nullptr);

/// Noiseless pure-state evolution of an IQP+CNOT circuit with X gates at the given sites.
std::vector<Complex> iqp_state_vector(
    const IqpCircuit &c, std::vector<Complex> psi, std::span<const NoiseSite> x_events = {});

struct Tvd {
    double l1;
    double half;
};
Tvd tvd(std::span<const double> p, std::span<const double> q);

struct SwCensus {
    size_t count = 0;
    double bound = 0;
    size_t layers = 0;
    bool within_bound() const {
        return static_cast<double>(count) <= bound;
    }
};
/// Counts strings s with min_i |C_i(s)| = w whose images C_0(s)..C_d(s) are all supported in A.
/// The bound is (d + 1) * binom(|A|, w) * 3^w.
SwCensus enumerate_S_w(const CliffordCircuit &c, std::span<const uint32_t> region, size_t w);

/// E_y sum_x p_y(x)^2 over computational input states |y>, with the full noise channel.
double collision_probability(const CliffordCircuit &c, const NoiseModel &model, const MeasurementBasis &basis);

/// 2^-n [1 + (1-g)^L L exp(3 (1-g)^L n)] for L noise layers.
double anticoncentration_bound(size_t n, size_t layers, double gamma);

}  // namespace cliffsim

#endif
