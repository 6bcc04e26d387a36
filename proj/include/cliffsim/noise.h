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

#ifndef CLIFFSIM_NOISE_H
#define CLIFFSIM_NOISE_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/gf2.h"
#include "cliffsim/pauli.h"
#include "cliffsim/rng.h"

namespace cliffsim {

/// Single-qubit noise applied to every qubit before layer 1 and after every layer.
struct NoiseModel {
    enum class Kind : uint8_t { Depolarizing, Pauli };
    Kind kind = Kind::Depolarizing;
    /// Depolarizing strength: rho -> (1 - gamma) rho + gamma I/2.
    double gamma = 0;
    /// Pauli channel: rho -> (1 - px - py - pz) rho + px XrhoX + py YrhoY + pz ZrhoZ.
    double px = 0;
    double py = 0;
    double pz = 0;

    static NoiseModel depolarizing(double gamma);
    static NoiseModel pauli(double px, double py, double pz);
    /// "depolarizing:G" or "pauli:PX,PY,PZ". Throws std::invalid_argument.
    static NoiseModel parse(std::string_view spec);
    /// Run-config form: "noise depolarizing 0.1" or "noise pauli 0.02 0.01 0.05".
    static NoiseModel parse_config_line(std::string_view line);

    void validate() const;
    /// The same channel written as a Pauli channel (depolarizing gamma has px = py = pz = gamma/4).
    NoiseModel as_pauli_channel() const;
    std::string str() const;
};

/// What fired at a noise site.
///
/// Depolarize is the Clifford-path event (both Pi_X and Pi_Z). The others come from
/// decompose_pauli_channel for the IQP path: an in-place X, deterministic Z or Y, a Z projection
/// Pi_Z, or Pi_Z followed by X.
enum class NoiseEvent : uint8_t { Depolarize, XInPlace, ZDet, YDet, ProjZ, XProjZ };

const char *noise_event_name(NoiseEvent event);

struct NoiseSite {
    /// Noise layer: 0 acts on the input, t >= 1 follows gate layer t.
    uint32_t layer;
    uint32_t qubit;
    NoiseEvent event;
    bool operator==(const NoiseSite &) const = default;
};

/// A sampled noise realization b. Sites are sorted by (layer, qubit) and distinct.
struct ErrorConfiguration {
    size_t num_qubits = 0;
    /// Number of gate layers d; noise layers run over 0..d.
    size_t depth = 0;
    std::vector<NoiseSite> sites;

    size_t num_noise_layers() const {
        return depth + 1;
    }
    void validate() const;
};

/// Probabilities of the six events {identity, X in place, Z det, Y det, Pi_Z, X Pi_Z}.
struct ChannelMixture {
    enum Index { kIdentity, kX, kZ, kY, kProjZ, kXProjZ };
    std::array<double, 6> probs{};
};

/// Exact decomposition of a Pauli channel into the six events, with projector mass extracted
/// greedily: 2 min(pI, pZ) as Pi_Z and 2 min(pX, pY) as X Pi_Z. Throws std::invalid_argument on
/// negative probabilities or a total above 1.
ChannelMixture decompose_pauli_channel(double px, double py, double pz);

/// Pauli probabilities (pI, pX, pY, pZ) of the channel induced by a mixture.
std::array<double, 4> pauli_probabilities(const ChannelMixture &mixture);

/// Three readings of the effective projector rate of a Pauli channel for the IQP path.
struct IqpNoiseRates {
    /// pZ + min(pY, pZ) as printed.
    double printed_formula;
    /// pZ + min(pX, pY), the reading under which the formula counts Pi_Z-carrying mass symmetrically.
    double symmetric_reading;
    /// Probability that the sampled event contains Pi_Z under decompose_pauli_channel.
    double projector_rate;
};
IqpNoiseRates iqp_noise_rates(double px, double py, double pz);

/// Samples each of the (layers)·n sites independently. Depolarizing models emit Depolarize
/// events with probability gamma; Pauli models draw an event from decompose_pauli_channel.
/// Exactly one uniform draw is consumed per site, in (layer, qubit) order.
ErrorConfiguration sample_error_configuration(CounterRng &rng, size_t n, size_t depth, const NoiseModel &model);

/// M_b: phaseless generators and their tableau matrix (rows are symplectic vectors).
struct PropagatedErrorSet {
    size_t num_qubits = 0;
    std::vector<PauliString> generators;
    Gf2Matrix tableau;

    explicit PropagatedErrorSet(size_t n = 0) : num_qubits(n), tableau(2 * n) {
    }
    void add(PauliString p);
};

/// For each Depolarize site (t, i), adds C_t^dagger(X_i) and C_t^dagger(Z_i) with phases dropped.
PropagatedErrorSet propagate_errors(const CliffordCircuit &c, const ErrorConfiguration &b);

/// (1 - gamma)^{sum_i |C_i(s)|} over the d+1 noise layers.
double survival_probability(const CliffordCircuit &c, const PauliString &s, double gamma);

}  // namespace cliffsim

#endif
