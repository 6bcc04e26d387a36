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

#include "cliffsim/noise.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cliffsim/oracle.h"
#include "cliffsim/random_circuits.h"

namespace cliffsim {
namespace {

CliffordGate cnot(uint32_t c, uint32_t t) {
    return CliffordGate{GateKind::CNOT, {c, t}};
}

TEST(Noise, model_parsing) {
    NoiseModel d = NoiseModel::parse("depolarizing:0.1");
    EXPECT_EQ(d.kind, NoiseModel::Kind::Depolarizing);
    EXPECT_DOUBLE_EQ(d.gamma, 0.1);
    NoiseModel p = NoiseModel::parse("pauli:0.02,0.01,0.05");
    EXPECT_EQ(p.kind, NoiseModel::Kind::Pauli);
    EXPECT_DOUBLE_EQ(p.py, 0.01);
    EXPECT_DOUBLE_EQ(NoiseModel::parse_config_line("noise depolarizing 0.25").gamma, 0.25);
    EXPECT_DOUBLE_EQ(NoiseModel::parse_config_line("noise pauli 0.02 0.01 0.05").pz, 0.05);
    EXPECT_EQ(NoiseModel::parse(d.str()).gamma, d.gamma);
    EXPECT_EQ(NoiseModel::parse(p.str()).pz, p.pz);
    EXPECT_THROW(NoiseModel::parse("depolarizing:1.5"), std::invalid_argument);
    EXPECT_THROW(NoiseModel::parse("pauli:0.5,0.5,0.5"), std::invalid_argument);
    EXPECT_THROW(NoiseModel::parse("amplitude:0.1"), std::invalid_argument);
    EXPECT_THROW(NoiseModel::parse_config_line("noise depolarizing"), std::invalid_argument);
}

TEST(Noise, sample_extremes) {
    CounterRng rng(31);
    EXPECT_TRUE(sample_error_configuration(rng, 5, 3, NoiseModel::depolarizing(0)).sites.empty());
    ErrorConfiguration all = sample_error_configuration(rng, 5, 3, NoiseModel::depolarizing(1));
    EXPECT_EQ(all.sites.size(), 20u);
    std::set<std::pair<uint32_t, uint32_t>> distinct;
    for (const NoiseSite &s : all.sites) {
        distinct.insert({s.layer, s.qubit});
        EXPECT_LE(s.layer, 3u);
    }
    EXPECT_EQ(distinct.size(), 20u);
    EXPECT_EQ(all.num_noise_layers(), 4u);
}

TEST(Noise, site_frequency_is_binomial) {
    CounterRng rng(32);
    size_t draws = 10000;
    size_t sites = 21 * 20;
    size_t hits = 0;
    for (size_t k = 0; k < draws; k++) {
        hits += sample_error_configuration(rng, 20, 20, NoiseModel::depolarizing(0.3)).sites.size();
    }
    double total = static_cast<double>(draws * sites);
    double sigma = std::sqrt(0.3 * 0.7 / total);
    EXPECT_NEAR(static_cast<double>(hits) / total, 0.3, 3 * sigma);
}

TEST(Noise, pauli_event_frequencies_match_mixture) {
    CounterRng rng(33);
    ChannelMixture m = decompose_pauli_channel(0.05, 0.1, 0.15);
    std::array<size_t, 6> counts{};
    size_t total = 0;
    for (size_t k = 0; k < 5000; k++) {
        for (const NoiseSite &s : sample_error_configuration(rng, 10, 9, NoiseModel::pauli(0.05, 0.1, 0.15)).sites) {
            counts[static_cast<size_t>(s.event)]++;
        }
        total += 100;
    }
    std::pair<NoiseEvent, ChannelMixture::Index> pairs[] = {
        {NoiseEvent::XInPlace, ChannelMixture::kX}, {NoiseEvent::ZDet, ChannelMixture::kZ},
        {NoiseEvent::YDet, ChannelMixture::kY},     {NoiseEvent::ProjZ, ChannelMixture::kProjZ},
        {NoiseEvent::XProjZ, ChannelMixture::kXProjZ},
    };
    for (auto [event, index] : pairs) {
        double p = m.probs[index];
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(total));
        EXPECT_NEAR(static_cast<double>(counts[static_cast<size_t>(event)]) / static_cast<double>(total), p,
                    3 * sigma + 1e-12)
            << noise_event_name(event);
    }
    EXPECT_EQ(counts[static_cast<size_t>(NoiseEvent::Depolarize)], 0u);
}

TEST(Noise, propagate_examples) {
    CliffordCircuit idle(3, {{}});
    ErrorConfiguration b{3, 1, {{0, 1, NoiseEvent::Depolarize}}};
    PropagatedErrorSet m = propagate_errors(idle, b);
    ASSERT_EQ(m.generators.size(), 2u);
    EXPECT_EQ(m.generators[0].str(), "+IXI");
    EXPECT_EQ(m.generators[1].str(), "+IZI");
    EXPECT_EQ(m.tableau.num_rows(), 2u);

    CliffordCircuit c(2, {{cnot(0, 1)}});
    ErrorConfiguration site{2, 1, {{1, 1, NoiseEvent::Depolarize}}};
    PropagatedErrorSet m2 = propagate_errors(c, site);
    ASSERT_EQ(m2.generators.size(), 2u);
    EXPECT_EQ(m2.generators[0].str(), "+IX");
    EXPECT_EQ(m2.generators[1].str(), "+ZZ");
    EXPECT_EQ(m2.tableau.row(1), symplectic_vector(m2.generators[1]));
}

TEST(Noise, propagated_generators_round_trip_to_their_site) {
    CounterRng rng(34);
    for (size_t trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng.below(8);
        size_t d = 1 + rng.below(5);
        CliffordCircuit c = random_clifford_circuit(rng, n, d);
        ErrorConfiguration b = sample_error_configuration(rng, n, d, NoiseModel::depolarizing(0.3));
        PropagatedErrorSet m = propagate_errors(c, b);
        ASSERT_EQ(m.generators.size(), 2 * b.sites.size());
        for (size_t k = 0; k < b.sites.size(); k++) {
            const NoiseSite &s = b.sites[k];
            for (size_t part = 0; part < 2; part++) {
                PauliString g = conjugate_forward(c, m.generators[2 * k + part], s.layer);
                g.phase = 0;
                EXPECT_EQ(g, PauliString::single(n, s.qubit, part == 0 ? 'X' : 'Z'));
                EXPECT_TRUE(m.generators[2 * k + part].is_hermitian());
            }
        }
    }
}

TEST(Noise, survival_examples) {
    CliffordCircuit idle(2, {{}, {}});
    EXPECT_DOUBLE_EQ(survival_probability(idle, PauliString(2), 0.3), 1);
    EXPECT_DOUBLE_EQ(survival_probability(idle, PauliString::from_str("ZI"), 0.5), 0.125);
}

TEST(Noise, survival_matches_commutation_frequency) {
    CliffordCircuit idle(2, {{}, {}});
    PauliString s = PauliString::from_str("ZI");
    CounterRng rng(35);
    size_t samples = 100000;
    size_t survived = 0;
    for (size_t k = 0; k < samples; k++) {
        PropagatedErrorSet m = propagate_errors(idle, sample_error_configuration(rng, 2, 2, NoiseModel::depolarizing(0.5)));
        bool ok = true;
        for (const PauliString &g : m.generators) {
            ok = ok && commutes(s, g);
        }
        survived += ok;
    }
    double sigma = std::sqrt(0.125 * 0.875 / static_cast<double>(samples));
    EXPECT_NEAR(static_cast<double>(survived) / static_cast<double>(samples), 0.125, 3 * sigma);
}

TEST(Noise, survival_respects_min_weight_bound) {
    CounterRng rng(36);
    for (size_t trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.below(6);
        size_t d = 1 + rng.below(5);
        CliffordCircuit c = random_clifford_circuit(rng, n, d);
        PauliString s = random_pauli(rng, n);
        double gamma = rng.uniform();
        auto profile = weight_profile(c, s);
        size_t w = *std::min_element(profile.begin(), profile.end());
        double value = survival_probability(c, s, gamma);
        EXPECT_GE(value, 0);
        EXPECT_LE(value, 1);
        EXPECT_LE(value, std::pow(1 - gamma, static_cast<double>((d + 1) * w)) * (1 + 1e-12));
    }
}

/// Channel on the single-qubit operator basis |a><b| produced by the event mixture, against the
/// Pauli channel applied directly.
double mixture_process_gap(double px, double py, double pz) {
    ChannelMixture m = decompose_pauli_channel(px, py, pz);
    double worst = 0;
    std::pair<NoiseEvent, ChannelMixture::Index> events[] = {
        {NoiseEvent::XInPlace, ChannelMixture::kX}, {NoiseEvent::ZDet, ChannelMixture::kZ},
        {NoiseEvent::YDet, ChannelMixture::kY},     {NoiseEvent::ProjZ, ChannelMixture::kProjZ},
        {NoiseEvent::XProjZ, ChannelMixture::kXProjZ},
    };
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            DensityMatrix unit(1);
            unit.at(0, 0) = 0;
            unit.at(a, b) = 1;
            DensityMatrix direct = unit;
            direct.apply_channel(0, NoiseModel::pauli(px, py, pz));
            std::array<Complex, 4> mixed{};
            for (size_t r = 0; r < 2; r++) {
                for (size_t c = 0; c < 2; c++) {
                    mixed[2 * r + c] += m.probs[ChannelMixture::kIdentity] * unit.at(r, c);
                }
            }
            for (auto [event, index] : events) {
                DensityMatrix out = unit;
                out.apply_event(0, event);
                for (size_t r = 0; r < 2; r++) {
                    for (size_t c = 0; c < 2; c++) {
                        mixed[2 * r + c] += m.probs[index] * out.at(r, c);
                    }
                }
            }
            for (size_t r = 0; r < 2; r++) {
                for (size_t c = 0; c < 2; c++) {
                    worst = std::max(worst, std::abs(mixed[2 * r + c] - direct.at(r, c)));
                }
            }
        }
    }
    return worst;
}

TEST(Noise, decomposition_examples) {
    double g = 0.4;
    EXPECT_LT(mixture_process_gap(g / 4, g / 4, g / 4), 1e-12);
    ChannelMixture dephase = decompose_pauli_channel(0, 0, 0.2);
    EXPECT_NEAR(dephase.probs[ChannelMixture::kProjZ], 0.4, 1e-15);
    EXPECT_NEAR(dephase.probs[ChannelMixture::kIdentity], 0.6, 1e-15);
    EXPECT_NEAR(dephase.probs[ChannelMixture::kZ], 0, 1e-15);
    ChannelMixture none = decompose_pauli_channel(0, 0, 0);
    EXPECT_EQ(none.probs[ChannelMixture::kIdentity], 1);
    EXPECT_THROW(decompose_pauli_channel(0.6, 0.3, 0.3), std::invalid_argument);
    EXPECT_THROW(decompose_pauli_channel(-0.1, 0, 0), std::invalid_argument);
}

TEST(Noise, decomposition_reconstructs_random_channels) {
    CounterRng rng(37);
    for (size_t trial = 0; trial < 200; trial++) {
        double a = rng.uniform();
        double b = rng.uniform();
        double c = rng.uniform();
        double scale = rng.uniform() / (a + b + c);
        double px = a * scale;
        double py = b * scale;
        double pz = c * scale;
        EXPECT_LT(mixture_process_gap(px, py, pz), 1e-12);
        ChannelMixture m = decompose_pauli_channel(px, py, pz);
        double total = 0;
        for (double p : m.probs) {
            EXPECT_GE(p, -1e-15);
            total += p;
        }
        EXPECT_NEAR(total, 1, 1e-12);
        auto back = pauli_probabilities(m);
        EXPECT_NEAR(back[1], px, 1e-12);
        EXPECT_NEAR(back[2], py, 1e-12);
        EXPECT_NEAR(back[3], pz, 1e-12);
    }
}

TEST(Noise, iqp_rate_readings) {
    IqpNoiseRates r = iqp_noise_rates(0.01, 0.02, 0.05);
    EXPECT_NEAR(r.printed_formula, 0.05 + 0.02, 1e-15);
    EXPECT_NEAR(r.symmetric_reading, 0.05 + 0.01, 1e-15);
    EXPECT_NEAR(r.projector_rate, 2 * 0.05 + 2 * 0.01, 1e-15);
}

}  // namespace
}  // namespace cliffsim
