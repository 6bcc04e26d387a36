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

#include "cliffsim/iqp_sampler.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cliffsim/oracle.h"
#include "test_util.h"

namespace cliffsim {
namespace {

IqpGate cnot(uint32_t c, uint32_t t) {
    return IqpGate{IqpGateKind::CNOT, 0, {c, t, 0}};
}

SparseState uniform_plus(size_t n) {
    SparseState psi(n);
    double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
        uint64_t key[1] = {k};
        psi.push(key, amp);
    }
    return psi;
}

std::vector<NoiseSite> random_x_events(CounterRng &rng, size_t n, size_t d, size_t count) {
    std::vector<NoiseSite> events;
    for (size_t k = 0; k < count; k++) {
        events.push_back({static_cast<uint32_t>(rng.below(d + 1)), static_cast<uint32_t>(rng.below(n)),
                          NoiseEvent::XInPlace});
    }
    std::sort(events.begin(), events.end(), [](const NoiseSite &a, const NoiseSite &b) {
        return a.layer < b.layer || (a.layer == b.layer && a.qubit < b.qubit);
    });
    return events;
}

TEST(IqpSampler, parse_render_round_trip) {
    CounterRng rng(51);
    for (size_t trial = 0; trial < 20; trial++) {
        IqpCircuit c = random_iqp_circuit(rng, 1 + rng.below(8), 1 + rng.below(5));
        EXPECT_EQ(parse_iqp_circuit(render_iqp_circuit(c)), c);
    }
}

TEST(IqpSampler, z_propagation_example) {
    IqpCircuit c(2, {{cnot(0, 1)}});
    PropagatedErrorSet m = propagate_z_errors(c, ErrorConfiguration{2, 1, {{1, 1, NoiseEvent::ProjZ}}});
    ASSERT_EQ(m.generators.size(), 1u);
    EXPECT_EQ(m.generators[0].str(), "+ZZ");
    EXPECT_EQ(depolarized_qubits_z(m), (std::vector<uint8_t>{0, 0}));
    Gf2Matrix cent = centralizer_x_basis(m, 2);
    ASSERT_EQ(cent.num_rows(), 1u);
    EXPECT_EQ(cent.row(0).str(), "11");

    PropagatedErrorSet early = propagate_z_errors(c, ErrorConfiguration{2, 1, {{0, 1, NoiseEvent::XProjZ}}});
    EXPECT_EQ(early.generators[0].str(), "+IZ");
    EXPECT_EQ(depolarized_qubits_z(early), (std::vector<uint8_t>{0, 1}));
}

TEST(IqpSampler, sign_flip_example) {
    IqpCircuit c(2, {{cnot(0, 1)}});
    EXPECT_EQ(input_sign_flips(c, ErrorConfiguration{2, 1, {{0, 0, NoiseEvent::ZDet}}}).str(), "10");
    EXPECT_EQ(input_sign_flips(c, ErrorConfiguration{2, 1, {{1, 1, NoiseEvent::ZDet}}}).str(), "11");
    EXPECT_EQ(input_sign_flips(c, ErrorConfiguration{2, 1, {{1, 1, NoiseEvent::YDet}}}).str(), "11");
    EXPECT_EQ(input_sign_flips(c, ErrorConfiguration{2, 1, {{1, 0, NoiseEvent::XInPlace}}}).str(), "00");
}

TEST(IqpSampler, converter_example) {
    IqpConverter conv = iqp_converter(Gf2Matrix::from_strings({"11"}));
    EXPECT_EQ(conv.rank, 1u);
    std::vector<uint8_t> sigma{0};
    std::vector<uint8_t> r0{0};
    std::vector<uint8_t> r1{1};
    auto d0 = converter_state(conv, sigma, r0).dense();
    auto d1 = converter_state(conv, sigma, r1).dense();
    double h = std::sqrt(0.5);
    EXPECT_NEAR(std::abs(d0[0] - h) + std::abs(d0[3] - h) + std::abs(d0[1]) + std::abs(d0[2]), 0, 1e-12);
    EXPECT_NEAR(std::abs(d1[1] - h) + std::abs(d1[2] - h) + std::abs(d1[0]) + std::abs(d1[3]), 0, 1e-12);
    EXPECT_THROW(iqp_converter(Gf2Matrix::from_strings({"11", "11"})), std::invalid_argument);
}

TEST(IqpSampler, converter_mixture_equals_group_projector) {
    CounterRng rng(52);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.below(5);
        Gf2Matrix g = independent_rows(testing::random_matrix(rng, rng.below(n + 1), n));
        IqpConverter conv = iqp_converter(g);
        size_t rank = g.num_rows();
        ASSERT_EQ(conv.rank, rank);
        std::vector<uint8_t> sigma(rank);
        for (auto &s : sigma) {
            s = rng.bit();
        }
        size_t dim = size_t{1} << n;
        std::vector<Complex> rho(dim * dim);
        size_t free = n - rank;
        for (uint64_t rv = 0; rv < (uint64_t{1} << free); rv++) {
            std::vector<uint8_t> r(free);
            for (size_t k = 0; k < free; k++) {
                r[k] = (rv >> k) & 1;
            }
            auto psi = converter_state(conv, sigma, r).dense();
            for (size_t a = 0; a < dim; a++) {
                for (size_t b = 0; b < dim; b++) {
                    rho[a * dim + b] += psi[a] * std::conj(psi[b]) / static_cast<double>(uint64_t{1} << free);
                }
            }
        }
        std::vector<Complex> want(dim * dim);
        for (uint64_t mask = 0; mask < (uint64_t{1} << rank); mask++) {
            uint64_t v = 0;
            int sign = 1;
            for (size_t k = 0; k < rank; k++) {
                if ((mask >> k) & 1) {
                    for (size_t q = 0; q < n; q++) {
                        v ^= uint64_t{g.get(k, q)} << q;
                    }
                    sign = sigma[k] ? -sign : sign;
                }
            }
            for (size_t a = 0; a < dim; a++) {
                want[a * dim + (a ^ v)] += static_cast<double>(sign) / static_cast<double>(dim);
            }
        }
        for (size_t k = 0; k < dim * dim; k++) {
            ASSERT_NEAR(std::abs(rho[k] - want[k]), 0, 1e-12);
        }
    }
}

TEST(IqpSampler, sparse_evolution_matches_dense) {
    CounterRng rng(53);
    for (size_t trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.below(8);
        size_t d = 1 + rng.below(5);
        IqpCircuit c = random_iqp_circuit(rng, n, d);
        auto events = random_x_events(rng, n, d, rng.below(4));
        SparseState psi = uniform_plus(n);
        auto start = psi.dense();
        evolve_sparse_state(c, psi, events);
        auto want = iqp_state_vector(c, start, events);
        auto got = psi.dense();
        for (size_t k = 0; k < want.size(); k++) {
            ASSERT_NEAR(std::abs(got[k] - want[k]), 0, 1e-12);
        }
        auto hd = psi.hadamard_distribution();
        for (size_t out = 0; out < hd.size(); out++) {
            Complex amp = 0;
            for (size_t k = 0; k < want.size(); k++) {
                amp += want[k] * (std::popcount(k & out) % 2 ? -1.0 : 1.0);
            }
            EXPECT_NEAR(hd[out], std::norm(amp) / static_cast<double>(want.size()), 1e-12);
        }
    }
}

TEST(IqpSampler, norm_is_stable_over_many_gates) {
    CounterRng rng(54);
    IqpCircuit c = random_iqp_circuit(rng, 10, 250);
    SparseState psi = uniform_plus(10);
    evolve_sparse_state(c, psi, random_x_events(rng, 10, 250, 20));
    EXPECT_NEAR(psi.norm_squared(), 1, 1e-12);
}

TEST(IqpSampler, hadamard_sampling_frequencies) {
    CounterRng rng(55);
    IqpCircuit c = random_iqp_circuit(rng, 3, 4);
    SparseState base = uniform_plus(3);
    evolve_sparse_state(c, base, {});
    base.sort();
    auto want = base.hadamard_distribution();
    size_t shots = 30000;
    std::vector<size_t> counts(want.size());
    for (size_t k = 0; k < shots; k++) {
        SparseState psi = base;
        auto bits = psi.sample_hadamard(rng);
        counts[bits[0] | (bits[1] << 1) | (bits[2] << 2)]++;
    }
    for (size_t i = 0; i < want.size(); i++) {
        double sigma = std::sqrt(std::max(want[i] * (1 - want[i]), 1e-9) / static_cast<double>(shots));
        EXPECT_NEAR(static_cast<double>(counts[i]) / static_cast<double>(shots), want[i], 4 * sigma) << i;
    }
}

TEST(IqpSampler, noiseless_distribution_matches_oracle) {
    CounterRng rng(56);
    for (size_t trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng.below(6);
        IqpCircuit c = random_iqp_circuit(rng, n, 1 + rng.below(4));
        IqpSampler sampler(c, NoiseModel::depolarizing(0));
        auto got = sampler.distribution_for(ErrorConfiguration{n, c.depth(), {}});
        auto want = exact_iqp_distribution(c, NoiseModel::depolarizing(0));
        for (size_t k = 0; k < want.size(); k++) {
            ASSERT_NEAR(got[k], want[k], 1e-12);
        }
    }
}

TEST(IqpSampler, full_dephasing_is_uniform) {
    CounterRng rng(57);
    IqpCircuit c = random_iqp_circuit(rng, 5, 3);
    IqpSampler sampler(c, NoiseModel::pauli(0, 0, 0.5));
    ErrorConfiguration b = sampler.sample_configuration(rng);
    IqpPlan plan = sampler.plan_for(b);
    EXPECT_EQ(plan.num_depolarized(), 5u);
    for (double p : sampler.distribution_for(b)) {
        EXPECT_NEAR(p, 1.0 / 32, 1e-12);
    }
}

TEST(IqpSampler, shot_frequencies_match_oracle) {
    CounterRng rng(58);
    size_t n = 3;
    IqpCircuit c = random_iqp_circuit(rng, n, 3);
    NoiseModel model = NoiseModel::pauli(0.03, 0.02, 0.08);
    IqpSampler sampler(c, model);
    auto want = exact_iqp_distribution(c, model);
    size_t shots = 40000;
    std::vector<size_t> counts(want.size());
    for (size_t k = 0; k < shots; k++) {
        CounterRng shot_rng = CounterRng::for_task(59, k);
        ShotResult r = sampler.sample(shot_rng);
        ASSERT_FALSE(r.report.aborted);
        counts[r.bits[0] | (r.bits[1] << 1) | (r.bits[2] << 2)]++;
    }
    for (size_t i = 0; i < want.size(); i++) {
        double sigma = std::sqrt(std::max(want[i] * (1 - want[i]), 1e-9) / static_cast<double>(shots));
        EXPECT_NEAR(static_cast<double>(counts[i]) / static_cast<double>(shots), want[i], 4 * sigma) << i;
    }
}

}  // namespace
}  // namespace cliffsim
