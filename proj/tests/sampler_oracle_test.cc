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

#include <gtest/gtest.h>

#include "cliffsim/clifford_sampler.h"
#include "cliffsim/iqp_sampler.h"
#include "cliffsim/oracle.h"
#include "cliffsim/random_circuits.h"

namespace cliffsim {
namespace {

TEST(SamplerOracle, clifford_fixed_configurations_match) {
    CounterRng rng(11);
    double worst = 0;
    for (size_t trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.below(4);
        size_t d = 1 + rng.below(4);
        CliffordCircuit c = random_clifford_circuit(rng, n, d);
        ProductState input = random_product_state(rng, n);
        MeasurementBasis basis = random_measurement_basis(rng, n);
        NoiseModel model = NoiseModel::depolarizing(rng.uniform() * 0.6);
        CliffordSampler sampler(c, input, basis, model);
        for (size_t k = 0; k < 10; k++) {
            ErrorConfiguration b = sampler.sample_configuration(rng);
            auto got = sampler.distribution_for(b);
            auto want = exact_noisy_distribution(c, input, basis, model, &b);
            for (size_t i = 0; i < want.size(); i++) {
                worst = std::max(worst, std::abs(got[i] - want[i]));
            }
        }
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(SamplerOracle, iqp_fixed_configurations_match) {
    CounterRng rng(12);
    double worst = 0;
    for (size_t trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.below(6);
        size_t d = 1 + rng.below(4);
        IqpCircuit c = random_iqp_circuit(rng, n, d);
        NoiseModel model = trial % 2 ? NoiseModel::depolarizing(rng.uniform() * 0.6)
                                     : NoiseModel::pauli(0, 0, rng.uniform() * 0.4);
        IqpSampler sampler(c, model);
        for (size_t k = 0; k < 10; k++) {
            ErrorConfiguration b = sampler.sample_configuration(rng);
            auto got = sampler.distribution_for(b);
            auto want = exact_iqp_distribution(c, model, &b);
            for (size_t i = 0; i < want.size(); i++) {
                worst = std::max(worst, std::abs(got[i] - want[i]));
            }
        }
    }
    EXPECT_LT(worst, 1e-9);
}

}  // namespace
}  // namespace cliffsim
