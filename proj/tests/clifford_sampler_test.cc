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

#include "cliffsim/clifford_sampler.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cliffsim/errors.h"
#include "cliffsim/oracle.h"
#include "cliffsim/random_circuits.h"
#include "test_util.h"

namespace cliffsim {
namespace {

using testing::span_by_enumeration;

/// Rows of m with the X and Z halves exchanged, so that C(m) is the nullspace of the result.
Gf2Matrix swap_halves(const Gf2Matrix &m, size_t n) {
    Gf2Matrix out(2 * n);
    for (size_t r = 0; r < m.num_rows(); r++) {
        BitVector v(2 * n);
        for (size_t k = 0; k < n; k++) {
            v.set(k, m.get(r, n + k));
            v.set(n + k, m.get(r, k));
        }
        out.append_row(v);
    }
    return out;
}

TEST(CliffordSampler, single_depolarized_site) {
    CliffordCircuit idle(2, {{}});
    ErrorConfiguration b{2, 1, {{1, 0, NoiseEvent::Depolarize}}};
    PropagatedErrorSet m = propagate_errors(idle, b);
    Gf2Matrix cent = centralizer_basis(m, 2);
    EXPECT_EQ(cent.num_rows(), 2u);
    EXPECT_EQ(depolarized_qubits(cent, 2), (std::vector<uint8_t>{1, 0}));
    ComponentPlan plan = plan_from_error_set(idle, m);
    ASSERT_EQ(plan.components.size(), 1u);
    EXPECT_EQ(plan.components[0].qubits, (std::vector<uint32_t>{1}));
    EXPECT_EQ(plan.generators[0].num_rows(), 2u);
}

TEST(CliffordSampler, centralizer_commutes_and_has_full_dimension) {
    CounterRng rng(41);
    for (size_t trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng.below(7);
        size_t d = 1 + rng.below(5);
        CliffordCircuit c = random_clifford_circuit(rng, n, d);
        PropagatedErrorSet m = propagate_errors(
            c, sample_error_configuration(rng, n, d, NoiseModel::depolarizing(rng.uniform() * 0.3)));
        Gf2Matrix cent = centralizer_basis(m, n);
        EXPECT_EQ(rank(cent), cent.num_rows());
        EXPECT_EQ(cent.num_rows() + rank(m.tableau), 2 * n);
        for (size_t r = 0; r < cent.num_rows(); r++) {
            PauliString p = hermitian_from_symplectic(cent.row(r));
            for (const PauliString &g : m.generators) {
                EXPECT_TRUE(commutes(p, g));
            }
        }
        Gf2Matrix twice = nullspace_basis(swap_halves(cent, n));
        EXPECT_TRUE(same_row_space(twice, m.tableau));
        EXPECT_EQ(depolarized_qubits(cent, n), depolarized_qubits_by_membership(m, n));
    }
}

TEST(CliffordSampler, fast_plan_matches_literal_plan) {
    CounterRng rng(42);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 4 + 2 * rng.below(20);
        size_t d = 1 + rng.below(4);
        CliffordCircuit c = random_brickwork_1d(rng, n, d);
        CliffordSampler sampler(c, ProductState::all_zero(n), MeasurementBasis::computational(n),
                                NoiseModel::depolarizing(0.1 + rng.uniform() * 0.4));
        for (size_t k = 0; k < 5; k++) {
            ErrorConfiguration b = sampler.sample_configuration(rng);
            ComponentPlan fast = sampler.plan_for(b);
            ComponentPlan literal = plan_from_error_set(c, propagate_errors(c, b));
            ASSERT_EQ(fast.depolarized, literal.depolarized);
            ASSERT_EQ(fast.components, literal.components);
            ASSERT_EQ(fast.outside, literal.outside);
            for (size_t j = 0; j < fast.components.size(); j++) {
                EXPECT_TRUE(same_row_space(fast.generators[j], literal.generators[j]));
            }
        }
    }
}

TEST(CliffordSampler, components_are_disjoint_closed_lightcones) {
    CounterRng rng(43);
    for (size_t trial = 0; trial < 40; trial++) {
        size_t n = 8 + 2 * rng.below(30);
        size_t d = 1 + rng.below(3);
        CliffordCircuit c = random_brickwork_1d(rng, n, d);
        std::vector<uint8_t> depolarized(n);
        for (auto &f : depolarized) {
            f = rng.uniform() < 0.8;
        }
        std::vector<Component> comps = build_components(c, depolarized);
        std::vector<int> owner(n, -1);
        for (size_t j = 0; j < comps.size(); j++) {
            for (uint32_t q : comps[j].qubits) {
                ASSERT_EQ(owner[q], -1);
                owner[q] = static_cast<int>(j);
            }
        }
        for (size_t q = 0; q < n; q++) {
            if (depolarized[q]) {
                continue;
            }
            ASSERT_NE(owner[q], -1);
            for (uint32_t r : forward_lightcone(c, q)) {
                EXPECT_EQ(owner[r], owner[q]);
            }
        }
    }
}

TEST(CliffordSampler, enumerate_group_visits_span_once) {
    CounterRng rng(44);
    for (size_t trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.below(4);
        Gf2Matrix basis = independent_rows(testing::random_matrix(rng, 1 + rng.below(6), 2 * n));
        std::set<std::string> seen;
        size_t visits = 0;
        enumerate_group(basis, 22, [&](const PauliString &p) {
            EXPECT_EQ(p.phase, 0);
            seen.insert(symplectic_vector(p).str());
            visits++;
        });
        EXPECT_EQ(visits, size_t{1} << basis.num_rows());
        EXPECT_EQ(seen, span_by_enumeration(basis));
    }
    Gf2Matrix dependent = Gf2Matrix::from_strings({"1100", "1100"});
    EXPECT_THROW(enumerate_group(dependent, 22, [](const PauliString &) {}), std::invalid_argument);
    Gf2Matrix big = Gf2Matrix::identity(6);
    EXPECT_THROW(enumerate_group(big, 5, [](const PauliString &) {}), CutoffExceeded);
}

TEST(CliffordSampler, noiseless_marginal_examples) {
    CliffordCircuit idle(1, {{}});
    BlochVector a = *ProductState::named("|A>");
    ProductState input{{a}};
    MeasurementBasis xbasis{{BlochVector{1, 0, 0}}};
    CliffordSampler sampler(idle, input, xbasis, NoiseModel::depolarizing(0));
    auto dist = sampler.distribution_for(ErrorConfiguration{1, 1, {}});
    EXPECT_NEAR(dist[0], (1 + a.x) / 2, 1e-12);
    EXPECT_NEAR(dist[0] + dist[1], 1, 1e-12);

    CliffordCircuit h(1, {{CliffordGate{GateKind::H, {0}}}});
    CliffordSampler hs(h, ProductState::all_zero(1), MeasurementBasis::computational(1), NoiseModel::depolarizing(0));
    auto hd = hs.distribution_for(ErrorConfiguration{1, 1, {}});
    EXPECT_NEAR(hd[0], 0.5, 1e-12);

    CliffordCircuit bell(2, {{CliffordGate{GateKind::H, {0}}}, {CliffordGate{GateKind::CNOT, {0, 1}}}});
    CliffordSampler bs(bell, ProductState::all_zero(2), MeasurementBasis::computational(2), NoiseModel::depolarizing(0));
    auto bd = bs.distribution_for(ErrorConfiguration{2, 2, {}});
    EXPECT_NEAR(bd[0], 0.5, 1e-12);
    EXPECT_NEAR(bd[3], 0.5, 1e-12);
    EXPECT_NEAR(bd[1] + bd[2], 0, 1e-12);
}

TEST(CliffordSampler, marginals_are_consistent) {
    CounterRng rng(45);
    for (size_t trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.below(5);
        size_t d = 1 + rng.below(3);
        CliffordCircuit c = random_clifford_circuit(rng, n, d);
        ProductState input = random_product_state(rng, n);
        MeasurementBasis basis = random_measurement_basis(rng, n);
        CliffordSampler sampler(c, input, basis, NoiseModel::depolarizing(0.2));
        ComponentPlan plan = sampler.plan_for(sampler.sample_configuration(rng));
        for (const ComponentDistribution &dist : sampler.distributions(plan)) {
            auto full = dist.full_distribution();
            double total = 0;
            for (double p : full) {
                EXPECT_GE(p, -1e-12);
                total += p;
            }
            EXPECT_NEAR(total, 1, 1e-12);
            size_t l = dist.num_qubits();
            std::vector<int8_t> assignment(l, -1);
            EXPECT_NEAR(dist.marginal(assignment), 1, 1e-12);
            assignment[0] = 1;
            double first = 0;
            for (size_t i = 0; i < full.size(); i++) {
                first += (i & 1) ? full[i] : 0;
            }
            EXPECT_NEAR(dist.marginal(assignment), first, 1e-12);
        }
    }
}

TEST(CliffordSampler, full_depolarization_is_uniform) {
    CounterRng rng(46);
    CliffordCircuit c = random_clifford_circuit(rng, 4, 3);
    CliffordSampler sampler(c, random_product_state(rng, 4), random_measurement_basis(rng, 4),
                            NoiseModel::depolarizing(1));
    ErrorConfiguration b = sampler.sample_configuration(rng);
    ComponentPlan plan = sampler.plan_for(b);
    EXPECT_EQ(plan.num_depolarized(), 4u);
    EXPECT_TRUE(plan.components.empty());
    for (double p : sampler.distribution_for(b)) {
        EXPECT_NEAR(p, 1.0 / 16, 1e-12);
    }
}

TEST(CliffordSampler, shot_frequencies_match_oracle) {
    CounterRng rng(47);
    size_t n = 3;
    CliffordCircuit c = random_clifford_circuit(rng, n, 3);
    ProductState input = random_product_state(rng, n);
    MeasurementBasis basis = random_measurement_basis(rng, n);
    NoiseModel model = NoiseModel::depolarizing(0.15);
    CliffordSampler sampler(c, input, basis, model);
    auto want = exact_noisy_distribution(c, input, basis, model);
    size_t shots = 40000;
    std::vector<size_t> counts(want.size());
    for (size_t k = 0; k < shots; k++) {
        CounterRng shot_rng = CounterRng::for_task(48, k);
        ShotResult r = sampler.sample(shot_rng);
        ASSERT_FALSE(r.report.aborted);
        size_t index = 0;
        for (size_t q = 0; q < n; q++) {
            index |= size_t{r.bits[q]} << q;
        }
        counts[index]++;
    }
    for (size_t i = 0; i < want.size(); i++) {
        double sigma = std::sqrt(std::max(want[i] * (1 - want[i]), 1e-9) / static_cast<double>(shots));
        EXPECT_NEAR(static_cast<double>(counts[i]) / static_cast<double>(shots), want[i], 4 * sigma) << i;
    }
}

TEST(CliffordSampler, cutoff_aborts_to_uniform_bits) {
    CounterRng rng(49);
    CliffordCircuit c = random_clifford_circuit(rng, 6, 2);
    SamplerOptions options;
    options.cutoff_log2 = 0;
    CliffordSampler sampler(c, ProductState::all_zero(6), MeasurementBasis::computational(6),
                            NoiseModel::depolarizing(0), options);
    ShotResult r = sampler.sample(rng);
    EXPECT_TRUE(r.report.aborted);
    EXPECT_EQ(r.bits.size(), 6u);
}

}  // namespace
}  // namespace cliffsim
