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

#include "cliffsim/diagnostics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cliffsim/random_circuits.h"

namespace cliffsim {
namespace {

TEST(Diagnostics, one_dimensional_sublattices) {
    SublatticeGraph g = sublattice_graph(Geometry{{8}}, 1);
    EXPECT_EQ(g.side, 2u);
    EXPECT_EQ(g.num_blocks(), 4u);
    EXPECT_EQ(g.block_of, (std::vector<uint32_t>{0, 0, 1, 1, 2, 2, 3, 3}));
    EXPECT_EQ(g.neighbors[0], (std::vector<uint32_t>{1}));
    EXPECT_EQ(g.neighbors[1], (std::vector<uint32_t>{0, 2}));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(sublattice_graph(Geometry{{9}}, 1).num_blocks(), 5u);
}

TEST(Diagnostics, two_dimensional_king_grid) {
    SublatticeGraph g = sublattice_graph(Geometry{{16, 16}}, 2);
    EXPECT_EQ(g.side, 4u);
    EXPECT_EQ(g.num_blocks(), 16u);
    EXPECT_EQ(g.neighbors[0].size(), 3u);
    EXPECT_EQ(g.neighbors[1].size(), 5u);
    EXPECT_EQ(g.neighbors[5].size(), 8u);
    EXPECT_TRUE(g.adjacent(0, 5));
    EXPECT_EQ(g.block_of[16 * 5 + 9], 4u + 2);
}

TEST(Diagnostics, component_stats_extremes) {
    CounterRng rng(71);
    CliffordCircuit c = random_brickwork_1d(rng, 32, 2);
    ComponentSizeStats all = component_size_stats(c, NoiseModel::depolarizing(1), 20, 5);
    EXPECT_EQ(all.trials(), 20u);
    EXPECT_EQ(all.noise_layers, 3u);
    EXPECT_EQ(all.mean_max_size(), 0);
    EXPECT_EQ(all.exceedance(1), 0);
    EXPECT_EQ(all.exceedance(0), 1);

    ComponentSizeStats none = component_size_stats(c, NoiseModel::depolarizing(0), 5, 5);
    for (size_t t = 0; t < none.trials(); t++) {
        EXPECT_EQ(none.max_size(t), 32u);
    }
    EXPECT_EQ(none.exceedance(32), 1);
    EXPECT_EQ(none.disconnected_trials, 0u);
}

TEST(Diagnostics, component_stats_are_reproducible_and_connected) {
    CounterRng rng(72);
    CliffordCircuit c = random_brickwork_1d(rng, 128, 2);
    ComponentSizeStats a = component_size_stats(c, NoiseModel::depolarizing(0.3), 50, 9);
    ComponentSizeStats b = component_size_stats(c, NoiseModel::depolarizing(0.3), 50, 9);
    EXPECT_EQ(a.sizes, b.sizes);
    EXPECT_EQ(a.spans, b.spans);
    EXPECT_EQ(a.disconnected_trials, 0u);
    for (size_t t = 0; t < a.trials(); t++) {
        for (size_t j = 1; j < a.sizes[t].size(); j++) {
            EXPECT_GE(a.sizes[t][j - 1], a.sizes[t][j]);
        }
    }
}

TEST(Diagnostics, csv_rows) {
    ComponentSizeStats stats;
    stats.num_qubits = 8;
    stats.noise_layers = 2;
    stats.sizes = {{}, {5, 2}};
    stats.spans = {{}, {2, 1}};
    std::ostringstream out;
    write_component_csv(out, stats);
    EXPECT_EQ(out.str(), "trial,component,size,sublattice_span\n0,-,0,0\n1,0,5,2\n1,1,2,1\n");
    EXPECT_DOUBLE_EQ(stats.exceedance(3), 0.5);
    EXPECT_DOUBLE_EQ(stats.mean_max_size(), 2.5);
    std::ostringstream ex;
    std::vector<size_t> xs{1};
    write_exceedance_csv(ex, stats, 1, 1, xs);
    EXPECT_EQ(ex.str().substr(0, 27), "x,exceedance,stderr,bound\n1");
}

TEST(Diagnostics, tail_bound) {
    EXPECT_EQ(component_tail_bound(100, 3, 1, 1, 0), 1);
    EXPECT_NEAR(component_tail_bound(100, 3, 1, 1, 40), 300 * std::exp(-20.0), 1e-15);
    EXPECT_NEAR(component_tail_bound(100, 3, 1, 2, 80), 300 * std::exp(-20.0), 1e-15);
}

TEST(Diagnostics, depth_threshold_examples) {
    DepthThresholds t = depth_thresholds(0.1, 1, 1000);
    EXPECT_NEAR(t.first_condition_constant, 120 * (3 * std::log(2.0) + 2) / 1, 1e-9);
    EXPECT_EQ(t.first_condition_depth, 490u);
    EXPECT_EQ(t.second_condition_depth, 264u);
    EXPECT_EQ(t.local_depth, 490u);
    ASSERT_TRUE(t.nonlocal_depth.has_value());
    size_t d = *t.nonlocal_depth;
    EXPECT_LE(3 * std::pow(0.9, d) * 1000, std::log(1000.0));
    EXPECT_GT(3 * std::pow(0.9, d - 1) * 1000, std::log(1000.0));
    EXPECT_THROW(depth_thresholds(0, 1, 10), std::invalid_argument);
    EXPECT_LT(depth_thresholds(0.5, 2, 10).first_condition_depth, depth_thresholds(0.25, 2, 10).first_condition_depth);
}

TEST(Diagnostics, iqp_thresholds_follow_each_rate) {
    IqpThresholds t = iqp_depth_thresholds(0.01, 0.02, 0.05, 1, 100);
    EXPECT_EQ(t.printed_formula.gamma, t.rates.printed_formula);
    EXPECT_EQ(t.projector_rate.gamma, t.rates.projector_rate);
    EXPECT_GE(t.symmetric_reading.local_depth, t.printed_formula.local_depth);
}

TEST(Diagnostics, expected_group_size_bound_examples) {
    EXPECT_DOUBLE_EQ(expected_group_size_bound(4, 1, 10), 4);
    EXPECT_NEAR(expected_group_size_bound(2, 0.5, 3), 2 * std::exp(3 * 0.25 * 3), 1e-12);
}

}  // namespace
}  // namespace cliffsim
