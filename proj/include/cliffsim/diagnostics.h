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

#ifndef CLIFFSIM_DIAGNOSTICS_H
#define CLIFFSIM_DIAGNOSTICS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/clifford_sampler.h"
#include "cliffsim/noise.h"

namespace cliffsim {

/// Coarse-graining of a lattice into blocks of side 2d. Blocks are adjacent when their block
/// coordinates differ by at most one in every dimension (diagonals included).
struct SublatticeGraph {
    size_t dimension = 0;
    size_t side = 0;
    std::vector<size_t> blocks_per_dim;
    std::vector<uint32_t> block_of;
    std::vector<std::vector<uint32_t>> neighbors;

    size_t num_blocks() const {
        return neighbors.size();
    }
    bool adjacent(uint32_t a, uint32_t b) const;
};

SublatticeGraph sublattice_graph(const Geometry &geometry, size_t depth);

/// True when the blocks holding the non-depolarized qubits of every component form a connected
/// set in the sublattice graph.
bool components_connected_in_sublattices(const SublatticeGraph &graph, const ComponentPlan &plan);

struct ComponentSizeStats {
    size_t num_qubits = 0;
    size_t noise_layers = 0;
    /// Component sizes per trial, sorted descending.
    std::vector<std::vector<size_t>> sizes;
    /// Number of distinct sublattices touched by each component, aligned with sizes.
    std::vector<std::vector<size_t>> spans;
    /// Trials whose components were not connected in the sublattice graph.
    size_t disconnected_trials = 0;

    size_t trials() const {
        return sizes.size();
    }
    size_t max_size(size_t trial) const {
        return sizes[trial].empty() ? 0 : sizes[trial].front();
    }
    double mean_max_size() const;
    /// Fraction of trials with some component of size >= x.
    double exceedance(size_t x) const;
};

/// Samples `trials` error configurations (trial k uses CounterRng::for_task(seed, k)) and records
/// the merged component sizes. Requires a lattice geometry.
ComponentSizeStats component_size_stats(
    const CliffordCircuit &c, const NoiseModel &model, size_t trials, uint64_t seed);

/// min(1, n * layers * exp(-x / (2d)^D)).
double component_tail_bound(size_t n, size_t layers, size_t depth, size_t dimension, size_t x);

struct DepthThresholds {
    double gamma = 0;
    size_t dimension = 0;
    size_t num_qubits = 0;
    /// gamma^-1 (4 3^D)(3^D ln 2 + 2).
    double first_condition_constant = 0;
    size_t first_condition_depth = 0;
    /// Smallest d with 3 (24 D / gamma)^D exp(-gamma d / 4) <= 1.
    size_t second_condition_depth = 0;
    size_t local_depth = 0;
    /// Smallest d with 3 (1 - gamma)^d n <= ln n; empty when no depth satisfies it.
    std::optional<size_t> nonlocal_depth;
};

DepthThresholds depth_thresholds(double gamma, size_t dimension, size_t num_qubits);

/// Thresholds for an IQP noise channel under each reading of its effective rate.
struct IqpThresholds {
    IqpNoiseRates rates;
    DepthThresholds printed_formula;
    DepthThresholds symmetric_reading;
    DepthThresholds projector_rate;
};
IqpThresholds iqp_depth_thresholds(double px, double py, double pz, size_t dimension, size_t num_qubits);

/// layers * exp(3 (1 - gamma)^layers * size).
double expected_group_size_bound(size_t layers, double gamma, size_t size);

/// One row per trial per component: trial,component,size,sublattice_span. A trial without
/// components gets a single row with component '-' and size 0.
void write_component_csv(std::ostream &out, const ComponentSizeStats &stats);
/// One row per probed x: x,exceedance,stderr,bound.
void write_exceedance_csv(
    std::ostream &out, const ComponentSizeStats &stats, size_t depth, size_t dimension, std::span<const size_t> xs);

}  // namespace cliffsim

#endif
