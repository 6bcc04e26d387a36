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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cliffsim {

namespace {

std::vector<size_t> block_coordinates(const SublatticeGraph &g, size_t block) {
    std::vector<size_t> coords(g.dimension);
    for (size_t k = g.dimension; k-- > 0;) {
        coords[k] = block % g.blocks_per_dim[k];
        block /= g.blocks_per_dim[k];
    }
    return coords;
}

size_t smallest_depth(double log_required, double rate) {
    // Smallest integer d >= 1 with rate * d >= log_required.
    if (log_required <= rate) {
        return 1;
    }
    return static_cast<size_t>(std::ceil(log_required / rate - 1e-12));
}

}  // namespace

bool SublatticeGraph::adjacent(uint32_t a, uint32_t b) const {
    const auto &nb = neighbors[a];
    return std::find(nb.begin(), nb.end(), b) != nb.end();
}

SublatticeGraph sublattice_graph(const Geometry &geometry, size_t depth) {
    if (depth == 0 || geometry.dimension() == 0) {
        throw std::invalid_argument("sublattice graph needs a lattice and depth >= 1");
    }
    SublatticeGraph g;
    g.dimension = geometry.dimension();
    g.side = 2 * depth;
    size_t total = 1;
    for (size_t e : geometry.extents) {
        g.blocks_per_dim.push_back((e + g.side - 1) / g.side);
        total *= g.blocks_per_dim.back();
    }
    for (size_t q = 0; q < geometry.num_sites(); q++) {
        auto coords = geometry.coordinates(q);
        size_t block = 0;
        for (size_t k = 0; k < g.dimension; k++) {
            block = block * g.blocks_per_dim[k] + coords[k] / g.side;
        }
        g.block_of.push_back(static_cast<uint32_t>(block));
    }
    g.neighbors.resize(total);
    for (size_t a = 0; a < total; a++) {
        auto ca = block_coordinates(g, a);
        for (size_t b = 0; b < total; b++) {
            if (a == b) {
                continue;
            }
            auto cb = block_coordinates(g, b);
            bool near = true;
            for (size_t k = 0; k < g.dimension && near; k++) {
                near = (ca[k] > cb[k] ? ca[k] - cb[k] : cb[k] - ca[k]) <= 1;
            }
            if (near) {
                g.neighbors[a].push_back(static_cast<uint32_t>(b));
            }
        }
    }
    return g;
}

bool components_connected_in_sublattices(const SublatticeGraph &graph, const ComponentPlan &plan) {
    for (const Component &comp : plan.components) {
        std::set<uint32_t> blocks;
        for (uint32_t q : comp.qubits) {
            if (!plan.depolarized[q]) {
                blocks.insert(graph.block_of[q]);
            }
        }
        if (blocks.empty()) {
            return false;
        }
        std::set<uint32_t> seen{*blocks.begin()};
        std::vector<uint32_t> stack{*blocks.begin()};
        while (!stack.empty()) {
            uint32_t b = stack.back();
            stack.pop_back();
            for (uint32_t nb : graph.neighbors[b]) {
                if (blocks.count(nb) && seen.insert(nb).second) {
                    stack.push_back(nb);
                }
            }
        }
        if (seen.size() != blocks.size()) {
            return false;
        }
    }
    return true;
}

double ComponentSizeStats::mean_max_size() const {
    if (sizes.empty()) {
        return 0;
    }
    double total = 0;
    for (size_t t = 0; t < sizes.size(); t++) {
        total += static_cast<double>(max_size(t));
    }
    return total / static_cast<double>(sizes.size());
}

double ComponentSizeStats::exceedance(size_t x) const {
    if (sizes.empty()) {
        return 0;
    }
    size_t hits = 0;
    for (size_t t = 0; t < sizes.size(); t++) {
        hits += max_size(t) >= x;
    }
    return static_cast<double>(hits) / static_cast<double>(sizes.size());
}

ComponentSizeStats component_size_stats(
    const CliffordCircuit &c, const NoiseModel &model, size_t trials, uint64_t seed) {
    if (!c.geometry()) {
        throw std::invalid_argument("component statistics need a lattice geometry");
    }
    size_t n = c.num_qubits();
    SublatticeGraph graph = sublattice_graph(*c.geometry(), c.depth());
    CliffordSampler sampler(c, ProductState::all_zero(n), MeasurementBasis::computational(n), model);
    ComponentSizeStats stats;
    stats.num_qubits = n;
    stats.noise_layers = c.depth() + 1;
    for (size_t trial = 0; trial < trials; trial++) {
        CounterRng rng = CounterRng::for_task(seed, trial);
        ComponentPlan plan = sampler.plan_for(sampler.sample_configuration(rng));
        std::vector<std::pair<size_t, size_t>> rows;
        for (const Component &comp : plan.components) {
            std::set<uint32_t> blocks;
            for (uint32_t q : comp.qubits) {
                blocks.insert(graph.block_of[q]);
            }
            rows.emplace_back(comp.qubits.size(), blocks.size());
        }
        std::sort(rows.begin(), rows.end(), std::greater<>());
        std::vector<size_t> sizes;
        std::vector<size_t> spans;
        for (auto [size, span] : rows) {
            sizes.push_back(size);
            spans.push_back(span);
        }
        stats.sizes.push_back(std::move(sizes));
        stats.spans.push_back(std::move(spans));
        if (!components_connected_in_sublattices(graph, plan)) {
            stats.disconnected_trials++;
        }
    }
    return stats;
}

double component_tail_bound(size_t n, size_t layers, size_t depth, size_t dimension, size_t x) {
    double block_volume = std::pow(2.0 * static_cast<double>(depth), static_cast<double>(dimension));
    double v = static_cast<double>(n) * static_cast<double>(layers) * std::exp(-static_cast<double>(x) / block_volume);
    return std::min(1.0, v);
}

DepthThresholds depth_thresholds(double gamma, size_t dimension, size_t num_qubits) {
    if (!(gamma > 0 && gamma <= 1)) {
        throw std::invalid_argument("depth thresholds need gamma in (0, 1]");
    }
    if (dimension == 0 || num_qubits == 0) {
        throw std::invalid_argument("depth thresholds need D >= 1 and n >= 1");
    }
    DepthThresholds r;
    r.gamma = gamma;
    r.dimension = dimension;
    r.num_qubits = num_qubits;
    double d = static_cast<double>(dimension);
    double pow3 = std::pow(3.0, d);
    r.first_condition_constant = (4 * pow3) * (pow3 * std::log(2.0) + 2) / gamma;
    r.first_condition_depth = static_cast<size_t>(std::ceil(r.first_condition_constant - 1e-12));
    // 3 (24D/gamma)^D e^{-gamma d / 4} <= 1  <=>  gamma d / 4 >= ln 3 + D ln(24 D / gamma).
    double log_required = std::log(3.0) + d * std::log(24 * d / gamma);
    r.second_condition_depth = smallest_depth(log_required, gamma / 4);
    r.local_depth = std::max(r.first_condition_depth, r.second_condition_depth);
    double nn = static_cast<double>(num_qubits);
    double log_n = std::log(nn);
    if (gamma >= 1) {
        r.nonlocal_depth = 1;
    } else if (log_n > 0) {
        // 3 (1-gamma)^d n <= ln n  <=>  d >= ln(3 n / ln n) / -ln(1-gamma).
        double needed = std::log(3 * nn / log_n) / -std::log1p(-gamma);
        size_t depth = needed <= 0 ? 0 : static_cast<size_t>(std::ceil(needed - 1e-12));
        while (depth > 0 && 3 * std::pow(1 - gamma, static_cast<double>(depth - 1)) * nn <= log_n) {
            depth--;
        }
        while (3 * std::pow(1 - gamma, static_cast<double>(depth)) * nn > log_n) {
            depth++;
        }
        r.nonlocal_depth = depth;
    }
    return r;
}

IqpThresholds iqp_depth_thresholds(double px, double py, double pz, size_t dimension, size_t num_qubits) {
    IqpThresholds out;
    out.rates = iqp_noise_rates(px, py, pz);
    auto eval = [&](double g) {
        return depth_thresholds(std::min(1.0, g), dimension, num_qubits);
    };
    out.printed_formula = eval(out.rates.printed_formula);
    out.symmetric_reading = eval(out.rates.symmetric_reading);
    out.projector_rate = eval(out.rates.projector_rate);
    return out;
}

double expected_group_size_bound(size_t layers, double gamma, size_t size) {
    double l = static_cast<double>(layers);
    return l * std::exp(3 * std::pow(1 - gamma, l) * static_cast<double>(size));
}

void write_component_csv(std::ostream &out, const ComponentSizeStats &stats) {
    out << "trial,component,size,sublattice_span\n";
    for (size_t t = 0; t < stats.trials(); t++) {
        if (stats.sizes[t].empty()) {
            out << t << ",-,0,0\n";
        }
        for (size_t j = 0; j < stats.sizes[t].size(); j++) {
            out << t << ',' << j << ',' << stats.sizes[t][j] << ',' << stats.spans[t][j] << '\n';
        }
    }
}

void write_exceedance_csv(
    std::ostream &out, const ComponentSizeStats &stats, size_t depth, size_t dimension, std::span<const size_t> xs) {
    auto old = out.precision(17);
    out << "x,exceedance,stderr,bound\n";
    double trials = static_cast<double>(std::max<size_t>(1, stats.trials()));
    for (size_t x : xs) {
        double p = stats.exceedance(x);
        out << x << ',' << p << ',' << std::sqrt(p * (1 - p) / trials) << ','
            << component_tail_bound(stats.num_qubits, stats.noise_layers, depth, dimension, x) << '\n';
    }
    out.precision(old);
}

}  // namespace cliffsim
