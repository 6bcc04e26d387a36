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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cliffsim/errors.h"

namespace cliffsim {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

class UnionFind {
   public:
    explicit UnionFind(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    uint32_t find(uint32_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

   private:
    std::vector<uint32_t> parent_;
};

double bloch_component(const BlochVector &b, bool x, bool z) {
    return x ? (z ? b.y : b.x) : b.z;
}

}  // namespace

size_t ComponentPlan::num_depolarized() const {
    return static_cast<size_t>(std::count(depolarized.begin(), depolarized.end(), 1));
}

Gf2Matrix centralizer_basis(const PropagatedErrorSet &m, size_t n) {
    Gf2Matrix swapped(2 * n);
    for (const BitVector &r : m.tableau.rows()) {
        if (r.size() != 2 * n) {
            throw std::invalid_argument("tableau width does not match the qubit count");
        }
        BitVector v(2 * n);
        for (size_t k = 0; k < n; k++) {
            v.set(k, r[n + k]);
            v.set(n + k, r[k]);
        }
        swapped.append_row(std::move(v));
    }
    return nullspace_basis(swapped);
}

std::vector<uint8_t> depolarized_qubits(const Gf2Matrix &centralizer, size_t n) {
    std::vector<uint8_t> flags(n, 1);
    for (const BitVector &r : centralizer.rows()) {
        for (size_t k = 0; k < n; k++) {
            if (r[k] || r[n + k]) {
                flags[k] = 0;
            }
        }
    }
    return flags;
}

std::vector<uint8_t> depolarized_qubits_by_membership(const PropagatedErrorSet &m, size_t n) {
    EchelonBasis basis(2 * n);
    for (const BitVector &r : m.tableau.rows()) {
        basis.insert(r);
    }
    std::vector<uint8_t> flags(n);
    for (size_t k = 0; k < n; k++) {
        flags[k] = basis.contains_unit(k) && basis.contains_unit(n + k);
    }
    return flags;
}

std::vector<Component> build_components(
    const InteractionLayers &layers, bool merge_all, const std::vector<uint8_t> &depolarized) {
    size_t n = layers.num_qubits();
    if (depolarized.size() != n) {
        throw std::invalid_argument("flag count does not match the qubit count");
    }
    UnionFind uf(n);
    std::vector<uint32_t> best(n, kUnreached);
    std::vector<uint32_t> reach(n, kUnreached);
    std::vector<uint32_t> reached;
    int64_t first_seed = -1;
    for (uint32_t q = 0; q < n; q++) {
        if (depolarized[q]) {
            continue;
        }
        reached.assign(1, q);
        reach[q] = 0;
        for (size_t t = 1; t <= layers.depth(); t++) {
            size_t before = reached.size();
            for (size_t k = 0; k < before; k++) {
                int32_t g = layers.interaction_on(t, reached[k]);
                if (g < 0) {
                    continue;
                }
                const Interaction &it = layers.layer(t)[g];
                for (size_t j = 0; j < it.arity; j++) {
                    uint32_t r = it.qubits[j];
                    if (reach[r] == kUnreached) {
                        reach[r] = static_cast<uint32_t>(t);
                        reached.push_back(r);
                    }
                }
            }
        }
        for (uint32_t r : reached) {
            uf.unite(q, r);
            best[r] = std::min(best[r], reach[r]);
            reach[r] = kUnreached;
        }
        if (merge_all) {
            if (first_seed < 0) {
                first_seed = q;
            } else {
                uf.unite(static_cast<uint32_t>(first_seed), q);
            }
        }
    }
    std::vector<Component> out;
    std::vector<int32_t> index_of_root(n, -1);
    for (uint32_t r = 0; r < n; r++) {
        if (best[r] == kUnreached) {
            continue;
        }
        uint32_t root = uf.find(r);
        if (index_of_root[root] < 0) {
            index_of_root[root] = static_cast<int32_t>(out.size());
            out.emplace_back();
        }
        Component &comp = out[index_of_root[root]];
        comp.qubits.push_back(r);
        comp.reach.push_back(best[r]);
    }
    return out;
}

std::vector<Component> build_components(const CliffordCircuit &c, const std::vector<uint8_t> &depolarized) {
    return build_components(c.interactions(), !c.geometry().has_value(), depolarized);
}

Gf2Matrix truncate_generators(
    const Gf2Matrix &centralizer, std::span<const uint32_t> qubits, const PropagatedErrorSet *check) {
    size_t cols = centralizer.num_cols();
    size_t n = cols / 2;
    BitVector mask(cols);
    for (uint32_t q : qubits) {
        mask.set(q, true);
        mask.set(n + q, true);
    }
    Gf2Matrix truncated(cols);
    for (const BitVector &r : centralizer.rows()) {
        BitVector t = r & mask;
        if (check != nullptr) {
            PauliString p = hermitian_from_symplectic(t);
            for (const PauliString &g : check->generators) {
                if (!commutes(p, g)) {
                    throw InternalInvariantError(
                        "truncated centralizer element " + p.str() + " anticommutes with " + g.str());
                }
            }
        }
        truncated.append_row(std::move(t));
    }
    return independent_rows(truncated);
}

Gf2Matrix localize(const Gf2Matrix &global, std::span<const uint32_t> qubits) {
    size_t n = global.num_cols() / 2;
    size_t m = qubits.size();
    Gf2Matrix out(2 * m);
    for (const BitVector &r : global.rows()) {
        BitVector v(2 * m);
        for (size_t k = 0; k < m; k++) {
            v.set(k, r[qubits[k]]);
            v.set(m + k, r[n + qubits[k]]);
        }
        out.append_row(std::move(v));
    }
    return out;
}

ComponentPlan plan_from_error_set(const CliffordCircuit &c, const PropagatedErrorSet &m) {
    size_t n = c.num_qubits();
    ComponentPlan plan;
    Gf2Matrix centralizer = centralizer_basis(m, n);
    plan.depolarized = depolarized_qubits(centralizer, n);
    plan.components = build_components(c, plan.depolarized);
    std::vector<uint8_t> covered(n);
    for (const Component &comp : plan.components) {
        plan.generators.push_back(localize(truncate_generators(centralizer, comp.qubits, &m), comp.qubits));
        for (uint32_t q : comp.qubits) {
            covered[q] = 1;
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (!covered[q]) {
            plan.outside.push_back(q);
        }
    }
    return plan;
}

void enumerate_group(
    const Gf2Matrix &basis, size_t cutoff_log2, const std::function<void(const PauliString &)> &visit) {
    size_t r = basis.num_rows();
    if (r > cutoff_log2) {
        throw CutoffExceeded(r, cutoff_log2);
    }
    if (rank(basis) != r) {
        throw std::invalid_argument("group generators are not independent");
    }
    BitVector v(basis.num_cols());
    visit(hermitian_from_symplectic(v));
    for (uint64_t k = 1; k < (uint64_t{1} << r); k++) {
        v ^= basis.row(std::countr_zero(k));
        visit(hermitian_from_symplectic(v));
    }
}

ComponentDistribution::ComponentDistribution(
    const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const Component &component,
    const Gf2Matrix &local_generators, size_t cutoff_log2)
    : qubits_(component.qubits) {
    size_t m = qubits_.size();
    if (local_generators.num_cols() != 2 * m) {
        throw std::invalid_argument("generator width does not match the component");
    }
    rank_ = local_generators.num_rows();
    if (rank_ > cutoff_log2) {
        throw CutoffExceeded(rank_, cutoff_log2);
    }
    if (rank_ > 62) {
        throw std::invalid_argument("group too large to enumerate");
    }
    if (cliffsim::rank(local_generators) != rank_) {
        throw InternalInvariantError("component generators are dependent");
    }
    for (uint32_t q : qubits_) {
        axes_.push_back(basis.axes[q]);
    }

    auto local_of = [&](uint32_t q) -> int32_t {
        auto it = std::lower_bound(qubits_.begin(), qubits_.end(), q);
        return it != qubits_.end() && *it == q ? static_cast<int32_t>(it - qubits_.begin()) : -1;
    };
    std::vector<CliffordGate> gates;
    for (size_t t = 1; t <= c.depth(); t++) {
        for (size_t k = 0; k < m; k++) {
            int32_t gi = c.gate_on(t, qubits_[k]);
            if (gi < 0) {
                continue;
            }
            const CliffordGate &g = c.layer(t)[gi];
            if (g.arity() == 1) {
                gates.push_back(CliffordGate{g.kind, {static_cast<uint32_t>(k), 0}});
                continue;
            }
            uint32_t other = g.qubits[0] == qubits_[k] ? g.qubits[1] : g.qubits[0];
            int32_t lo = local_of(other);
            if (lo < 0) {
                // Elements of this component cannot have reached the qubit yet, so the gate acts trivially.
                if (component.reach[k] < t) {
                    throw InternalInvariantError("an active gate crosses a component boundary");
                }
                continue;
            }
            if (qubits_[k] < other) {
                uint32_t a = static_cast<uint32_t>(local_of(g.qubits[0]));
                uint32_t b = static_cast<uint32_t>(local_of(g.qubits[1]));
                gates.push_back(CliffordGate{g.kind, {a, b}});
            }
        }
    }

    std::vector<PauliString> gens;
    std::vector<PauliString> images;
    for (const BitVector &row : local_generators.rows()) {
        PauliString g = hermitian_from_symplectic(row);
        PauliString img = g;
        for (const CliffordGate &gate : gates) {
            apply_gate(img, gate);
        }
        gens.push_back(std::move(g));
        images.push_back(std::move(img));
    }

    words_ = (m + 63) / 64;
    std::vector<double> coefficients;
    std::vector<int32_t> levels;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    PauliString s(m);
    PauliString image(m);
    auto record = [&]() {
        uint8_t e = static_cast<uint8_t>((image.phase - s.phase) & 3);
        if (e & 1) {
            throw InternalInvariantError("conjugated group element is not Hermitian");
        }
        double coefficient = e == 0 ? 1.0 : -1.0;
        auto sx = s.xs.words();
        auto sz = s.zs.words();
        for (size_t w = 0; w < words_ && coefficient != 0; w++) {
            uint64_t bits = sx[w] | sz[w];
            while (bits) {
                size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                coefficient *= bloch_component(input.qubits[qubits_[k]], s.xs[k], s.zs[k]);
            }
        }
        if (coefficient == 0) {
            return;
        }
        auto cx = image.xs.words();
        auto cz = image.zs.words();
        int32_t level = -1;
        for (size_t w = 0; w < words_; w++) {
            uint64_t bits = cx[w] | cz[w];
            while (bits) {
                size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (bloch_component(axes_[k], image.xs[k], image.zs[k]) == 0) {
                    return;
                }
                level = static_cast<int32_t>(k);
            }
        }
        coefficients.push_back(coefficient);
        levels.push_back(level);
        xs.insert(xs.end(), cx.begin(), cx.end());
        zs.insert(zs.end(), cz.begin(), cz.end());
    };
    record();
    for (uint64_t k = 1; k < (uint64_t{1} << rank_); k++) {
        size_t j = std::countr_zero(k);
        s *= gens[j];
        image *= images[j];
        record();
    }

    // Counting sort by level.
    level_start_.assign(m + 2, 0);
    for (int32_t level : levels) {
        level_start_[level + 2]++;
    }
    for (size_t k = 1; k < level_start_.size(); k++) {
        level_start_[k] += level_start_[k - 1];
    }
    size_t total = coefficients.size();
    coefficients_.resize(total);
    levels_.resize(total);
    xs_.resize(total * words_);
    zs_.resize(total * words_);
    std::vector<size_t> cursor(level_start_.begin(), level_start_.end() - 1);
    for (size_t k = 0; k < total; k++) {
        size_t dst = cursor[levels[k] + 1]++;
        coefficients_[dst] = coefficients[k];
        levels_[dst] = levels[k];
        std::copy_n(xs.begin() + k * words_, words_, xs_.begin() + dst * words_);
        std::copy_n(zs.begin() + k * words_, words_, zs_.begin() + dst * words_);
    }
}

double ComponentDistribution::measurement_factor(size_t term, size_t k, bool bit) const {
    double v = bloch_component(axes_[k], x_bit(term, k), z_bit(term, k));
    return bit ? -v : v;
}

double ComponentDistribution::marginal(std::span<const int8_t> assignment) const {
    size_t m = qubits_.size();
    if (assignment.size() != m) {
        throw std::invalid_argument("assignment size does not match the component");
    }
    std::vector<uint64_t> outside(words_, 0);
    size_t assigned = 0;
    for (size_t k = 0; k < m; k++) {
        if (assignment[k] < 0) {
            outside[k >> 6] |= uint64_t{1} << (k & 63);
        } else {
            assigned++;
        }
    }
    double total = 0;
    for (size_t term = 0; term < coefficients_.size(); term++) {
        bool inside = true;
        for (size_t w = 0; w < words_ && inside; w++) {
            inside = ((xs_[term * words_ + w] | zs_[term * words_ + w]) & outside[w]) == 0;
        }
        if (!inside) {
            continue;
        }
        double v = coefficients_[term];
        for (size_t w = 0; w < words_; w++) {
            uint64_t bits = xs_[term * words_ + w] | zs_[term * words_ + w];
            while (bits) {
                size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                v *= measurement_factor(term, k, assignment[k] != 0);
            }
        }
        total += v;
    }
    double p = std::ldexp(total, -static_cast<int>(assigned));
    if (p < -kProbabilityTolerance || p > 1 + kProbabilityTolerance) {
        throw InternalInvariantError("marginal probability " + std::to_string(p) + " outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

std::vector<uint8_t> ComponentDistribution::sample(CounterRng &rng) const {
    size_t m = qubits_.size();
    std::vector<uint8_t> bits(m);
    // running = 2^k p(z_0 .. z_{k-1}).
    double running = 0;
    for (size_t term = level_start_[0]; term < level_start_[1]; term++) {
        running += coefficients_[term];
    }
    for (size_t k = 0; k < m; k++) {
        double delta = 0;
        for (size_t term = level_start_[k + 1]; term < level_start_[k + 2]; term++) {
            double v = coefficients_[term];
            for (size_t w = 0; w <= (k >> 6); w++) {
                uint64_t support = xs_[term * words_ + w] | zs_[term * words_ + w];
                while (support) {
                    size_t i = (w << 6) + std::countr_zero(support);
                    support &= support - 1;
                    v *= measurement_factor(term, i, i < k && bits[i]);
                }
            }
            delta += v;
        }
        double p0 = (running + delta) / 2;
        double p1 = (running - delta) / 2;
        double scale = std::ldexp(1.0, -static_cast<int>(k));
        if (p0 * scale < -kProbabilityTolerance || p1 * scale < -kProbabilityTolerance) {
            throw InternalInvariantError("negative conditional probability while sampling");
        }
        p0 = std::max(p0, 0.0);
        p1 = std::max(p1, 0.0);
        if (!(p0 + p1 > 0)) {
            throw InternalInvariantError("sampled a prefix of zero probability");
        }
        bool bit = rng.uniform() >= p0 / (p0 + p1);
        bits[k] = bit;
        running = bit ? running - delta : running + delta;
    }
    return bits;
}

std::vector<double> ComponentDistribution::full_distribution() const {
    size_t m = qubits_.size();
    if (m > 20) {
        throw std::invalid_argument("component too large for a full distribution");
    }
    std::vector<double> out(size_t{1} << m);
    std::vector<int8_t> assignment(m);
    for (size_t idx = 0; idx < out.size(); idx++) {
        for (size_t k = 0; k < m; k++) {
            assignment[k] = static_cast<int8_t>((idx >> k) & 1);
        }
        out[idx] = marginal(assignment);
    }
    return out;
}

size_t RunReport::max_component_size() const {
    return component_sizes.empty() ? 0 : *std::max_element(component_sizes.begin(), component_sizes.end());
}

size_t RunReport::max_rank() const {
    return component_ranks.empty() ? 0 : *std::max_element(component_ranks.begin(), component_ranks.end());
}

CliffordSampler::CliffordSampler(
    CliffordCircuit circuit, ProductState input, MeasurementBasis basis, NoiseModel model, SamplerOptions options)
    : circuit_(std::move(circuit)),
      input_(std::move(input)),
      basis_(std::move(basis)),
      model_(model),
      options_(options),
      images_(circuit_) {
    size_t n = circuit_.num_qubits();
    if (input_.qubits.size() != n || basis_.axes.size() != n) {
        throw std::invalid_argument("input state or measurement basis size does not match the circuit");
    }
    input_.validate();
    basis_.validate();
    model_.validate();
    if (model_.kind != NoiseModel::Kind::Depolarizing) {
        throw std::invalid_argument("the Clifford sampler supports depolarizing noise only");
    }
}

ErrorConfiguration CliffordSampler::sample_configuration(CounterRng &rng) const {
    return sample_error_configuration(rng, circuit_.num_qubits(), circuit_.depth(), model_);
}

ComponentPlan CliffordSampler::plan_for(const ErrorConfiguration &b) const {
    size_t n = circuit_.num_qubits();
    if (b.num_qubits != n || b.depth != circuit_.depth()) {
        throw std::invalid_argument("error configuration does not fit the circuit");
    }
    EchelonBasis basis(2 * n);
    for (size_t k = 0; k < b.sites.size(); k++) {
        const NoiseSite &s = b.sites[k];
        if (s.event != NoiseEvent::Depolarize) {
            throw std::invalid_argument("the Clifford sampler supports depolarizing sites only");
        }
        auto rx = images_.image(s.layer, s.qubit, false);
        basis.insert(rx.words, rx.first_word);
        if (options_.drop_last_generator && k + 1 == b.sites.size()) {
            continue;
        }
        auto rz = images_.image(s.layer, s.qubit, true);
        basis.insert(rz.words, rz.first_word);
    }

    ComponentPlan plan;
    plan.depolarized.resize(n);
    for (size_t q = 0; q < n; q++) {
        plan.depolarized[q] = basis.contains_unit(2 * q) && basis.contains_unit(2 * q + 1);
    }
    plan.components = build_components(circuit_, plan.depolarized);

    std::vector<int32_t> comp_of(n, -1);
    std::vector<uint32_t> pos_of(n, 0);
    for (size_t j = 0; j < plan.components.size(); j++) {
        const auto &qs = plan.components[j].qubits;
        for (size_t k = 0; k < qs.size(); k++) {
            comp_of[qs[k]] = static_cast<int32_t>(j);
            pos_of[qs[k]] = static_cast<uint32_t>(k);
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (comp_of[q] < 0) {
            plan.outside.push_back(q);
        }
    }

    // Rows of the error basis restricted to each component, written as R Lambda.
    std::vector<Gf2Matrix> restricted;
    for (const Component &comp : plan.components) {
        restricted.emplace_back(2 * comp.qubits.size());
    }
    std::vector<std::pair<int32_t, size_t>> touched;
    for (size_t r = 0; r < basis.rank(); r++) {
        auto view = basis.row(r);
        touched.clear();
        for (size_t w = 0; w < view.words.size(); w++) {
            uint64_t bits = view.words[w];
            while (bits) {
                size_t col = ((view.first_word + w) << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                int32_t j = comp_of[col >> 1];
                if (j >= 0) {
                    touched.emplace_back(j, col);
                }
            }
        }
        if (touched.empty()) {
            continue;
        }
        std::stable_sort(touched.begin(), touched.end(), [](const auto &a, const auto &b) {
            return a.first < b.first;
        });
        size_t i = 0;
        while (i < touched.size()) {
            int32_t j = touched[i].first;
            size_t m = plan.components[j].qubits.size();
            BitVector v(2 * m);
            for (; i < touched.size() && touched[i].first == j; i++) {
                size_t col = touched[i].second;
                size_t pos = pos_of[col >> 1];
                // Lambda swaps the X and Z halves.
                v.set((col & 1) ? pos : m + pos, true);
            }
            restricted[j].append_row(std::move(v));
        }
    }
    for (auto &r : restricted) {
        plan.generators.push_back(nullspace_basis(r));
    }
    return plan;
}

std::vector<ComponentDistribution> CliffordSampler::distributions(const ComponentPlan &plan) const {
    std::vector<ComponentDistribution> out;
    out.reserve(plan.components.size());
    for (size_t j = 0; j < plan.components.size(); j++) {
        out.emplace_back(circuit_, input_, basis_, plan.components[j], plan.generators[j], options_.cutoff_log2);
    }
    return out;
}

std::vector<double> CliffordSampler::distribution_for(const ErrorConfiguration &b) const {
    size_t n = circuit_.num_qubits();
    if (n > 20) {
        throw std::invalid_argument("full distributions are limited to 20 qubits");
    }
    ComponentPlan plan = plan_for(b);
    auto dists = distributions(plan);
    std::vector<std::vector<double>> tables;
    for (const auto &d : dists) {
        tables.push_back(d.full_distribution());
    }
    double uniform = std::ldexp(1.0, -static_cast<int>(plan.outside.size()));
    std::vector<double> out(size_t{1} << n);
    for (size_t idx = 0; idx < out.size(); idx++) {
        double p = uniform;
        for (size_t j = 0; j < dists.size(); j++) {
            const auto &qs = dists[j].qubits();
            size_t local = 0;
            for (size_t k = 0; k < qs.size(); k++) {
                local |= ((idx >> qs[k]) & 1) << k;
            }
            p *= tables[j][local];
        }
        out[idx] = p;
    }
    return out;
}

ShotResult CliffordSampler::sample(CounterRng &rng) const {
    auto start = std::chrono::steady_clock::now();
    size_t n = circuit_.num_qubits();
    ShotResult result;
    result.bits.assign(n, 0);
    ErrorConfiguration b = sample_configuration(rng);
    ComponentPlan plan = plan_for(b);
    RunReport &report = result.report;
    report.num_depolarized = plan.num_depolarized();
    for (size_t j = 0; j < plan.components.size(); j++) {
        report.component_sizes.push_back(plan.components[j].qubits.size());
        report.component_ranks.push_back(plan.generators[j].num_rows());
    }
    if (report.max_rank() > options_.cutoff_log2) {
        report.aborted = true;
        for (size_t q = 0; q < n; q++) {
            result.bits[q] = rng.bit();
        }
    } else {
        for (size_t j = 0; j < plan.components.size(); j++) {
            ComponentDistribution dist(
                circuit_, input_, basis_, plan.components[j], plan.generators[j], options_.cutoff_log2);
            auto local = dist.sample(rng);
            for (size_t k = 0; k < local.size(); k++) {
                result.bits[dist.qubits()[k]] = local[k];
            }
        }
        for (uint32_t q : plan.outside) {
            result.bits[q] = rng.bit();
        }
    }
    report.wall_micros = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
    return result;
}

ShotResult sample_output(
    const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const NoiseModel &model,
    CounterRng &rng, size_t cutoff_log2) {
    SamplerOptions options;
    options.cutoff_log2 = cutoff_log2;
    return CliffordSampler(c, input, basis, model, options).sample(rng);
}

std::string bits_to_hex(std::span<const uint8_t> bits) {
    static const char digits[] = "0123456789abcdef";
    size_t num_digits = std::max<size_t>(1, (bits.size() + 3) / 4);
    std::string out(num_digits, '0');
    for (size_t d = 0; d < num_digits; d++) {
        unsigned v = 0;
        for (size_t k = 0; k < 4; k++) {
            size_t q = 4 * d + k;
            if (q < bits.size() && bits[q]) {
                v |= 1u << k;
            }
        }
        out[num_digits - 1 - d] = digits[v];
    }
    return out;
}

}  // namespace cliffsim
