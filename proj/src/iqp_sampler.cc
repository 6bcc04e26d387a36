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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cliffsim/errors.h"

namespace cliffsim {

namespace {

BitVector propagate_z_back(const IqpCircuit &c, size_t layer, size_t qubit) {
    BitVector v = BitVector::unit(c.num_qubits(), qubit);
    for (size_t t = layer; t >= 1; t--) {
        for (const IqpGate &g : c.layer(t)) {
            if (g.kind == IqpGateKind::CNOT && v[g.qubits[1]]) {
                v.flip(g.qubits[0]);
            }
        }
    }
    return v;
}

bool carries_x(NoiseEvent e) {
    return e == NoiseEvent::XInPlace || e == NoiseEvent::YDet || e == NoiseEvent::XProjZ;
}

void check_configuration(const IqpCircuit &c, const ErrorConfiguration &b) {
    if (b.num_qubits != c.num_qubits() || b.depth != c.depth()) {
        throw std::invalid_argument("error configuration does not fit the circuit");
    }
    for (const NoiseSite &s : b.sites) {
        if (s.event == NoiseEvent::Depolarize) {
            throw std::invalid_argument("IQP configurations use decomposed Pauli-channel events");
        }
    }
}

}  // namespace

PropagatedErrorSet propagate_z_errors(const IqpCircuit &c, const ErrorConfiguration &b) {
    check_configuration(c, b);
    size_t n = c.num_qubits();
    PropagatedErrorSet out(n);
    for (const NoiseSite &s : b.sites) {
        if (s.event == NoiseEvent::ProjZ || s.event == NoiseEvent::XProjZ) {
            PauliString p(n);
            p.zs = propagate_z_back(c, s.layer, s.qubit);
            out.add(std::move(p));
        }
    }
    return out;
}

BitVector input_sign_flips(const IqpCircuit &c, const ErrorConfiguration &b) {
    check_configuration(c, b);
    BitVector flips(c.num_qubits());
    for (const NoiseSite &s : b.sites) {
        if (s.event == NoiseEvent::ZDet || s.event == NoiseEvent::YDet) {
            flips ^= propagate_z_back(c, s.layer, s.qubit);
        }
    }
    return flips;
}

std::vector<uint8_t> depolarized_qubits_z(const PropagatedErrorSet &m) {
    size_t n = m.num_qubits;
    EchelonBasis basis(n);
    for (const PauliString &g : m.generators) {
        if (g.xs.any()) {
            throw InternalInvariantError("propagated IQP error has an X part");
        }
        basis.insert(g.zs);
    }
    std::vector<uint8_t> flags(n);
    for (size_t q = 0; q < n; q++) {
        flags[q] = basis.contains_unit(q);
    }
    return flags;
}

Gf2Matrix centralizer_x_basis(const PropagatedErrorSet &m, size_t n) {
    Gf2Matrix zparts(n);
    for (const PauliString &g : m.generators) {
        if (g.xs.any()) {
            throw InternalInvariantError("propagated IQP error has an X part");
        }
        zparts.append_row(g.zs);
    }
    return nullspace_basis(zparts);
}

void IqpConverter::apply(std::span<uint64_t> bits) const {
    auto get = [&](size_t q) {
        return (bits[q >> 6] >> (q & 63)) & 1;
    };
    auto put = [&](size_t q, uint64_t v) {
        bits[q >> 6] = (bits[q >> 6] & ~(uint64_t{1} << (q & 63))) | (v << (q & 63));
    };
    for (size_t k = ops.size(); k-- > 0;) {
        const ColumnOp &op = ops[k];
        uint64_t a = get(op.target);
        uint64_t b = get(op.source);
        if (op.kind == ColumnOp::Kind::Swap) {
            put(op.target, b);
            put(op.source, a);
        } else {
            put(op.target, a ^ b);
        }
    }
}

uint64_t IqpConverter::apply(uint64_t bits) const {
    apply(std::span<uint64_t>(&bits, 1));
    return bits;
}

IqpConverter iqp_converter(const Gf2Matrix &g) {
    ColumnReduction red = column_reduce_with_ops(g);
    if (red.rank != g.num_rows()) {
        throw std::invalid_argument("converter generators are dependent");
    }
    return IqpConverter{g.num_cols(), red.rank, std::move(red.ops)};
}

SparseState::SparseState(size_t num_qubits) : num_qubits_(num_qubits), words_(std::max<size_t>(1, (num_qubits + 63) / 64)) {
}

void SparseState::push(std::span<const uint64_t> key, std::complex<double> amp) {
    if (key.size() != words_) {
        throw std::invalid_argument("key width mismatch");
    }
    keys_.insert(keys_.end(), key.begin(), key.end());
    amps_.push_back(amp);
}

void SparseState::apply_phase(size_t q, double theta) {
    std::complex<double> w = std::polar(1.0, theta);
    for (size_t e = 0; e < amps_.size(); e++) {
        if (bit(e, q)) {
            amps_[e] *= w;
        }
    }
}

void SparseState::apply_cphase(size_t a, size_t b, double theta) {
    std::complex<double> w = std::polar(1.0, theta);
    for (size_t e = 0; e < amps_.size(); e++) {
        if (bit(e, a) && bit(e, b)) {
            amps_[e] *= w;
        }
    }
}

void SparseState::apply_ccz(size_t a, size_t b, size_t c) {
    for (size_t e = 0; e < amps_.size(); e++) {
        if (bit(e, a) && bit(e, b) && bit(e, c)) {
            amps_[e] = -amps_[e];
        }
    }
}

void SparseState::apply_cnot(size_t control, size_t target) {
    for (size_t e = 0; e < amps_.size(); e++) {
        if (bit(e, control)) {
            flip(e, target);
        }
    }
}

void SparseState::apply_x(size_t q) {
    for (size_t e = 0; e < amps_.size(); e++) {
        flip(e, q);
    }
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void SparseState::sort() {
    std::vector<size_t> order(amps_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        for (size_t w = words_; w-- > 0;) {
            uint64_t ka = keys_[a * words_ + w];
            uint64_t kb = keys_[b * words_ + w];
            if (ka != kb) {
                return ka < kb;
            }
        }
        return false;
    });
    std::vector<uint64_t> keys(keys_.size());
    std::vector<std::complex<double>> amps(amps_.size());
    for (size_t k = 0; k < order.size(); k++) {
        std::copy_n(keys_.begin() + order[k] * words_, words_, keys.begin() + k * words_);
        amps[k] = amps_[order[k]];
    }
    keys_ = std::move(keys);
    amps_ = std::move(amps);
}

std::vector<std::complex<double>> SparseState::dense() const {
    if (num_qubits_ > 20) {
        throw std::invalid_argument("dense view limited to 20 qubits");
    }
    std::vector<std::complex<double>> out(size_t{1} << num_qubits_);
    for (size_t e = 0; e < amps_.size(); e++) {
        out[keys_[e * words_]] += amps_[e];
    }
    return out;
}

std::vector<double> SparseState::hadamard_distribution() const {
    if (num_qubits_ > 16) {
        throw std::invalid_argument("Hadamard-basis distribution limited to 16 qubits");
    }
    auto a = dense();
    for (size_t h = 1; h < a.size(); h <<= 1) {
        for (size_t i = 0; i < a.size(); i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                auto x = a[j];
                auto y = a[j + h];
                a[j] = (x + y) * std::sqrt(0.5);
                a[j + h] = (x - y) * std::sqrt(0.5);
            }
        }
    }
    std::vector<double> out(a.size());
    for (size_t k = 0; k < a.size(); k++) {
        out[k] = std::norm(a[k]);
    }
    return out;
}

std::vector<uint8_t> SparseState::sample_hadamard(CounterRng &rng) {
    sort();
    size_t m = num_qubits_;
    size_t count = amps_.size();
    std::vector<uint8_t> out(m);
    std::vector<int8_t> sign(count, 1);
    // Entries e and e+1 agree on bits >= from.
    auto same_high = [&](size_t e, size_t from) {
        for (size_t w = from >> 6; w < words_; w++) {
            uint64_t mask = w == (from >> 6) ? ~uint64_t{0} << (from & 63) : ~uint64_t{0};
            if (((keys_[e * words_ + w] ^ keys_[(e + 1) * words_ + w]) & mask) != 0) {
                return false;
            }
        }
        return true;
    };
    for (size_t k = 0; k < m; k++) {
        double q0 = 0;
        double q1 = 0;
        std::complex<double> a0 = 0;
        std::complex<double> a1 = 0;
        for (size_t e = 0; e < count; e++) {
            std::complex<double> v = amps_[e] * static_cast<double>(sign[e]);
            if (bit(e, k)) {
                a1 += v;
            } else {
                a0 += v;
            }
            if (e + 1 == count || (k + 1 < m ? !same_high(e, k + 1) : false)) {
                q0 += std::norm(a0 + a1);
                q1 += std::norm(a0 - a1);
                a0 = a1 = 0;
            }
        }
        if (!(q0 + q1 > 0)) {
            throw InternalInvariantError("sampled a prefix of zero probability");
        }
        bool outcome = rng.uniform() >= q0 / (q0 + q1);
        out[k] = outcome;
        if (outcome) {
            for (size_t e = 0; e < count; e++) {
                if (bit(e, k)) {
                    sign[e] = static_cast<int8_t>(-sign[e]);
                }
            }
        }
    }
    return out;
}

SparseState converter_state(const IqpConverter &conv, std::span<const uint8_t> sigma, std::span<const uint8_t> r) {
    size_t n = conv.num_qubits;
    size_t g = conv.rank;
    if (sigma.size() != g || r.size() != n - g) {
        throw std::invalid_argument("converter state arguments have the wrong size");
    }
    if (g > 40) {
        throw std::invalid_argument("converter group too large");
    }
    SparseState psi(n);
    std::vector<uint64_t> key(psi.words_per_key());
    double amp = std::ldexp(1.0, -static_cast<int>(g)) * std::pow(2.0, g / 2.0);
    for (uint64_t i = 0; i < (uint64_t{1} << g); i++) {
        std::fill(key.begin(), key.end(), 0);
        bool odd = false;
        for (size_t k = 0; k < g; k++) {
            if ((i >> k) & 1) {
                key[k >> 6] |= uint64_t{1} << (k & 63);
                odd ^= sigma[k] != 0;
            }
        }
        for (size_t k = 0; k < n - g; k++) {
            if (r[k]) {
                key[(g + k) >> 6] |= uint64_t{1} << ((g + k) & 63);
            }
        }
        conv.apply(key);
        psi.push(key, odd ? -amp : amp);
    }
    return psi;
}

void evolve_sparse_state(const IqpCircuit &c, SparseState &psi, std::span<const NoiseSite> x_events) {
    if (psi.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("state size does not match the circuit");
    }
    size_t next = 0;
    auto apply_events = [&](size_t layer) {
        while (next < x_events.size() && x_events[next].layer == layer) {
            psi.apply_x(x_events[next].qubit);
            next++;
        }
        if (next < x_events.size() && x_events[next].layer < layer) {
            throw std::invalid_argument("X events must be sorted by layer");
        }
    };
    apply_events(0);
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const IqpGate &g : c.layer(t)) {
            switch (g.kind) {
                case IqpGateKind::Phase:
                    psi.apply_phase(g.qubits[0], g.theta);
                    break;
                case IqpGateKind::CPhase:
                    psi.apply_cphase(g.qubits[0], g.qubits[1], g.theta);
                    break;
                case IqpGateKind::CCZ:
                    psi.apply_ccz(g.qubits[0], g.qubits[1], g.qubits[2]);
                    break;
                case IqpGateKind::CNOT:
                    psi.apply_cnot(g.qubits[0], g.qubits[1]);
                    break;
            }
        }
        apply_events(t);
    }
    if (next != x_events.size()) {
        throw std::invalid_argument("X event past the circuit depth");
    }
}

size_t IqpPlan::num_depolarized() const {
    return static_cast<size_t>(std::count(depolarized.begin(), depolarized.end(), 1));
}

IqpSampler::IqpSampler(IqpCircuit circuit, NoiseModel model, SamplerOptions options)
    : circuit_(std::move(circuit)), model_(model.as_pauli_channel()), options_(options) {
}

ErrorConfiguration IqpSampler::sample_configuration(CounterRng &rng) const {
    return sample_error_configuration(rng, circuit_.num_qubits(), circuit_.depth(), model_);
}

IqpPlan IqpSampler::plan_for(const ErrorConfiguration &b) const {
    size_t n = circuit_.num_qubits();
    PropagatedErrorSet m = propagate_z_errors(circuit_, b);
    IqpPlan plan;
    plan.depolarized = depolarized_qubits_z(m);
    plan.components = build_components(circuit_.interactions(), !circuit_.geometry().has_value(), plan.depolarized);
    std::vector<int32_t> pos_of(n, -1);
    for (const Component &comp : plan.components) {
        for (size_t k = 0; k < comp.qubits.size(); k++) {
            pos_of[comp.qubits[k]] = static_cast<int32_t>(k);
        }
        Gf2Matrix restricted(comp.qubits.size());
        for (const PauliString &g : m.generators) {
            BitVector v(comp.qubits.size());
            for (size_t k = 0; k < comp.qubits.size(); k++) {
                v.set(k, g.zs[comp.qubits[k]]);
            }
            if (v.any()) {
                restricted.append_row(std::move(v));
            }
        }
        plan.generators.push_back(nullspace_basis(restricted));
    }
    for (uint32_t q = 0; q < n; q++) {
        if (pos_of[q] < 0) {
            plan.outside.push_back(q);
        }
    }
    plan.flips = input_sign_flips(circuit_, b);
    for (const NoiseSite &s : b.sites) {
        if (carries_x(s.event)) {
            plan.x_events.push_back(s);
        }
    }
    return plan;
}

IqpCircuit IqpSampler::local_circuit(const Component &comp) const {
    auto local_of = [&](uint32_t q) -> int32_t {
        auto it = std::lower_bound(comp.qubits.begin(), comp.qubits.end(), q);
        return it != comp.qubits.end() && *it == q ? static_cast<int32_t>(it - comp.qubits.begin()) : -1;
    };
    std::vector<std::vector<IqpGate>> layers(circuit_.depth());
    for (size_t t = 1; t <= circuit_.depth(); t++) {
        for (const IqpGate &g : circuit_.layer(t)) {
            IqpGate local = g;
            size_t inside = 0;
            for (size_t k = 0; k < g.arity(); k++) {
                int32_t p = local_of(g.qubits[k]);
                if (p >= 0) {
                    inside++;
                    local.qubits[k] = static_cast<uint32_t>(p);
                }
            }
            if (inside == g.arity()) {
                layers[t - 1].push_back(local);
            } else if (inside > 0) {
                // Qubits of the component on a boundary gate are still maximally mixed and
                // uncorrelated with the rest of the component, so the gate can be dropped.
                for (size_t k = 0; k < g.arity(); k++) {
                    int32_t p = local_of(g.qubits[k]);
                    if (p >= 0 && comp.reach[p] < t) {
                        throw InternalInvariantError("an active gate crosses a component boundary");
                    }
                }
            }
        }
    }
    return IqpCircuit(comp.qubits.size(), std::move(layers));
}

std::vector<NoiseSite> IqpSampler::local_x_events(const IqpPlan &plan, const Component &comp) const {
    std::vector<NoiseSite> out;
    for (const NoiseSite &s : plan.x_events) {
        auto it = std::lower_bound(comp.qubits.begin(), comp.qubits.end(), s.qubit);
        if (it != comp.qubits.end() && *it == s.qubit) {
            out.push_back({s.layer, static_cast<uint32_t>(it - comp.qubits.begin()), s.event});
        }
    }
    return out;
}

std::vector<uint8_t> IqpSampler::local_sigma(const IqpPlan &plan, size_t j) const {
    const Component &comp = plan.components[j];
    const Gf2Matrix &g = plan.generators[j];
    std::vector<uint8_t> sigma(g.num_rows());
    for (size_t r = 0; r < g.num_rows(); r++) {
        bool parity = false;
        for (size_t k = 0; k < comp.qubits.size(); k++) {
            parity ^= g.get(r, k) && plan.flips[comp.qubits[k]];
        }
        sigma[r] = parity;
    }
    return sigma;
}

std::vector<double> IqpSampler::distribution_for(const ErrorConfiguration &b) const {
    size_t n = circuit_.num_qubits();
    if (n > 16) {
        throw std::invalid_argument("full IQP distributions are limited to 16 qubits");
    }
    IqpPlan plan = plan_for(b);
    std::vector<std::vector<double>> tables;
    for (size_t j = 0; j < plan.components.size(); j++) {
        const Component &comp = plan.components[j];
        size_t m = comp.qubits.size();
        IqpConverter conv = iqp_converter(plan.generators[j]);
        IqpCircuit local = local_circuit(comp);
        auto events = local_x_events(plan, comp);
        auto sigma = local_sigma(plan, j);
        size_t free_bits = m - conv.rank;
        std::vector<double> table(size_t{1} << m, 0.0);
        std::vector<uint8_t> r(free_bits);
        for (uint64_t ri = 0; ri < (uint64_t{1} << free_bits); ri++) {
            for (size_t k = 0; k < free_bits; k++) {
                r[k] = (ri >> k) & 1;
            }
            SparseState psi = converter_state(conv, sigma, r);
            evolve_sparse_state(local, psi, events);
            auto p = psi.hadamard_distribution();
            for (size_t k = 0; k < table.size(); k++) {
                table[k] += p[k];
            }
        }
        double scale = std::ldexp(1.0, -static_cast<int>(free_bits));
        for (double &v : table) {
            v *= scale;
        }
        tables.push_back(std::move(table));
    }
    double uniform = std::ldexp(1.0, -static_cast<int>(plan.outside.size()));
    std::vector<double> out(size_t{1} << n);
    for (size_t idx = 0; idx < out.size(); idx++) {
        double p = uniform;
        for (size_t j = 0; j < tables.size(); j++) {
            const auto &qs = plan.components[j].qubits;
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

ShotResult IqpSampler::sample(CounterRng &rng) const {
    auto start = std::chrono::steady_clock::now();
    size_t n = circuit_.num_qubits();
    ShotResult result;
    result.bits.assign(n, 0);
    ErrorConfiguration b = sample_configuration(rng);
    IqpPlan plan = plan_for(b);
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
            const Component &comp = plan.components[j];
            IqpConverter conv = iqp_converter(plan.generators[j]);
            std::vector<uint8_t> r(comp.qubits.size() - conv.rank);
            for (auto &bit : r) {
                bit = rng.bit();
            }
            SparseState psi = converter_state(conv, local_sigma(plan, j), r);
            evolve_sparse_state(local_circuit(comp), psi, local_x_events(plan, comp));
            if (std::abs(psi.norm_squared() - 1) > 1e-9) {
                throw InternalInvariantError("sparse state lost normalization");
            }
            auto local = psi.sample_hadamard(rng);
            for (size_t k = 0; k < local.size(); k++) {
                result.bits[comp.qubits[k]] = local[k];
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

}  // namespace cliffsim
