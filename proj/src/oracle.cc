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

#include "cliffsim/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliffsim/errors.h"

namespace cliffsim {

namespace {

constexpr Complex kI{0, 1};

void check_size(size_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense oracle limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " + std::to_string(n));
    }
}

std::vector<Complex> diagonal_matrix(std::initializer_list<Complex> entries) {
    size_t k = entries.size();
    std::vector<Complex> u(k * k);
    size_t i = 0;
    for (Complex e : entries) {
        u[i * k + i] = e;
        i++;
    }
    return u;
}

/// 4x4 permutation matrix from a map on local indices (bit 0 = first qubit).
std::vector<Complex> permutation_matrix(size_t k, size_t (*map)(size_t)) {
    std::vector<Complex> u(k * k);
    for (size_t i = 0; i < k; i++) {
        u[map(i) * k + i] = 1;
    }
    return u;
}

size_t cnot_map(size_t i) {
    size_t c = i & 1;
    size_t t = (i >> 1) & 1;
    return c | ((t ^ c) << 1);
}

size_t swap_map(size_t i) {
    return ((i & 1) << 1) | ((i >> 1) & 1);
}

void apply_noise_layer(
    DensityMatrix &rho, size_t layer, const NoiseModel &model, const ErrorConfiguration *config) {
    if (config == nullptr) {
        for (size_t q = 0; q < rho.num_qubits(); q++) {
            rho.apply_channel(q, model);
        }
        return;
    }
    for (const NoiseSite &s : config->sites) {
        if (s.layer == layer) {
            rho.apply_event(s.qubit, s.event);
        }
    }
}

void check_config(const ErrorConfiguration *config, size_t n, size_t depth) {
    if (config != nullptr && (config->num_qubits != n || config->depth != depth)) {
        throw std::invalid_argument("error configuration does not fit the circuit");
    }
}

void check_distribution(const std::vector<double> &p) {
    double total = 0;
    for (double v : p) {
        if (v < -1e-9) {
            throw InternalInvariantError("oracle produced a negative probability");
        }
        total += v;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw InternalInvariantError("oracle distribution does not sum to one");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(size_t num_qubits)
    : num_qubits_(num_qubits), dim_(size_t{1} << num_qubits), data_(dim_ * dim_) {
    check_size(num_qubits);
    data_[0] = 1;
}

DensityMatrix DensityMatrix::from_product(const ProductState &state) {
    state.validate();
    size_t n = state.qubits.size();
    DensityMatrix rho(n);
    std::vector<std::array<Complex, 4>> factors;
    for (const BlochVector &b : state.qubits) {
        factors.push_back({(1 + b.z) / 2, Complex(b.x, -b.y) / 2.0, Complex(b.x, b.y) / 2.0, (1 - b.z) / 2});
    }
    for (size_t r = 0; r < rho.dim_; r++) {
        for (size_t c = 0; c < rho.dim_; c++) {
            Complex v = 1;
            for (size_t q = 0; q < n; q++) {
                v *= factors[q][((r >> q) & 1) * 2 + ((c >> q) & 1)];
            }
            rho.at(r, c) = v;
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> amplitudes) {
    size_t n = static_cast<size_t>(std::countr_zero(amplitudes.size()));
    if (amplitudes.size() != size_t{1} << n) {
        throw std::invalid_argument("state vector length is not a power of two");
    }
    DensityMatrix rho(n);
    for (size_t r = 0; r < rho.dim_; r++) {
        for (size_t c = 0; c < rho.dim_; c++) {
            rho.at(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
        }
    }
    return rho;
}

void DensityMatrix::apply_unitary(std::span<const size_t> qubits, std::span<const Complex> u) {
    size_t k = qubits.size();
    size_t span = size_t{1} << k;
    if (k == 0 || k > 3 || u.size() != span * span) {
        throw std::invalid_argument("unitary must act on 1 to 3 qubits");
    }
    size_t mask = 0;
    std::array<size_t, 8> offsets{};
    for (size_t j = 0; j < k; j++) {
        if (qubits[j] >= num_qubits_ || (mask >> qubits[j]) & 1) {
            throw std::invalid_argument("bad qubit list for unitary");
        }
        mask |= size_t{1} << qubits[j];
    }
    for (size_t i = 0; i < span; i++) {
        for (size_t j = 0; j < k; j++) {
            if ((i >> j) & 1) {
                offsets[i] |= size_t{1} << qubits[j];
            }
        }
    }
    std::array<Complex, 8> in{};
    for (size_t base = 0; base < dim_; base++) {
        if (base & mask) {
            continue;
        }
        // Left multiplication acts on rows.
        for (size_t c = 0; c < dim_; c++) {
            for (size_t i = 0; i < span; i++) {
                in[i] = at(base | offsets[i], c);
            }
            for (size_t i = 0; i < span; i++) {
                Complex acc = 0;
                for (size_t j = 0; j < span; j++) {
                    acc += u[i * span + j] * in[j];
                }
                at(base | offsets[i], c) = acc;
            }
        }
        // Right multiplication by U^dagger acts on columns.
        for (size_t r = 0; r < dim_; r++) {
            for (size_t i = 0; i < span; i++) {
                in[i] = at(r, base | offsets[i]);
            }
            for (size_t i = 0; i < span; i++) {
                Complex acc = 0;
                for (size_t j = 0; j < span; j++) {
                    acc += in[j] * std::conj(u[i * span + j]);
                }
                at(r, base | offsets[i]) = acc;
            }
        }
    }
}

void DensityMatrix::apply_gate(const CliffordGate &gate) {
    std::array<size_t, 2> qs{gate.qubits[0], gate.qubits[1]};
    std::span<const size_t> one(qs.data(), 1);
    std::span<const size_t> two(qs.data(), 2);
    double h = std::numbers::sqrt2 / 2;
    switch (gate.kind) {
        case GateKind::H: {
            std::array<Complex, 4> u{h, h, h, -h};
            apply_unitary(one, u);
            break;
        }
        case GateKind::S:
            apply_unitary(one, diagonal_matrix({1, kI}));
            break;
        case GateKind::SDG:
            apply_unitary(one, diagonal_matrix({1, -kI}));
            break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            apply_pauli(qs[0], gate_name(gate.kind)[0]);
            break;
        case GateKind::CNOT:
            apply_unitary(two, permutation_matrix(4, cnot_map));
            break;
        case GateKind::CZ:
            apply_unitary(two, diagonal_matrix({1, 1, 1, -1}));
            break;
        case GateKind::SWAP:
            apply_unitary(two, permutation_matrix(4, swap_map));
            break;
    }
}

void DensityMatrix::apply_gate(const IqpGate &gate) {
    std::array<size_t, 3> qs{gate.qubits[0], gate.qubits[1], gate.qubits[2]};
    std::span<const size_t> all(qs.data(), gate.arity());
    Complex w = std::polar(1.0, gate.theta);
    switch (gate.kind) {
        case IqpGateKind::Phase:
            apply_unitary(all, diagonal_matrix({1, w}));
            break;
        case IqpGateKind::CPhase:
            apply_unitary(all, diagonal_matrix({1, 1, 1, w}));
            break;
        case IqpGateKind::CCZ:
            apply_unitary(all, diagonal_matrix({1, 1, 1, 1, 1, 1, 1, -1}));
            break;
        case IqpGateKind::CNOT:
            apply_unitary(all, permutation_matrix(4, cnot_map));
            break;
    }
}

void DensityMatrix::apply_pauli(size_t q, char pauli) {
    std::array<size_t, 1> qs{q};
    auto m = pauli_matrix_1q(pauli);
    apply_unitary(qs, m);
}

void DensityMatrix::project_pauli(size_t q, char pauli) {
    DensityMatrix other = *this;
    other.apply_pauli(q, pauli);
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] = (data_[k] + other.data_[k]) * 0.5;
    }
}

void DensityMatrix::maximally_mix(size_t q) {
    project_pauli(q, 'Z');
    project_pauli(q, 'X');
}

void DensityMatrix::apply_channel(size_t q, const NoiseModel &model) {
    model.validate();
    if (model.kind == NoiseModel::Kind::Depolarizing) {
        DensityMatrix mixed = *this;
        mixed.maximally_mix(q);
        for (size_t k = 0; k < data_.size(); k++) {
            data_[k] = (1 - model.gamma) * data_[k] + model.gamma * mixed.data_[k];
        }
        return;
    }
    std::vector<Complex> out(data_.size());
    double pi = 1 - model.px - model.py - model.pz;
    for (size_t k = 0; k < data_.size(); k++) {
        out[k] = pi * data_[k];
    }
    for (auto [p, name] : {std::pair{model.px, 'X'}, std::pair{model.py, 'Y'}, std::pair{model.pz, 'Z'}}) {
        if (p == 0) {
            continue;
        }
        DensityMatrix flipped = *this;
        flipped.apply_pauli(q, name);
        for (size_t k = 0; k < data_.size(); k++) {
            out[k] += p * flipped.data_[k];
        }
    }
    data_ = std::move(out);
}

void DensityMatrix::apply_event(size_t q, NoiseEvent event) {
    switch (event) {
        case NoiseEvent::Depolarize:
            maximally_mix(q);
            break;
        case NoiseEvent::XInPlace:
            apply_pauli(q, 'X');
            break;
        case NoiseEvent::ZDet:
            apply_pauli(q, 'Z');
            break;
        case NoiseEvent::YDet:
            apply_pauli(q, 'Y');
            break;
        case NoiseEvent::ProjZ:
            project_pauli(q, 'Z');
            break;
        case NoiseEvent::XProjZ:
            project_pauli(q, 'Z');
            apply_pauli(q, 'X');
            break;
    }
}

Complex DensityMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += at(k, k);
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> out(dim_);
    for (size_t k = 0; k < dim_; k++) {
        out[k] = at(k, k).real();
    }
    return out;
}

std::vector<double> DensityMatrix::measure(const MeasurementBasis &basis) const {
    if (basis.axes.size() != num_qubits_) {
        throw std::invalid_argument("measurement basis size mismatch");
    }
    DensityMatrix rotated = *this;
    for (size_t q = 0; q < num_qubits_; q++) {
        const BlochVector &a = basis.axes[q];
        if (a.x == 0 && a.y == 0 && a.z == 1) {
            continue;
        }
        auto w = rotation_to_axis(a);
        std::array<Complex, 4> v{std::conj(w[0]), std::conj(w[2]), std::conj(w[1]), std::conj(w[3])};
        std::array<size_t, 1> qs{q};
        rotated.apply_unitary(qs, v);
    }
    return rotated.diagonal();
}

std::array<Complex, 4> pauli_matrix_1q(char pauli) {
    switch (pauli) {
        case 'I':
            return {1, 0, 0, 1};
        case 'X':
            return {0, 1, 1, 0};
        case 'Y':
            return {0, -kI, kI, 0};
        case 'Z':
            return {1, 0, 0, -1};
    }
    throw std::invalid_argument(std::string("not a Pauli: ") + pauli);
}

std::array<Complex, 4> rotation_to_axis(const BlochVector &axis) {
    double theta = std::acos(std::clamp(axis.z / axis.norm(), -1.0, 1.0));
    double phi = std::atan2(axis.y, axis.x);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {c, -std::polar(s, -phi), std::polar(s, phi), c};
}

std::vector<Complex> dense_pauli(const PauliString &p) {
    size_t n = p.num_qubits();
    check_size(n);
    size_t dim = size_t{1} << n;
    std::vector<Complex> out(dim * dim);
    Complex global = std::pow(kI, static_cast<int>(p.phase));
    std::vector<std::array<Complex, 4>> factors;
    for (size_t q = 0; q < n; q++) {
        factors.push_back(pauli_matrix_1q(p.at(q)));
    }
    for (size_t c = 0; c < dim; c++) {
        // Each column of a Pauli matrix has exactly one nonzero entry.
        size_t r = c;
        Complex v = global;
        for (size_t q = 0; q < n; q++) {
            if (p.xs[q]) {
                r ^= size_t{1} << q;
            }
            v *= factors[q][((r >> q) & 1) * 2 + ((c >> q) & 1)];
        }
        out[r * dim + c] = v;
    }
    return out;
}

std::vector<double> exact_noisy_distribution(
    const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const NoiseModel &model,
    const ErrorConfiguration *config) {
    check_size(c.num_qubits());
    check_config(config, c.num_qubits(), c.depth());
    DensityMatrix rho = DensityMatrix::from_product(input);
    apply_noise_layer(rho, 0, model, config);
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const CliffordGate &g : c.layer(t)) {
            rho.apply_gate(g);
        }
        apply_noise_layer(rho, t, model, config);
    }
    auto p = rho.measure(basis);
    check_distribution(p);
    return p;
}

std::vector<double> exact_iqp_distribution(
    const IqpCircuit &c, const NoiseModel &model, const ErrorConfiguration *config) {
    size_t n = c.num_qubits();
    check_size(n);
    check_config(config, n, c.depth());
    DensityMatrix rho = DensityMatrix::from_product(ProductState::all_plus(n));
    apply_noise_layer(rho, 0, model, config);
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const IqpGate &g : c.layer(t)) {
            rho.apply_gate(g);
        }
        apply_noise_layer(rho, t, model, config);
    }
    MeasurementBasis hadamard{std::vector<BlochVector>(n, BlochVector{1, 0, 0})};
    auto p = rho.measure(hadamard);
    check_distribution(p);
    return p;
}

std::vector<double> exact_ccc_distribution(
    const SingleQubitUnitary &u, const CliffordCircuit &c, const NoiseModel &model,
    const ErrorConfiguration *config) {
    if (!u.is_unitary()) {
        throw std::invalid_argument("conjugating matrix is not unitary");
    }
    size_t n = c.num_qubits();
    check_size(n);
    check_config(config, n, c.depth());
    std::array<Complex, 4> dag{std::conj(u.m[0]), std::conj(u.m[2]), std::conj(u.m[1]), std::conj(u.m[3])};
    DensityMatrix rho(n);
    for (size_t q = 0; q < n; q++) {
        std::array<size_t, 1> qs{q};
        rho.apply_unitary(qs, dag);
    }
    apply_noise_layer(rho, 0, model, config);
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const CliffordGate &g : c.layer(t)) {
            rho.apply_gate(g);
        }
        apply_noise_layer(rho, t, model, config);
    }
    for (size_t q = 0; q < n; q++) {
        std::array<size_t, 1> qs{q};
        rho.apply_unitary(qs, u.m);
    }
    auto p = rho.diagonal();
    check_distribution(p);
    return p;
}

std::vector<Complex> iqp_state_vector(const IqpCircuit &c, std::vector<Complex> psi, std::span<const NoiseSite> x_events) {
    size_t n = c.num_qubits();
    if (n > 20 || psi.size() != size_t{1} << n) {
        throw std::invalid_argument("state vector does not match the circuit");
    }
    auto bit = [](size_t k, size_t q) {
        return (k >> q) & 1;
    };
    auto apply_x_layer = [&](size_t layer) {
        for (const NoiseSite &s : x_events) {
            if (s.layer != layer) {
                continue;
            }
            std::vector<Complex> out(psi.size());
            for (size_t k = 0; k < psi.size(); k++) {
                out[k ^ (size_t{1} << s.qubit)] = psi[k];
            }
            psi = std::move(out);
        }
    };
    apply_x_layer(0);
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const IqpGate &g : c.layer(t)) {
            std::vector<Complex> out(psi.size());
            for (size_t k = 0; k < psi.size(); k++) {
                size_t a = g.qubits[0];
                size_t b = g.qubits[1];
                switch (g.kind) {
                    case IqpGateKind::Phase:
                        out[k] = bit(k, a) ? psi[k] * std::polar(1.0, g.theta) : psi[k];
                        break;
                    case IqpGateKind::CPhase:
                        out[k] = bit(k, a) && bit(k, b) ? psi[k] * std::polar(1.0, g.theta) : psi[k];
                        break;
                    case IqpGateKind::CCZ:
                        out[k] = bit(k, a) && bit(k, b) && bit(k, g.qubits[2]) ? -psi[k] : psi[k];
                        break;
                    case IqpGateKind::CNOT:
                        out[bit(k, a) ? k ^ (size_t{1} << b) : k] = psi[k];
                        break;
                }
            }
            psi = std::move(out);
        }
        apply_x_layer(t);
    }
    return psi;
}

Tvd tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("distributions have different lengths");
    }
    double total = 0;
    for (size_t k = 0; k < p.size(); k++) {
        total += std::abs(p[k] - q[k]);
    }
    return Tvd{total, total / 2};
}

SwCensus enumerate_S_w(const CliffordCircuit &c, std::span<const uint32_t> region, size_t w) {
    size_t n = c.num_qubits();
    size_t a = region.size();
    if (a > 8) {
        throw std::invalid_argument("S_w census limited to regions of 8 qubits");
    }
    std::vector<uint8_t> inside(n);
    for (uint32_t q : region) {
        if (q >= n) {
            throw std::out_of_range("region qubit out of range");
        }
        inside[q] = 1;
    }
    SwCensus census;
    census.layers = c.depth() + 1;
    double binom = 1;
    for (size_t k = 0; k < w; k++) {
        binom = binom * static_cast<double>(a - k) / static_cast<double>(k + 1);
    }
    census.bound = w > a ? 0 : static_cast<double>(census.layers) * binom * std::pow(3.0, static_cast<double>(w));
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    auto confined = [&](const PauliString &p, size_t &weight_out) {
        size_t wt = 0;
        for (size_t q = 0; q < n; q++) {
            if (p.xs[q] || p.zs[q]) {
                if (!inside[q]) {
                    return false;
                }
                wt++;
            }
        }
        weight_out = wt;
        return true;
    };
    size_t total = size_t{1} << (2 * a);
    for (size_t code = 0; code < total; code++) {
        PauliString p(n);
        for (size_t k = 0; k < a; k++) {
            p.set(region[k], kLetters[(code >> (2 * k)) & 3]);
        }
        size_t wt = 0;
        bool ok = confined(p, wt);
        size_t min_weight = wt;
        for (size_t t = 1; ok && t <= c.depth(); t++) {
            for (const CliffordGate &g : c.layer(t)) {
                cliffsim::apply_gate(p, g);
            }
            ok = confined(p, wt);
            min_weight = std::min(min_weight, wt);
        }
        if (ok && min_weight == w) {
            census.count++;
        }
    }
    return census;
}

double collision_probability(const CliffordCircuit &c, const NoiseModel &model, const MeasurementBasis &basis) {
    size_t n = c.num_qubits();
    if (n > 6) {
        throw std::invalid_argument("collision probability limited to 6 qubits");
    }
    double total = 0;
    for (size_t y = 0; y < (size_t{1} << n); y++) {
        ProductState input;
        for (size_t q = 0; q < n; q++) {
            input.qubits.push_back(BlochVector{0, 0, (y >> q) & 1 ? -1.0 : 1.0});
        }
        for (double p : exact_noisy_distribution(c, input, basis, model)) {
            total += p * p;
        }
    }
    return std::ldexp(total, -static_cast<int>(n));
}

double anticoncentration_bound(size_t n, size_t layers, double gamma) {
    double decay = std::pow(1 - gamma, static_cast<double>(layers));
    double l = static_cast<double>(layers);
    return std::ldexp(1 + decay * l * std::exp(3 * decay * static_cast<double>(n)), -static_cast<int>(n));
}

}  // namespace cliffsim
