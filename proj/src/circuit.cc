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

#include "cliffsim/circuit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "cliffsim/errors.h"

namespace cliffsim {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::SDG:
            return "SDG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
    }
    return "?";
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
}

size_t Geometry::num_sites() const {
    size_t total = 1;
    for (size_t e : extents) {
        total *= e;
    }
    return total;
}

std::vector<size_t> Geometry::coordinates(size_t q) const {
    std::vector<size_t> out(extents.size());
    for (size_t k = extents.size(); k-- > 0;) {
        out[k] = q % extents[k];
        q /= extents[k];
    }
    return out;
}

size_t Geometry::manhattan_distance(size_t a, size_t b) const {
    size_t total = 0;
    for (size_t k = extents.size(); k-- > 0;) {
        size_t ca = a % extents[k];
        size_t cb = b % extents[k];
        total += ca > cb ? ca - cb : cb - ca;
        a /= extents[k];
        b /= extents[k];
    }
    return total;
}

InteractionLayers::InteractionLayers(size_t num_qubits, std::vector<std::vector<Interaction>> layers)
    : num_qubits_(num_qubits), layers_(std::move(layers)), owner_(layers_.size() * num_qubits, -1) {
    for (size_t t = 0; t < layers_.size(); t++) {
        for (size_t g = 0; g < layers_[t].size(); g++) {
            const Interaction &it = layers_[t][g];
            for (size_t k = 0; k < it.arity; k++) {
                if (it.qubits[k] >= num_qubits_) {
                    throw std::invalid_argument("interaction qubit out of range");
                }
                int32_t &slot = owner_[t * num_qubits_ + it.qubits[k]];
                if (slot != -1) {
                    throw std::invalid_argument("overlapping interactions in one layer");
                }
                slot = static_cast<int32_t>(g);
            }
        }
    }
}

std::vector<uint32_t> forward_reach_times(const InteractionLayers &layers, size_t q) {
    if (q >= layers.num_qubits()) {
        throw std::out_of_range("qubit out of range");
    }
    std::vector<uint32_t> reach(layers.num_qubits(), kUnreached);
    std::vector<uint32_t> reached{static_cast<uint32_t>(q)};
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
    return reach;
}

std::vector<uint32_t> forward_lightcone(const InteractionLayers &layers, size_t q) {
    auto reach = forward_reach_times(layers, q);
    std::vector<uint32_t> out;
    for (size_t k = 0; k < reach.size(); k++) {
        if (reach[k] != kUnreached) {
            out.push_back(static_cast<uint32_t>(k));
        }
    }
    return out;
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

ProductState ProductState::all_zero(size_t n) {
    return ProductState{std::vector<BlochVector>(n, BlochVector{0, 0, 1})};
}

ProductState ProductState::all_plus(size_t n) {
    return ProductState{std::vector<BlochVector>(n, BlochVector{1, 0, 0})};
}

ProductState ProductState::all_magic(size_t n) {
    return ProductState{std::vector<BlochVector>(n, *named("|A>"))};
}

std::optional<BlochVector> ProductState::named(std::string_view name) {
    if (name == "|0>") {
        return BlochVector{0, 0, 1};
    }
    if (name == "|1>") {
        return BlochVector{0, 0, -1};
    }
    if (name == "|+>") {
        return BlochVector{1, 0, 0};
    }
    if (name == "|->") {
        return BlochVector{-1, 0, 0};
    }
    if (name == "|+i>") {
        return BlochVector{0, 1, 0};
    }
    if (name == "|-i>") {
        return BlochVector{0, -1, 0};
    }
    if (name == "|A>") {
        return BlochVector{std::sqrt(0.5), std::sqrt(0.5), 0};
    }
    return std::nullopt;
}

void ProductState::validate() const {
    for (size_t q = 0; q < qubits.size(); q++) {
        if (!(qubits[q].norm() <= 1 + 1e-12)) {
            throw std::invalid_argument("input Bloch vector of qubit " + std::to_string(q) + " has norm > 1");
        }
    }
}

MeasurementBasis MeasurementBasis::computational(size_t n) {
    return MeasurementBasis{std::vector<BlochVector>(n, BlochVector{0, 0, 1})};
}

void MeasurementBasis::validate() const {
    for (size_t q = 0; q < axes.size(); q++) {
        if (!(std::abs(axes[q].norm() - 1) <= 1e-12)) {
            throw std::invalid_argument("measurement axis of qubit " + std::to_string(q) + " is not a unit vector");
        }
    }
}

namespace {

std::vector<std::vector<Interaction>> interactions_of(const std::vector<std::vector<CliffordGate>> &layers) {
    std::vector<std::vector<Interaction>> out(layers.size());
    for (size_t t = 0; t < layers.size(); t++) {
        for (const auto &g : layers[t]) {
            if (g.arity() == 2) {
                out[t].push_back(Interaction{2, {g.qubits[0], g.qubits[1], 0}});
            }
        }
    }
    return out;
}

std::vector<std::vector<CliffordGate>> checked_layers(
    size_t n, std::vector<std::vector<CliffordGate>> layers, const std::optional<Geometry> &geometry) {
    if (layers.empty()) {
        throw std::invalid_argument("a circuit needs at least one layer");
    }
    if (geometry.has_value() && geometry->num_sites() != n) {
        throw std::invalid_argument("lattice extents do not multiply to the qubit count");
    }
    std::vector<uint8_t> used(n);
    for (size_t t = 0; t < layers.size(); t++) {
        std::fill(used.begin(), used.end(), 0);
        for (const auto &g : layers[t]) {
            for (size_t k = 0; k < g.arity(); k++) {
                if (g.qubits[k] >= n) {
                    throw std::invalid_argument("gate qubit out of range in layer " + std::to_string(t + 1));
                }
                if (used[g.qubits[k]]) {
                    throw std::invalid_argument("overlapping gates in layer " + std::to_string(t + 1));
                }
                used[g.qubits[k]] = 1;
            }
            if (g.arity() == 2) {
                if (g.qubits[0] == g.qubits[1]) {
                    throw std::invalid_argument("two-qubit gate on a single qubit");
                }
                if (geometry.has_value() && !geometry->adjacent(g.qubits[0], g.qubits[1])) {
                    throw std::invalid_argument(
                        std::string(gate_name(g.kind)) + " joins non-neighbors " + std::to_string(g.qubits[0]) +
                        " and " + std::to_string(g.qubits[1]));
                }
            }
        }
    }
    return layers;
}

}  // namespace

CliffordCircuit::CliffordCircuit(
    size_t num_qubits, std::vector<std::vector<CliffordGate>> layers, std::optional<Geometry> geometry)
    : num_qubits_(num_qubits),
      layers_(checked_layers(num_qubits, std::move(layers), geometry)),
      geometry_(std::move(geometry)),
      gate_owner_(layers_.size() * num_qubits, -1),
      interactions_(num_qubits, interactions_of(layers_)) {
    for (size_t t = 0; t < layers_.size(); t++) {
        for (size_t g = 0; g < layers_[t].size(); g++) {
            for (size_t k = 0; k < layers_[t][g].arity(); k++) {
                gate_owner_[t * num_qubits_ + layers_[t][g].qubits[k]] = static_cast<int32_t>(g);
            }
        }
    }
}

void apply_gate(PauliString &p, const CliffordGate &gate) {
    size_t a = gate.qubits[0];
    size_t b = gate.qubits[1];
    bool xa = p.xs[a];
    bool za = p.zs[a];
    bool flip = false;
    switch (gate.kind) {
        case GateKind::H:
            flip = xa && za;
            p.xs.set(a, za);
            p.zs.set(a, xa);
            break;
        case GateKind::S:
            flip = xa && za;
            p.zs.set(a, za ^ xa);
            break;
        case GateKind::SDG:
            flip = xa && !za;
            p.zs.set(a, za ^ xa);
            break;
        case GateKind::X:
            flip = za;
            break;
        case GateKind::Y:
            flip = xa ^ za;
            break;
        case GateKind::Z:
            flip = xa;
            break;
        case GateKind::CNOT: {
            bool xb = p.xs[b];
            bool zb = p.zs[b];
            flip = xa && zb && !(xb ^ za);
            p.xs.set(b, xb ^ xa);
            p.zs.set(a, za ^ zb);
            break;
        }
        case GateKind::CZ: {
            bool xb = p.xs[b];
            bool zb = p.zs[b];
            flip = xa && xb && (za ^ zb);
            p.zs.set(a, za ^ xb);
            p.zs.set(b, zb ^ xa);
            break;
        }
        case GateKind::SWAP: {
            bool xb = p.xs[b];
            bool zb = p.zs[b];
            p.xs.set(a, xb);
            p.zs.set(a, zb);
            p.xs.set(b, xa);
            p.zs.set(b, za);
            break;
        }
    }
    if (flip) {
        p.phase ^= 2;
    }
}

void apply_gate_inverse(PauliString &p, const CliffordGate &gate) {
    CliffordGate inv = gate;
    if (gate.kind == GateKind::S) {
        inv.kind = GateKind::SDG;
    } else if (gate.kind == GateKind::SDG) {
        inv.kind = GateKind::S;
    }
    apply_gate(p, inv);
}

namespace {

void check_pauli_size(const CliffordCircuit &c, const PauliString &p) {
    if (p.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("Pauli string size does not match the circuit");
    }
}

}  // namespace

PauliString conjugate_forward(const CliffordCircuit &c, PauliString p, size_t upto) {
    check_pauli_size(c, p);
    if (upto > c.depth()) {
        throw std::out_of_range("layer index past the circuit depth");
    }
    for (size_t t = 1; t <= upto; t++) {
        for (const auto &g : c.layer(t)) {
            apply_gate(p, g);
        }
    }
    return p;
}

PauliString conjugate_backward(const CliffordCircuit &c, PauliString p, size_t from) {
    check_pauli_size(c, p);
    if (from > c.depth()) {
        throw std::out_of_range("layer index past the circuit depth");
    }
    for (size_t t = from; t >= 1; t--) {
        for (const auto &g : c.layer(t)) {
            apply_gate_inverse(p, g);
        }
    }
    return p;
}

std::vector<uint32_t> forward_lightcone(const CliffordCircuit &c, size_t q) {
    return forward_lightcone(c.interactions(), q);
}

std::vector<size_t> weight_profile(const CliffordCircuit &c, const PauliString &s) {
    check_pauli_size(c, s);
    std::vector<size_t> out{weight(s)};
    PauliString p = s;
    for (size_t t = 1; t <= c.depth(); t++) {
        for (const auto &g : c.layer(t)) {
            apply_gate(p, g);
        }
        out.push_back(weight(p));
    }
    return out;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

size_t parse_index(std::string_view word, size_t line) {
    if (word.empty() || word.size() > 9 || !std::all_of(word.begin(), word.end(), [](char ch) {
            return ch >= '0' && ch <= '9';
        })) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    }
    return std::stoul(std::string(word));
}

double parse_real(std::string_view word, size_t line) {
    std::string s(word);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError(line, "expected a real number, got '" + s + "'");
    }
    return v;
}

std::optional<GateKind> clifford_gate_kind(std::string_view name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"H", GateKind::H},     {"S", GateKind::S},   {"SDG", GateKind::SDG},
        {"X", GateKind::X},     {"Y", GateKind::Y},   {"Z", GateKind::Z},
        {"CNOT", GateKind::CNOT}, {"CX", GateKind::CNOT}, {"CZ", GateKind::CZ},
        {"SWAP", GateKind::SWAP},
    };
    for (const auto &[key, kind] : table) {
        if (name == key) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ParsedCircuit parse_circuit(std::string_view text) {
    std::optional<size_t> n;
    std::optional<Geometry> geometry;
    std::vector<std::pair<size_t, BlochVector>> states;
    std::vector<std::pair<size_t, BlochVector>> axes;
    std::vector<std::vector<CliffordGate>> layers;
    std::vector<CliffordGate> current;
    std::vector<size_t> used_at;  // line of the gate occupying each qubit in the open layer, 0 if free
    bool any_layer_content = false;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        std::string_view head = words[0];
        auto need_n = [&]() -> size_t {
            if (!n.has_value()) {
                throw ParseError(line_no, "'qubits N' must come first");
            }
            return *n;
        };
        auto qubit_arg = [&](size_t k) -> size_t {
            size_t q = parse_index(words[k], line_no);
            if (q >= need_n()) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range");
            }
            return q;
        };
        auto expect_words = [&](size_t count) {
            if (words.size() != count) {
                throw ParseError(line_no, "wrong number of arguments for '" + std::string(head) + "'");
            }
        };

        if (head == "qubits") {
            expect_words(2);
            if (n.has_value()) {
                throw ParseError(line_no, "duplicate 'qubits' line");
            }
            n = parse_index(words[1], line_no);
            if (*n == 0) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            used_at.assign(*n, 0);
        } else if (head == "lattice") {
            if (words.size() < 3) {
                throw ParseError(line_no, "expected 'lattice D e1 [e2 ...]'");
            }
            size_t dim = parse_index(words[1], line_no);
            if (dim == 0 || words.size() != dim + 2) {
                throw ParseError(line_no, "lattice dimension does not match the extent count");
            }
            Geometry g;
            for (size_t k = 0; k < dim; k++) {
                g.extents.push_back(parse_index(words[2 + k], line_no));
            }
            if (g.num_sites() != need_n()) {
                throw ParseError(line_no, "lattice extents do not multiply to the qubit count");
            }
            if (any_layer_content) {
                throw ParseError(line_no, "'lattice' must precede the gates");
            }
            geometry = g;
        } else if (head == "input" || head == "measure") {
            expect_words(1);
        } else if (head == "state") {
            if (words.size() < 3) {
                throw ParseError(line_no, "expected 'state q |0>' or 'state q bloch bx by bz'");
            }
            size_t q = qubit_arg(1);
            BlochVector b;
            if (words[2] == "bloch") {
                expect_words(6);
                b = {parse_real(words[3], line_no), parse_real(words[4], line_no), parse_real(words[5], line_no)};
                if (!(b.norm() <= 1 + 1e-12)) {
                    throw ParseError(line_no, "Bloch vector norm exceeds 1");
                }
            } else {
                expect_words(3);
                auto named = ProductState::named(words[2]);
                if (!named.has_value()) {
                    throw ParseError(line_no, "unknown state '" + std::string(words[2]) + "'");
                }
                b = *named;
            }
            states.emplace_back(q, b);
        } else if (head == "basis") {
            if (words.size() < 3) {
                throw ParseError(line_no, "expected 'basis q Z|X|Y' or 'basis q bloch nx ny nz'");
            }
            size_t q = qubit_arg(1);
            BlochVector b;
            if (words[2] == "bloch") {
                expect_words(6);
                b = {parse_real(words[3], line_no), parse_real(words[4], line_no), parse_real(words[5], line_no)};
                if (!(std::abs(b.norm() - 1) <= 1e-12)) {
                    throw ParseError(line_no, "measurement axis must be a unit vector");
                }
            } else {
                expect_words(3);
                if (words[2] == "Z") {
                    b = {0, 0, 1};
                } else if (words[2] == "X") {
                    b = {1, 0, 0};
                } else if (words[2] == "Y") {
                    b = {0, 1, 0};
                } else {
                    throw ParseError(line_no, "unknown basis '" + std::string(words[2]) + "'");
                }
            }
            axes.emplace_back(q, b);
        } else if (head == "---") {
            expect_words(1);
            need_n();
            layers.push_back(std::move(current));
            current.clear();
            std::fill(used_at.begin(), used_at.end(), 0);
            any_layer_content = true;
        } else if (auto kind = clifford_gate_kind(head)) {
            CliffordGate g{*kind, {0, 0}};
            expect_words(1 + g.arity());
            for (size_t k = 0; k < g.arity(); k++) {
                size_t q = qubit_arg(1 + k);
                if (used_at[q]) {
                    throw ParseError(
                        line_no, "qubit " + std::to_string(q) + " already used in this layer on line " +
                                     std::to_string(used_at[q]));
                }
                used_at[q] = line_no;
                g.qubits[k] = static_cast<uint32_t>(q);
            }
            if (g.arity() == 2 && geometry.has_value() && !geometry->adjacent(g.qubits[0], g.qubits[1])) {
                throw ParseError(line_no, "gate joins qubits that are not lattice neighbors");
            }
            current.push_back(g);
            any_layer_content = true;
        } else {
            throw ParseError(line_no, "unknown instruction '" + std::string(head) + "'");
        }
    }
    if (!n.has_value()) {
        throw ParseError(0, "missing 'qubits N' line");
    }
    if (!current.empty()) {
        layers.push_back(std::move(current));
    }
    if (layers.empty()) {
        throw ParseError(0, "circuit has no layers");
    }
    ProductState input = ProductState::all_zero(*n);
    for (auto &[q, b] : states) {
        input.qubits[q] = b;
    }
    MeasurementBasis basis = MeasurementBasis::computational(*n);
    for (auto &[q, b] : axes) {
        basis.axes[q] = b;
    }
    return ParsedCircuit{CliffordCircuit(*n, std::move(layers), std::move(geometry)), input, basis};
}

std::string render_circuit(const ParsedCircuit &parsed) {
    const CliffordCircuit &c = parsed.circuit;
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << "\n";
    if (c.geometry().has_value()) {
        out << "lattice " << c.geometry()->dimension();
        for (size_t e : c.geometry()->extents) {
            out << " " << e;
        }
        out << "\n";
    }
    static const char *const state_names[] = {"|0>", "|1>", "|+>", "|->", "|+i>", "|-i>", "|A>"};
    bool header = false;
    for (size_t q = 0; q < parsed.input.qubits.size(); q++) {
        const BlochVector &b = parsed.input.qubits[q];
        if (b == BlochVector{0, 0, 1}) {
            continue;
        }
        if (!header) {
            out << "input\n";
            header = true;
        }
        out << "state " << q << " ";
        const char *name = nullptr;
        for (const char *candidate : state_names) {
            if (*ProductState::named(candidate) == b) {
                name = candidate;
            }
        }
        if (name != nullptr) {
            out << name << "\n";
        } else {
            out << "bloch " << format_real(b.x) << " " << format_real(b.y) << " " << format_real(b.z) << "\n";
        }
    }
    header = false;
    for (size_t q = 0; q < parsed.basis.axes.size(); q++) {
        const BlochVector &b = parsed.basis.axes[q];
        if (b == BlochVector{0, 0, 1}) {
            continue;
        }
        if (!header) {
            out << "measure\n";
            header = true;
        }
        out << "basis " << q << " ";
        if (b == BlochVector{1, 0, 0}) {
            out << "X\n";
        } else if (b == BlochVector{0, 1, 0}) {
            out << "Y\n";
        } else {
            out << "bloch " << format_real(b.x) << " " << format_real(b.y) << " " << format_real(b.z) << "\n";
        }
    }
    for (const auto &layer : c.layers()) {
        for (const auto &g : layer) {
            out << gate_name(g.kind) << " " << g.qubits[0];
            if (g.arity() == 2) {
                out << " " << g.qubits[1];
            }
            out << "\n";
        }
        out << "---\n";
    }
    return out.str();
}

SingleQubitUnitary SingleQubitUnitary::from_u3(double theta, double phi, double lambda) {
    using namespace std::complex_literals;
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return SingleQubitUnitary{{
        std::complex<double>(c, 0),
        -std::exp(1i * lambda) * s,
        std::exp(1i * phi) * s,
        std::exp(1i * (phi + lambda)) * c,
    }};
}

SingleQubitUnitary SingleQubitUnitary::hadamard() {
    double h = std::sqrt(0.5);
    return SingleQubitUnitary{{h, h, h, -h}};
}

SingleQubitUnitary SingleQubitUnitary::identity() {
    return SingleQubitUnitary{{1, 0, 0, 1}};
}

bool SingleQubitUnitary::is_unitary(double tol) const {
    // Columns orthonormal.
    double n0 = std::norm(m[0]) + std::norm(m[2]);
    double n1 = std::norm(m[1]) + std::norm(m[3]);
    std::complex<double> ip = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    return std::abs(n0 - 1) <= tol && std::abs(n1 - 1) <= tol && std::abs(ip) <= tol;
}

BlochVector pulled_back_zero(const SingleQubitUnitary &u) {
    // M = U^dagger |0><0| U has entries conj(U_0i) U_0j.
    std::complex<double> m01 = std::conj(u.m[0]) * u.m[1];
    double m00 = std::norm(u.m[0]);
    double m11 = std::norm(u.m[1]);
    return BlochVector{2 * m01.real(), -2 * m01.imag(), m00 - m11};
}

ParsedCircuit canonicalize_conjugated_clifford(const SingleQubitUnitary &u, const CliffordCircuit &c) {
    if (!u.is_unitary()) {
        throw std::invalid_argument("conjugating matrix is not unitary");
    }
    BlochVector b = pulled_back_zero(u);
    // Renormalize away rounding so the basis passes its unit-norm check.
    double len = b.norm();
    b = {b.x / len, b.y / len, b.z / len};
    size_t n = c.num_qubits();
    return ParsedCircuit{
        c, ProductState{std::vector<BlochVector>(n, b)}, MeasurementBasis{std::vector<BlochVector>(n, b)}};
}

}  // namespace cliffsim
