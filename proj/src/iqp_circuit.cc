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

#include "cliffsim/iqp_circuit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cliffsim/errors.h"

namespace cliffsim {

namespace {

bool connected_on_lattice(const Geometry &g, const IqpGate &gate) {
    size_t k = gate.arity();
    if (k == 2) {
        return g.adjacent(gate.qubits[0], gate.qubits[1]);
    }
    // Three sites are connected when at least two of the three pairs are adjacent.
    int edges = g.adjacent(gate.qubits[0], gate.qubits[1]) + g.adjacent(gate.qubits[1], gate.qubits[2]) +
                g.adjacent(gate.qubits[0], gate.qubits[2]);
    return edges >= 2;
}

std::string check_gate(size_t n, const IqpGate &gate, const std::optional<Geometry> &geometry) {
    size_t k = gate.arity();
    for (size_t a = 0; a < k; a++) {
        if (gate.qubits[a] >= n) {
            return "gate qubit out of range";
        }
        for (size_t b = 0; b < a; b++) {
            if (gate.qubits[a] == gate.qubits[b]) {
                return "gate repeats a qubit";
            }
        }
    }
    if (!std::isfinite(gate.theta)) {
        return "gate angle is not finite";
    }
    if (k > 1 && geometry.has_value() && !connected_on_lattice(*geometry, gate)) {
        return "gate joins qubits that are not lattice neighbors";
    }
    return {};
}

std::vector<std::vector<Interaction>> interactions_of(const std::vector<std::vector<IqpGate>> &layers) {
    std::vector<std::vector<Interaction>> out(layers.size());
    for (size_t t = 0; t < layers.size(); t++) {
        for (const auto &g : layers[t]) {
            if (g.arity() > 1) {
                out[t].push_back(Interaction{static_cast<uint8_t>(g.arity()), g.qubits});
            }
        }
    }
    return out;
}

std::vector<std::vector<IqpGate>> checked_layers(
    size_t n, std::vector<std::vector<IqpGate>> layers, const std::optional<Geometry> &geometry) {
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
            std::string err = check_gate(n, g, geometry);
            if (!err.empty()) {
                throw std::invalid_argument(err + " in layer " + std::to_string(t + 1));
            }
            for (size_t k = 0; k < g.arity(); k++) {
                if (used[g.qubits[k]]) {
                    throw std::invalid_argument("overlapping gates in layer " + std::to_string(t + 1));
                }
                used[g.qubits[k]] = 1;
            }
        }
    }
    return layers;
}

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

double parse_angle(std::string_view word, size_t line) {
    std::string s(word);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError(line, "expected an angle in radians, got '" + s + "'");
    }
    return v;
}

}  // namespace

IqpCircuit::IqpCircuit(size_t num_qubits, std::vector<std::vector<IqpGate>> layers, std::optional<Geometry> geometry)
    : num_qubits_(num_qubits),
      layers_(checked_layers(num_qubits, std::move(layers), geometry)),
      geometry_(std::move(geometry)),
      interactions_(num_qubits, interactions_of(layers_)) {
}

IqpCircuit parse_iqp_circuit(std::string_view text) {
    std::optional<size_t> n;
    std::optional<Geometry> geometry;
    std::vector<std::vector<IqpGate>> layers;
    std::vector<IqpGate> current;
    std::vector<size_t> used_at;
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
        auto expect_words = [&](size_t count) {
            if (words.size() != count) {
                throw ParseError(line_no, "wrong number of arguments for '" + std::string(head) + "'");
            }
        };
        auto need_n = [&]() -> size_t {
            if (!n.has_value()) {
                throw ParseError(line_no, "'qubits N' must come first");
            }
            return *n;
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
            continue;
        }
        if (head == "lattice") {
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
            continue;
        }
        if (head == "---") {
            expect_words(1);
            need_n();
            layers.push_back(std::move(current));
            current.clear();
            std::fill(used_at.begin(), used_at.end(), 0);
            any_layer_content = true;
            continue;
        }

        IqpGate gate{};
        size_t first_qubit = 1;
        if (head == "PHASE") {
            expect_words(3);
            gate.kind = IqpGateKind::Phase;
            gate.theta = parse_angle(words[1], line_no);
            first_qubit = 2;
        } else if (head == "T") {
            expect_words(2);
            gate.kind = IqpGateKind::Phase;
            gate.theta = std::numbers::pi / 4;
        } else if (head == "CPHASE") {
            expect_words(4);
            gate.kind = IqpGateKind::CPhase;
            gate.theta = parse_angle(words[1], line_no);
            first_qubit = 2;
        } else if (head == "CZ") {
            expect_words(3);
            gate.kind = IqpGateKind::CPhase;
            gate.theta = std::numbers::pi;
        } else if (head == "CCZ") {
            expect_words(4);
            gate.kind = IqpGateKind::CCZ;
        } else if (head == "CNOT" || head == "CX") {
            expect_words(3);
            gate.kind = IqpGateKind::CNOT;
        } else {
            throw ParseError(line_no, "unknown instruction '" + std::string(head) + "'");
        }
        size_t nq = need_n();
        for (size_t k = 0; k < gate.arity(); k++) {
            size_t q = parse_index(words[first_qubit + k], line_no);
            if (q >= nq) {
                throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range");
            }
            if (used_at[q]) {
                throw ParseError(
                    line_no,
                    "qubit " + std::to_string(q) + " already used in this layer on line " + std::to_string(used_at[q]));
            }
            used_at[q] = line_no;
            gate.qubits[k] = static_cast<uint32_t>(q);
        }
        std::string err = check_gate(nq, gate, geometry);
        if (!err.empty()) {
            throw ParseError(line_no, err);
        }
        current.push_back(gate);
        any_layer_content = true;
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
    return IqpCircuit(*n, std::move(layers), std::move(geometry));
}

std::string render_iqp_circuit(const IqpCircuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << "\n";
    if (c.geometry().has_value()) {
        out << "lattice " << c.geometry()->dimension();
        for (size_t e : c.geometry()->extents) {
            out << " " << e;
        }
        out << "\n";
    }
    char angle[40];
    for (const auto &layer : c.layers()) {
        for (const auto &g : layer) {
            std::snprintf(angle, sizeof(angle), "%.17g", g.theta);
            switch (g.kind) {
                case IqpGateKind::Phase:
                    out << "PHASE " << angle << " " << g.qubits[0];
                    break;
                case IqpGateKind::CPhase:
                    out << "CPHASE " << angle << " " << g.qubits[0] << " " << g.qubits[1];
                    break;
                case IqpGateKind::CCZ:
                    out << "CCZ " << g.qubits[0] << " " << g.qubits[1] << " " << g.qubits[2];
                    break;
                case IqpGateKind::CNOT:
                    out << "CNOT " << g.qubits[0] << " " << g.qubits[1];
                    break;
            }
            out << "\n";
        }
        out << "---\n";
    }
    return out.str();
}

IqpCircuit random_iqp_circuit(CounterRng &rng, size_t n, size_t depth) {
    std::vector<std::vector<IqpGate>> layers(depth);
    std::vector<uint32_t> perm(n);
    auto random_angle = [&]() {
        return static_cast<double>(1 + rng.below(15)) * std::numbers::pi / 8;
    };
    for (auto &layer : layers) {
        for (size_t k = 0; k < n; k++) {
            perm[k] = static_cast<uint32_t>(k);
        }
        for (size_t k = n; k > 1; k--) {
            std::swap(perm[k - 1], perm[rng.below(k)]);
        }
        size_t k = 0;
        while (k < n) {
            uint64_t choice = rng.below(4);
            if (choice == 3 && k + 2 < n) {
                layer.push_back(IqpGate{IqpGateKind::CCZ, 0, {perm[k], perm[k + 1], perm[k + 2]}});
                k += 3;
            } else if (choice >= 1 && k + 1 < n) {
                if (choice == 1) {
                    layer.push_back(IqpGate{IqpGateKind::CNOT, 0, {perm[k], perm[k + 1], 0}});
                } else {
                    layer.push_back(IqpGate{IqpGateKind::CPhase, random_angle(), {perm[k], perm[k + 1], 0}});
                }
                k += 2;
            } else {
                layer.push_back(IqpGate{IqpGateKind::Phase, random_angle(), {perm[k], 0, 0}});
                k += 1;
            }
        }
    }
    return IqpCircuit(n, std::move(layers));
}

}  // namespace cliffsim
