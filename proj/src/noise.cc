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

#include "cliffsim/noise.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace cliffsim {

NoiseModel NoiseModel::depolarizing(double gamma) {
    NoiseModel m;
    m.kind = Kind::Depolarizing;
    m.gamma = gamma;
    m.validate();
    return m;
}

NoiseModel NoiseModel::pauli(double px, double py, double pz) {
    NoiseModel m;
    m.kind = Kind::Pauli;
    m.px = px;
    m.py = py;
    m.pz = pz;
    m.validate();
    return m;
}

namespace {

double parse_probability(std::string_view text) {
    std::string s(text);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad probability '" + s + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t k = text.find(sep, start);
        out.push_back(text.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (k == std::string_view::npos) {
            return out;
        }
        start = k + 1;
    }
}

}  // namespace

NoiseModel NoiseModel::parse(std::string_view spec) {
    size_t colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("noise spec must look like depolarizing:G or pauli:PX,PY,PZ");
    }
    std::string_view name = spec.substr(0, colon);
    auto args = split(spec.substr(colon + 1), ',');
    if (name == "depolarizing" && args.size() == 1) {
        return depolarizing(parse_probability(args[0]));
    }
    if (name == "pauli" && args.size() == 3) {
        return pauli(parse_probability(args[0]), parse_probability(args[1]), parse_probability(args[2]));
    }
    throw std::invalid_argument("unrecognized noise spec '" + std::string(spec) + "'");
}

NoiseModel NoiseModel::parse_config_line(std::string_view line) {
    std::vector<std::string_view> words;
    for (auto w : split(line, ' ')) {
        if (!w.empty()) {
            words.push_back(w);
        }
    }
    if (words.size() == 3 && words[0] == "noise" && words[1] == "depolarizing") {
        return depolarizing(parse_probability(words[2]));
    }
    if (words.size() == 5 && words[0] == "noise" && words[1] == "pauli") {
        return pauli(parse_probability(words[2]), parse_probability(words[3]), parse_probability(words[4]));
    }
    throw std::invalid_argument("unrecognized noise line '" + std::string(line) + "'");
}

void NoiseModel::validate() const {
    if (kind == Kind::Depolarizing) {
        if (!(gamma >= 0 && gamma <= 1)) {
            throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
        }
        return;
    }
    if (!(px >= 0 && py >= 0 && pz >= 0) || px + py + pz > 1 + 1e-12) {
        throw std::invalid_argument("Pauli channel probabilities must be nonnegative with sum <= 1");
    }
}

NoiseModel NoiseModel::as_pauli_channel() const {
    if (kind == Kind::Pauli) {
        return *this;
    }
    return pauli(gamma / 4, gamma / 4, gamma / 4);
}

std::string NoiseModel::str() const {
    char buf[128];
    if (kind == Kind::Depolarizing) {
        std::snprintf(buf, sizeof(buf), "depolarizing:%.17g", gamma);
    } else {
        std::snprintf(buf, sizeof(buf), "pauli:%.17g,%.17g,%.17g", px, py, pz);
    }
    return buf;
}

const char *noise_event_name(NoiseEvent event) {
    switch (event) {
        case NoiseEvent::Depolarize:
            return "DEPOLARIZE";
        case NoiseEvent::XInPlace:
            return "X";
        case NoiseEvent::ZDet:
            return "Z";
        case NoiseEvent::YDet:
            return "Y";
        case NoiseEvent::ProjZ:
            return "PI_Z";
        case NoiseEvent::XProjZ:
            return "X_PI_Z";
    }
    return "?";
}

void ErrorConfiguration::validate() const {
    for (size_t k = 0; k < sites.size(); k++) {
        const NoiseSite &s = sites[k];
        if (s.layer > depth || s.qubit >= num_qubits) {
            throw std::invalid_argument("noise site out of range");
        }
        if (k > 0) {
            const NoiseSite &p = sites[k - 1];
            if (std::pair(p.layer, p.qubit) >= std::pair(s.layer, s.qubit)) {
                throw std::invalid_argument("noise sites must be sorted and distinct");
            }
        }
    }
}

ChannelMixture decompose_pauli_channel(double px, double py, double pz) {
    if (!(px >= 0 && py >= 0 && pz >= 0) || px + py + pz > 1 + 1e-12) {
        throw std::invalid_argument("infeasible Pauli channel probabilities");
    }
    double pi = std::max(0.0, 1 - px - py - pz);
    double proj = 2 * std::min(pi, pz);
    double xproj = 2 * std::min(px, py);
    ChannelMixture m;
    m.probs[ChannelMixture::kProjZ] = proj;
    m.probs[ChannelMixture::kXProjZ] = xproj;
    m.probs[ChannelMixture::kIdentity] = pi - proj / 2;
    m.probs[ChannelMixture::kZ] = pz - proj / 2;
    m.probs[ChannelMixture::kX] = px - xproj / 2;
    m.probs[ChannelMixture::kY] = py - xproj / 2;
    return m;
}

std::array<double, 4> pauli_probabilities(const ChannelMixture &mixture) {
    const auto &p = mixture.probs;
    double half_proj = p[ChannelMixture::kProjZ] / 2;
    double half_xproj = p[ChannelMixture::kXProjZ] / 2;
    return {
        p[ChannelMixture::kIdentity] + half_proj,
        p[ChannelMixture::kX] + half_xproj,
        p[ChannelMixture::kY] + half_xproj,
        p[ChannelMixture::kZ] + half_proj,
    };
}

IqpNoiseRates iqp_noise_rates(double px, double py, double pz) {
    ChannelMixture m = decompose_pauli_channel(px, py, pz);
    return IqpNoiseRates{
        pz + std::min(py, pz),
        pz + std::min(px, py),
        m.probs[ChannelMixture::kProjZ] + m.probs[ChannelMixture::kXProjZ],
    };
}

ErrorConfiguration sample_error_configuration(CounterRng &rng, size_t n, size_t depth, const NoiseModel &model) {
    model.validate();
    ErrorConfiguration b{n, depth, {}};
    if (model.kind == NoiseModel::Kind::Depolarizing) {
        for (size_t t = 0; t <= depth; t++) {
            for (size_t q = 0; q < n; q++) {
                if (rng.uniform() < model.gamma) {
                    b.sites.push_back({uint32_t(t), uint32_t(q), NoiseEvent::Depolarize});
                }
            }
        }
        return b;
    }
    ChannelMixture m = decompose_pauli_channel(model.px, model.py, model.pz);
    static constexpr std::pair<ChannelMixture::Index, NoiseEvent> order[] = {
        {ChannelMixture::kX, NoiseEvent::XInPlace},  {ChannelMixture::kZ, NoiseEvent::ZDet},
        {ChannelMixture::kY, NoiseEvent::YDet},      {ChannelMixture::kProjZ, NoiseEvent::ProjZ},
        {ChannelMixture::kXProjZ, NoiseEvent::XProjZ},
    };
    for (size_t t = 0; t <= depth; t++) {
        for (size_t q = 0; q < n; q++) {
            double u = rng.uniform();
            double acc = 0;
            for (const auto &[index, event] : order) {
                acc += m.probs[index];
                if (u < acc) {
                    b.sites.push_back({uint32_t(t), uint32_t(q), event});
                    break;
                }
            }
        }
    }
    return b;
}

void PropagatedErrorSet::add(PauliString p) {
    p.phase = 0;
    tableau.append_row(symplectic_vector(p));
    generators.push_back(std::move(p));
}

PropagatedErrorSet propagate_errors(const CliffordCircuit &c, const ErrorConfiguration &b) {
    if (b.depth > c.depth() || b.num_qubits != c.num_qubits()) {
        throw std::invalid_argument("error configuration does not fit the circuit");
    }
    size_t n = c.num_qubits();
    PropagatedErrorSet out(n);
    for (const NoiseSite &s : b.sites) {
        if (s.event != NoiseEvent::Depolarize) {
            throw std::invalid_argument("Clifford propagation only handles depolarizing sites");
        }
        out.add(conjugate_backward(c, PauliString::single(n, s.qubit, 'X'), s.layer));
        out.add(conjugate_backward(c, PauliString::single(n, s.qubit, 'Z'), s.layer));
    }
    return out;
}

double survival_probability(const CliffordCircuit &c, const PauliString &s, double gamma) {
    size_t total = 0;
    for (size_t w : weight_profile(c, s)) {
        total += w;
    }
    return std::pow(1 - gamma, static_cast<double>(total));
}

}  // namespace cliffsim
