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

#include "cliffsim/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "cliffsim/clifford_sampler.h"
#include "cliffsim/commands.h"
#include "cliffsim/diagnostics.h"
#include "cliffsim/iqp_sampler.h"
#include "cliffsim/oracle.h"
#include "cliffsim/random_circuits.h"

namespace cliffsim {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

CheckResult run_timed(int criterion, std::string name, const std::function<void(CheckResult &)> &body) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception &e) {
        r.passed = false;
        r.details += (r.details.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

size_t scaled(const VerifyOptions &opts, size_t full, size_t quick) {
    return opts.quick ? quick : full;
}

double max_deviation(const std::vector<double> &a, const std::vector<double> &b) {
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

/// Running per-outcome mean and variance of sampled distributions.
struct DistributionAverage {
    std::vector<double> sum;
    std::vector<double> sum_sq;
    size_t count = 0;

    void add(const std::vector<double> &p) {
        if (sum.empty()) {
            sum.assign(p.size(), 0);
            sum_sq.assign(p.size(), 0);
        }
        for (size_t k = 0; k < p.size(); k++) {
            sum[k] += p[k];
            sum_sq[k] += p[k] * p[k];
        }
        count++;
    }

    /// Adds one z-score per outcome against `want`. Outcomes with no spread must match to 1e-9.
    void compare(const std::vector<double> &want, ZTally &tally) const {
        double n = static_cast<double>(count);
        for (size_t k = 0; k < want.size(); k++) {
            double mean = sum[k] / n;
            double var = std::max(0.0, sum_sq[k] / n - mean * mean) * n / (n - 1);
            double sigma = std::sqrt(var / n);
            double diff = std::abs(mean - want[k]);
            if (sigma < 1e-12) {
                tally.add(diff < 1e-9 ? 0 : INFINITY);
            } else {
                tally.add(diff / sigma);
            }
        }
    }
};

NoiseModel random_depolarizing(CounterRng &rng, double max_gamma) {
    return NoiseModel::depolarizing(rng.uniform() * max_gamma);
}

/// Random independent X-type rows on n qubits, k of them.
Gf2Matrix random_independent_rows(CounterRng &rng, size_t n, size_t k) {
    Gf2Matrix g(n);
    EchelonBasis basis(n);
    while (g.num_rows() < k) {
        BitVector v(n);
        for (size_t q = 0; q < n; q++) {
            v.set(q, rng.bit());
        }
        if (basis.insert(v)) {
            g.append_row(v);
        }
    }
    return g;
}

/// Largest entrywise gap between 2^-n sum_{s in <G>} (-1)^{flips.s} X^s and the converter mixture.
double converter_gap(const Gf2Matrix &g, const BitVector &flips) {
    size_t n = g.num_cols();
    size_t dim = size_t{1} << n;
    std::vector<Complex> target(dim * dim);
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (uint64_t c = 0; c < (uint64_t{1} << g.num_rows()); c++) {
        PauliString s(n);
        for (size_t k = 0; k < g.num_rows(); k++) {
            if ((c >> k) & 1) {
                s.xs ^= g.row(k);
            }
        }
        s.phase = dot(s.xs, flips) ? 2 : 0;
        auto m = dense_pauli(s);
        for (size_t k = 0; k < m.size(); k++) {
            target[k] += scale * m[k];
        }
    }
    IqpConverter conv = iqp_converter(g);
    std::vector<uint8_t> sigma(g.num_rows());
    for (size_t k = 0; k < g.num_rows(); k++) {
        sigma[k] = dot(g.row(k), flips);
    }
    size_t free_bits = n - conv.rank;
    std::vector<Complex> mixture(dim * dim);
    double weight = std::ldexp(1.0, -static_cast<int>(free_bits));
    std::vector<uint8_t> r(free_bits);
    for (uint64_t ri = 0; ri < (uint64_t{1} << free_bits); ri++) {
        for (size_t k = 0; k < free_bits; k++) {
            r[k] = (ri >> k) & 1;
        }
        auto psi = converter_state(conv, sigma, r).dense();
        for (size_t a = 0; a < dim; a++) {
            for (size_t b = 0; b < dim; b++) {
                mixture[a * dim + b] += weight * psi[a] * std::conj(psi[b]);
            }
        }
    }
    double worst = 0;
    for (size_t k = 0; k < target.size(); k++) {
        worst = std::max(worst, std::abs(target[k] - mixture[k]));
    }
    return worst;
}

}  // namespace

void ZTally::add(double z) {
    tests++;
    z = std::abs(z);
    if (z > 3) {
        beyond_three++;
    }
    worst = std::max(worst, z);
}

size_t ZTally::allowed() const {
    // Smallest k with P(Binomial(tests, p3) > k) < 1e-3, p3 the two-sided 3-sigma tail.
    const double p3 = std::erfc(3 / std::sqrt(2.0));
    double term = std::pow(1 - p3, static_cast<double>(tests));
    double cdf = term;
    size_t k = 0;
    while (1 - cdf >= 1e-3 && k < tests) {
        term *= static_cast<double>(tests - k) / static_cast<double>(k + 1) * p3 / (1 - p3);
        k++;
        cdf += term;
    }
    return k;
}

std::string ZTally::str() const {
    return std::to_string(tests) + " comparisons, " + std::to_string(beyond_three) + " beyond 3 sigma (allowed " +
           std::to_string(allowed()) + "), max |z| = " + fmt(worst);
}

CheckResult check_fixed_configuration_exactness(const VerifyOptions &opts) {
    return run_timed(1, "fixed-configuration exactness", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 1);
        size_t circuits = scaled(opts, 50, 10);
        size_t configs = 20;
        double worst = 0;
        SamplerOptions sopts;
        sopts.drop_last_generator = opts.inject_fault;
        for (size_t k = 0; k < circuits; k++) {
            size_t n = 1 + rng.below(4);
            size_t d = 1 + rng.below(4);
            CliffordCircuit c = random_clifford_circuit(rng, n, d);
            ProductState input = random_product_state(rng, n);
            MeasurementBasis basis = random_measurement_basis(rng, n);
            NoiseModel model = NoiseModel::depolarizing(0.05 + 0.65 * rng.uniform());
            CliffordSampler sampler(c, input, basis, model, sopts);
            for (size_t j = 0; j < configs; j++) {
                ErrorConfiguration b = sampler.sample_configuration(rng);
                worst = std::max(
                    worst, max_deviation(
                               sampler.distribution_for(b), exact_noisy_distribution(c, input, basis, model, &b)));
            }
        }
        r.passed = worst < 1e-9;
        r.measured = "max deviation " + fmt(worst);
        r.bound = "< 1e-09";
        r.details = std::to_string(circuits) + " circuits x " + std::to_string(configs) + " configurations";
    });
}

CheckResult check_channel_exactness(const VerifyOptions &opts) {
    return run_timed(2, "channel-level exactness", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 2);
        size_t per_gamma = scaled(opts, 4, 1);
        size_t samples = scaled(opts, 10000, 2000);
        ZTally tally;
        for (double gamma : {0.1, 0.3, 0.7}) {
            for (size_t k = 0; k < per_gamma; k++) {
                size_t n = 2 + rng.below(3);
                size_t d = 1 + rng.below(4);
                CliffordCircuit c = random_clifford_circuit(rng, n, d);
                ProductState input = random_product_state(rng, n);
                MeasurementBasis basis = random_measurement_basis(rng, n);
                NoiseModel model = NoiseModel::depolarizing(gamma);
                CliffordSampler sampler(c, input, basis, model);
                DistributionAverage avg;
                for (size_t j = 0; j < samples; j++) {
                    avg.add(sampler.distribution_for(sampler.sample_configuration(rng)));
                }
                avg.compare(exact_noisy_distribution(c, input, basis, model), tally);
            }
        }
        r.passed = tally.ok();
        r.measured = tally.str();
        r.bound = "3 sigma per outcome";
        r.details = std::to_string(3 * per_gamma) + " circuits, " + std::to_string(samples) +
                    " configurations each, gamma in {0.1, 0.3, 0.7}";
    });
}

CheckResult check_iqp_exactness(const VerifyOptions &opts) {
    return run_timed(3, "IQP+CNOT exactness", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 3);
        auto noise_for = [&](size_t k, double rate) {
            return k % 2 == 0 ? NoiseModel::depolarizing(rate) : NoiseModel::pauli(0, 0, rate / 2);
        };

        double fixed_worst = 0;
        size_t circuits = scaled(opts, 50, 8);
        for (size_t k = 0; k < circuits; k++) {
            size_t n = 1 + rng.below(6);
            IqpCircuit c = random_iqp_circuit(rng, n, 1 + rng.below(4));
            NoiseModel model = noise_for(k, 0.05 + 0.6 * rng.uniform());
            IqpSampler sampler(c, model);
            for (size_t j = 0; j < 20; j++) {
                ErrorConfiguration b = sampler.sample_configuration(rng);
                fixed_worst = std::max(
                    fixed_worst, max_deviation(sampler.distribution_for(b), exact_iqp_distribution(c, model, &b)));
            }
        }

        ZTally tally;
        size_t samples = scaled(opts, 10000, 2000);
        size_t channel_circuits = 0;
        for (double rate : {0.1, 0.3, 0.7}) {
            for (size_t k = 0; k < 4; k++) {
                IqpCircuit c = random_iqp_circuit(rng, 2 + rng.below(4), 1 + rng.below(4));
                NoiseModel model = noise_for(k, rate);
                IqpSampler sampler(c, model);
                DistributionAverage avg;
                for (size_t j = 0; j < samples; j++) {
                    avg.add(sampler.distribution_for(sampler.sample_configuration(rng)));
                }
                avg.compare(exact_iqp_distribution(c, model), tally);
                channel_circuits++;
            }
        }

        double converter_worst = 0;
        for (size_t k = 0; k < 100; k++) {
            size_t n = 1 + rng.below(6);
            Gf2Matrix g = random_independent_rows(rng, n, rng.below(n + 1));
            BitVector flips(n);
            for (size_t q = 0; q < n; q++) {
                flips.set(q, rng.bit());
            }
            converter_worst = std::max(converter_worst, converter_gap(g, flips));
        }

        r.passed = fixed_worst < 1e-9 && tally.ok() && converter_worst < 1e-12;
        r.measured = "fixed-config max deviation " + fmt(fixed_worst) + "; channel " + tally.str() +
                     "; converter max entry gap " + fmt(converter_worst);
        r.bound = "< 1e-09; 3 sigma; < 1e-12";
        r.details = std::to_string(circuits) + " fixed-config circuits, " + std::to_string(channel_circuits) +
                    " channel circuits x " + std::to_string(samples) +
                    " configurations (depolarizing and dephasing), 100 converter groups";
    });
}

CheckResult check_survival_law(const VerifyOptions &opts) {
    return run_timed(4, "survival-probability law", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 4);
        size_t pairs = scaled(opts, 100, 20);
        size_t samples = scaled(opts, 100000, 5000);
        ZTally tally;
        double smallest = 1;
        for (size_t k = 0; k < pairs; k++) {
            size_t n = 2 + rng.below(5);
            size_t d = 1 + rng.below(4);
            CliffordCircuit c = random_clifford_circuit(rng, n, d);
            PauliString s = random_pauli(rng, n);
            double gamma = 0.02 + 0.2 * rng.uniform();
            NoiseModel model = NoiseModel::depolarizing(gamma);
            double p = survival_probability(c, s, gamma);
            smallest = std::min(smallest, p);
            // Images C_t^dagger(X_q), C_t^dagger(Z_q) for every site.
            std::vector<std::array<PauliString, 2>> images;
            for (size_t t = 0; t <= d; t++) {
                for (size_t q = 0; q < n; q++) {
                    images.push_back({conjugate_backward(c, PauliString::single(n, q, 'X'), t),
                                      conjugate_backward(c, PauliString::single(n, q, 'Z'), t)});
                }
            }
            size_t survived = 0;
            for (size_t j = 0; j < samples; j++) {
                ErrorConfiguration b = sample_error_configuration(rng, n, d, model);
                bool ok = true;
                for (const NoiseSite &site : b.sites) {
                    const auto &img = images[site.layer * n + site.qubit];
                    if (!commutes(s, img[0]) || !commutes(s, img[1])) {
                        ok = false;
                        break;
                    }
                }
                survived += ok;
            }
            double freq = static_cast<double>(survived) / static_cast<double>(samples);
            double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
            tally.add(sigma > 0 ? (freq - p) / sigma : (freq == p ? 0 : INFINITY));
        }
        r.passed = tally.ok();
        r.measured = tally.str();
        r.bound = "3 sigma";
        r.details = std::to_string(pairs) + " (circuit, s) pairs, " + std::to_string(samples) +
                    " configurations each; smallest closed-form value " + fmt(smallest);
    });
}

CheckResult check_counting_bound(const VerifyOptions &opts) {
    return run_timed(5, "S_w counting bound", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 5);
        size_t circuits = scaled(opts, 10, 3);
        size_t violations = 0;
        size_t censuses = 0;
        double tightest = 0;
        for (size_t k = 0; k < circuits; k++) {
            size_t n = 2 + rng.below(4);
            CliffordCircuit c = random_clifford_circuit(rng, n, 1 + rng.below(4));
            for (size_t a = 0; a < 30; a++) {
                std::vector<uint32_t> region;
                while (region.empty()) {
                    for (uint32_t q = 0; q < n; q++) {
                        if (rng.bit()) {
                            region.push_back(q);
                        }
                    }
                }
                for (size_t w = 0; w <= region.size(); w++) {
                    SwCensus census = enumerate_S_w(c, region, w);
                    censuses++;
                    violations += !census.within_bound();
                    tightest = std::max(tightest, static_cast<double>(census.count) / census.bound);
                }
            }
        }
        r.passed = violations == 0;
        r.measured = std::to_string(violations) + " violations; largest count/bound " + fmt(tightest);
        r.bound = "0 violations";
        r.details = std::to_string(censuses) + " censuses over " + std::to_string(circuits) + " circuits x 30 regions";
    });
}

CheckResult check_group_size(const VerifyOptions &opts) {
    return run_timed(6, "expected group size", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 6);
        size_t n = 64;
        double gamma = 0.4;
        size_t samples = scaled(opts, 1000, 200);
        bool ok = true;
        std::ostringstream details;
        double worst_ratio = 0;
        for (size_t d : {8, 16}) {
            CliffordCircuit c = random_brickwork_1d(rng, n, d);
            CliffordSampler sampler(c, ProductState::all_zero(n), MeasurementBasis::computational(n),
                                    NoiseModel::depolarizing(gamma));
            size_t layers = d + 1;
            // Group sizes bucketed by component size.
            std::map<size_t, std::vector<double>> buckets;
            size_t components = 0;
            for (size_t j = 0; j < samples; j++) {
                ComponentPlan plan = sampler.plan_for(sampler.sample_configuration(rng));
                for (size_t k = 0; k < plan.components.size(); k++) {
                    buckets[plan.components[k].qubits.size()].push_back(
                        std::ldexp(1.0, static_cast<int>(plan.generators[k].num_rows())));
                    components++;
                }
            }
            for (const auto &[size, groups] : buckets) {
                double m = static_cast<double>(groups.size());
                double mean = 0;
                for (double g : groups) {
                    mean += g / m;
                }
                double var = 0;
                for (double g : groups) {
                    var += (g - mean) * (g - mean);
                }
                double sigma = groups.size() > 1 ? std::sqrt(var / (m - 1) / m) : 0;
                double bound = expected_group_size_bound(layers, gamma, size);
                worst_ratio = std::max(worst_ratio, mean / bound);
                if (mean > bound + 3 * sigma) {
                    ok = false;
                    details << "d=" << d << " |L|=" << size << " mean " << fmt(mean) << " > bound " << fmt(bound)
                            << "; ";
                }
            }
            details << "d=" << d << ": " << components << " components in " << samples << " configurations, "
                    << buckets.size() << " distinct sizes; ";
        }
        r.passed = ok;
        r.measured = "largest mean/bound " + fmt(worst_ratio);
        r.bound = "mean <= layers*exp(3(1-g)^layers |L|) + 3 sigma";
        r.details = details.str();
    });
}

CheckResult check_percolation(const VerifyOptions &opts) {
    return run_timed(7, "percolation behavior", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 7);
        size_t d = 12;
        double gamma = 0.5;
        size_t trials = scaled(opts, 5000, 500);
        std::vector<size_t> sizes{128, 256, 512};
        std::vector<size_t> observed_max;
        std::ostringstream details;
        ZTally tail;
        size_t disconnected = 0;
        double worst_excess = -1;
        for (size_t n : sizes) {
            CliffordCircuit c = random_brickwork_1d(rng, n, d);
            ComponentSizeStats stats =
                component_size_stats(c, NoiseModel::depolarizing(gamma), trials, opts.seed ^ (n * 7919));
            size_t m = 0;
            for (size_t t = 0; t < stats.trials(); t++) {
                m = std::max(m, stats.max_size(t));
            }
            observed_max.push_back(m);
            disconnected += stats.disconnected_trials;
            for (size_t x = 1; x <= m + 1; x++) {
                double b = component_tail_bound(n, d + 1, d, 1, x);
                double sigma = std::sqrt(b * (1 - b) / static_cast<double>(trials));
                double p = stats.exceedance(x);
                worst_excess = std::max(worst_excess, p - b);
                if (p > b + 3 * sigma) {
                    tail.add(INFINITY);
                } else {
                    tail.add(0);
                }
            }
            details << "n=" << n << ": observed max " << m << ", mean max " << fmt(stats.mean_max_size())
                    << ", P(max>=1) " << fmt(stats.exceedance(1)) << "; ";
        }
        bool sublinear = true;
        size_t valid_pairs = 0;
        for (size_t k = 0; k + 1 < sizes.size(); k++) {
            if (observed_max[k] == 0) {
                continue;
            }
            valid_pairs++;
            double ratio = static_cast<double>(observed_max[k + 1]) / static_cast<double>(observed_max[k]);
            double growth = static_cast<double>(sizes[k + 1]) / static_cast<double>(sizes[k]);
            sublinear = sublinear && ratio < growth;
        }
        bool tail_ok = tail.beyond_three == 0;
        r.passed = sublinear && valid_pairs > 0 && tail_ok && disconnected == 0;
        r.measured = "observed max sizes " + std::to_string(observed_max[0]) + ", " + std::to_string(observed_max[1]) +
                     ", " + std::to_string(observed_max[2]) + "; tail probes above bound+3 sigma: " +
                     std::to_string(tail.beyond_three) + "/" + std::to_string(tail.tests) +
                     "; largest exceedance-bound " + fmt(worst_excess);
        r.bound = "max size ratio < n ratio; P(|L|>=x) <= min(1, n layers e^{-x/2d}) + 3 sigma";
        r.details = details.str() + std::to_string(trials) + " trials per size; " + std::to_string(disconnected) +
                    " trials with components disconnected in the sublattice graph";
    });
}

CheckResult check_anticoncentration(const VerifyOptions &opts) {
    return run_timed(8, "anticoncentration", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 8);
        size_t n = 3;
        size_t d = 10;
        double gamma = 0.2;
        double bound = anticoncentration_bound(n, d + 1, gamma);
        size_t circuits = scaled(opts, 20, 5);
        double largest = 0;
        double uniform_gap = 0;
        for (size_t k = 0; k < circuits; k++) {
            CliffordCircuit c = random_clifford_circuit(rng, n, d);
            MeasurementBasis basis = MeasurementBasis::computational(n);
            largest = std::max(largest, collision_probability(c, NoiseModel::depolarizing(gamma), basis));
            uniform_gap = std::max(
                uniform_gap, std::abs(collision_probability(c, NoiseModel::depolarizing(1), basis) - 0.125));
        }
        r.passed = largest <= bound && uniform_gap < 1e-12;
        r.measured = "max collision probability " + fmt(largest) + "; gamma=1 gap to 2^-n " + fmt(uniform_gap);
        r.bound = "<= " + fmt(bound) + " (layers " + std::to_string(d + 1) + "); < 1e-12";
        r.details = std::to_string(circuits) + " random circuits, n=3, d=10";
    });
}

CheckResult check_conjugated_clifford(const VerifyOptions &opts) {
    return run_timed(9, "conjugated-Clifford reduction", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 9);
        SamplerOptions sopts;
        sopts.drop_last_generator = opts.inject_fault;
        double worst = 0;
        size_t circuits = scaled(opts, 20, 5);
        for (size_t k = 0; k < circuits; k++) {
            size_t n = 1 + rng.below(4);
            CliffordCircuit c = random_clifford_circuit(rng, n, 1 + rng.below(4));
            SingleQubitUnitary u = random_single_qubit_unitary(rng);
            NoiseModel model = random_depolarizing(rng, 0.6);
            ParsedCircuit canon = canonicalize_conjugated_clifford(u, c);
            CliffordSampler sampler(canon.circuit, canon.input, canon.basis, model, sopts);
            for (size_t j = 0; j < 10; j++) {
                ErrorConfiguration b = sampler.sample_configuration(rng);
                worst = std::max(
                    worst, max_deviation(sampler.distribution_for(b), exact_ccc_distribution(u, c, model, &b)));
            }
            ErrorConfiguration clean{n, c.depth(), {}};
            worst = std::max(
                worst, max_deviation(sampler.distribution_for(clean), exact_ccc_distribution(u, c, model, &clean)));
        }
        r.passed = worst < 1e-9;
        r.measured = "max deviation " + fmt(worst);
        r.bound = "< 1e-09";
        r.details = std::to_string(circuits) + " random conjugating unitaries, 11 configurations each";
    });
}

CheckResult check_determinism_and_speed(const VerifyOptions &opts) {
    return run_timed(10, "determinism and performance", [&](CheckResult &r) {
        CounterRng rng = CounterRng::for_task(opts.seed, 10);
        size_t small_n = 64;
        CliffordCircuit small = random_brickwork_1d(rng, small_n, 8);
        CliffordSampler small_sampler(small, random_product_state(rng, small_n), random_measurement_basis(rng, small_n),
                                      NoiseModel::depolarizing(0.3));
        IqpSampler iqp_sampler(random_iqp_circuit(rng, 12, 4), NoiseModel::pauli(0.05, 0.02, 0.1));
        auto csv = [&](const ShotFunction &f, size_t threads) {
            std::ostringstream out;
            write_shots_csv(out, opts.seed, run_shots(f, opts.seed, 200, threads), false);
            return out.str();
        };
        ShotFunction clifford_shot = [&](CounterRng &g) {
            return small_sampler.sample(g);
        };
        ShotFunction iqp_shot = [&](CounterRng &g) {
            return iqp_sampler.sample(g);
        };
        bool identical = true;
        for (const ShotFunction *f : {&clifford_shot, &iqp_shot}) {
            std::string reference = csv(*f, 1);
            for (size_t threads : {2, 4}) {
                identical = identical && csv(*f, threads) == reference;
            }
        }

        size_t n = 4096;
        size_t d = 16;
        size_t shots = scaled(opts, 100, 10);
        CliffordCircuit big = random_brickwork_1d(rng, n, d);
        auto start = std::chrono::steady_clock::now();
        CliffordSampler sampler(big, ProductState::all_zero(n), MeasurementBasis::computational(n),
                                NoiseModel::depolarizing(0.5));
        ShotFunction big_shot = [&](CounterRng &g) {
            return sampler.sample(g);
        };
        auto results = run_shots(big_shot, opts.seed, shots, opts.threads);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        size_t aborts = 0;
        for (const ShotResult &s : results) {
            aborts += s.report.aborted;
        }
        r.passed = identical && seconds < 60 && aborts == 0;
        r.measured = std::string(identical ? "CSV identical" : "CSV differs") + " at 1, 2, 4 threads; " +
                     std::to_string(shots) + " shots of n=4096 d=16 in " + fmt(seconds) + " s with " +
                     std::to_string(aborts) + " aborts";
        r.bound = "identical; < 60 s; 0 aborts at cutoff_log2=22";
        r.details = "Clifford and IQP determinism fixtures, 200 shots each";
    });
}

std::vector<CheckResult> run_checks(const VerifyOptions &opts, const std::vector<int> &criteria) {
    using Check = CheckResult (*)(const VerifyOptions &);
    static const Check checks[] = {
        check_fixed_configuration_exactness, check_channel_exactness, check_iqp_exactness,
        check_survival_law,                  check_counting_bound,    check_group_size,
        check_percolation,                   check_anticoncentration, check_conjugated_clifford,
        check_determinism_and_speed,
    };
    std::vector<CheckResult> out;
    for (int k = 1; k <= 10; k++) {
        if (criteria.empty() || std::find(criteria.begin(), criteria.end(), k) != criteria.end()) {
            out.push_back(checks[k - 1](opts));
        }
    }
    return out;
}

}  // namespace cliffsim
