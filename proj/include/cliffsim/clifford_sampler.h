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

#ifndef CLIFFSIM_CLIFFORD_SAMPLER_H
#define CLIFFSIM_CLIFFORD_SAMPLER_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/gf2.h"
#include "cliffsim/noise.h"
#include "cliffsim/pauli.h"
#include "cliffsim/rng.h"

namespace cliffsim {

/// Phaseless images C_t^dagger(X_q) and C_t^dagger(Z_q) for every noise layer t = 0..d.
///
/// Rows use the interleaved layout (bit 2q is the X part of qubit q, bit 2q+1 the Z part) and keep
/// only the words between their first and last nonzero word, so a row costs time proportional to
/// its backward lightcone. Layer t images are built from layer t-1 images.
class BackwardImageTable {
   public:
    explicit BackwardImageTable(const CliffordCircuit &c);

    struct Row {
        size_t first_word;
        std::span<const uint64_t> words;
    };
    Row image(size_t t, size_t q, bool z_part) const {
        const Meta &m = meta_[(t * num_qubits_ + q) * 2 + z_part];
        return Row{m.first_word, std::span<const uint64_t>(pool_.data() + m.offset, m.num_words)};
    }
    /// The same image as a phase-0 PauliString.
    PauliString image_pauli(size_t t, size_t q, bool z_part) const;

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t depth() const {
        return depth_;
    }

   private:
    struct Meta {
        uint32_t offset;
        uint32_t first_word;
        uint32_t num_words;
    };
    size_t num_qubits_;
    size_t depth_;
    std::vector<Meta> meta_;
    std::vector<uint64_t> pool_;
};

/// A merged lightcone L_j.
struct Component {
    /// Sorted qubit indices.
    std::vector<uint32_t> qubits;
    /// reach[k]: first layer after which qubits[k] can carry support of an element built on the
    /// component's non-depolarized qubits (0 for those qubits themselves).
    std::vector<uint32_t> reach;

    bool operator==(const Component &) const = default;
};

/// Depolarized flags, components L_j, and their truncated generator bases G_j.
struct ComponentPlan {
    std::vector<uint8_t> depolarized;
    std::vector<Component> components;
    /// G_j in the component's local symplectic layout: column k < |L_j| is the X part on
    /// components[j].qubits[k], column |L_j| + k the Z part.
    std::vector<Gf2Matrix> generators;
    /// Qubits in no component, ascending.
    std::vector<uint32_t> outside;

    size_t num_depolarized() const;
};

/// Basis of the centralizer of <M_b>: the nullspace of T_{M_b} Lambda, in X|Z layout (2n columns).
Gf2Matrix centralizer_basis(const PropagatedErrorSet &m, size_t n);

/// Qubit i is depolarized iff no centralizer basis vector has support on it.
std::vector<uint8_t> depolarized_qubits(const Gf2Matrix &centralizer, size_t n);
/// The equivalent test X_i, Z_i in the row space of T_{M_b}.
std::vector<uint8_t> depolarized_qubits_by_membership(const PropagatedErrorSet &m, size_t n);

/// Forward lightcones of the non-depolarized qubits merged until disjoint, ordered by smallest
/// qubit. Without geometry all lightcones are merged into one component.
std::vector<Component> build_components(const CliffordCircuit &c, const std::vector<uint8_t> &depolarized);
std::vector<Component> build_components(
    const InteractionLayers &layers, bool merge_all, const std::vector<uint8_t> &depolarized);

/// Zeroes the coordinates outside `qubits` in each centralizer row (X|Z layout) and keeps an
/// independent subset. With `check`, asserts that every truncated row still commutes with M_b
/// and throws InternalInvariantError otherwise.
Gf2Matrix truncate_generators(
    const Gf2Matrix &centralizer, std::span<const uint32_t> qubits, const PropagatedErrorSet *check = nullptr);

/// Restricts global X|Z-layout rows to the local layout of `qubits`.
Gf2Matrix localize(const Gf2Matrix &global, std::span<const uint32_t> qubits);

/// Steps 3-6 computed literally: centralizer, flags, lightcone merging, truncation.
ComponentPlan plan_from_error_set(const CliffordCircuit &c, const PropagatedErrorSet &m);

/// Visits every element of the group generated by the rows of `basis` (X|Z layout, 2n columns)
/// exactly once, in Gray-code order, as phase-0 representatives. Throws CutoffExceeded when the
/// rank exceeds cutoff_log2 and std::invalid_argument when the rows are dependent.
void enumerate_group(
    const Gf2Matrix &basis, size_t cutoff_log2, const std::function<void(const PauliString &)> &visit);

/// Output distribution of one component, stored as its surviving Pauli terms.
///
/// A term is a group element s with coefficient c_s = Tr(rho s) * sign(C(s)) and the support of
/// C(s). The probability of bits z_A on A within the component is
/// 2^{-|A|} sum over terms with supp C(s) inside A of c_s prod_{i in A} mu_i, where mu_i is 1 when
/// C(s) is the identity on i and (-1)^{z_i} n_i[C(s)_i] otherwise.
class ComponentDistribution {
   public:
    ComponentDistribution(
        const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const Component &component,
        const Gf2Matrix &local_generators, size_t cutoff_log2);

    size_t num_qubits() const {
        return qubits_.size();
    }
    const std::vector<uint32_t> &qubits() const {
        return qubits_;
    }
    size_t rank() const {
        return rank_;
    }
    /// Terms left after dropping zero coefficients and zero measurement factors.
    size_t num_terms() const {
        return coefficients_.size();
    }

    /// assignment[k] is 0 or 1 for qubits in A and -1 for qubits marginalized out.
    double marginal(std::span<const int8_t> assignment) const;
    /// Draws local bits in ascending qubit order from conditional marginals.
    std::vector<uint8_t> sample(CounterRng &rng) const;
    /// All 2^{|L|} probabilities; bit k of the index is the outcome of qubits()[k].
    std::vector<double> full_distribution() const;

   private:
    double measurement_factor(size_t term, size_t k, bool bit) const;
    bool x_bit(size_t term, size_t k) const {
        return (xs_[term * words_ + (k >> 6)] >> (k & 63)) & 1;
    }
    bool z_bit(size_t term, size_t k) const {
        return (zs_[term * words_ + (k >> 6)] >> (k & 63)) & 1;
    }

    std::vector<uint32_t> qubits_;
    std::vector<BlochVector> axes_;
    size_t rank_ = 0;
    size_t words_ = 0;
    /// Terms sorted by level (largest local position in the support of C(s); -1 for identity).
    std::vector<double> coefficients_;
    std::vector<int32_t> levels_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    /// level_start_[k + 1] is the first term with level >= k.
    std::vector<size_t> level_start_;
};

/// Per-shot summary.
struct RunReport {
    size_t num_depolarized = 0;
    std::vector<size_t> component_sizes;
    std::vector<size_t> component_ranks;
    bool aborted = false;
    uint64_t wall_micros = 0;

    size_t num_components() const {
        return component_sizes.size();
    }
    size_t max_component_size() const;
    size_t max_rank() const;
};

struct ShotResult {
    std::vector<uint8_t> bits;
    RunReport report;
};

struct SamplerOptions {
    size_t cutoff_log2 = 22;
    /// Test hook: leave the last propagated generator out of M_b. Produces wrong samples on purpose.
    bool drop_last_generator = false;
};

/// Exact sampler for noisy Clifford circuits with depolarizing noise.
class CliffordSampler {
   public:
    CliffordSampler(
        CliffordCircuit circuit, ProductState input, MeasurementBasis basis, NoiseModel model,
        SamplerOptions options = {});

    const CliffordCircuit &circuit() const {
        return circuit_;
    }
    const BackwardImageTable &images() const {
        return images_;
    }

    ErrorConfiguration sample_configuration(CounterRng &rng) const;
    /// Steps 2-6 for a fixed configuration, using incremental elimination on local images.
    ComponentPlan plan_for(const ErrorConfiguration &b) const;
    /// Throws CutoffExceeded if any component's rank is above the cutoff.
    std::vector<ComponentDistribution> distributions(const ComponentPlan &plan) const;
    /// Full 2^n output distribution conditioned on b (bit q of the index is qubit q). n <= 20.
    std::vector<double> distribution_for(const ErrorConfiguration &b) const;
    /// One shot of the full algorithm: sample b, plan, sample each component, uniform bits elsewhere.
    /// A cutoff overflow turns the shot into n uniform bits with report.aborted set.
    ShotResult sample(CounterRng &rng) const;

   private:
    CliffordCircuit circuit_;
    ProductState input_;
    MeasurementBasis basis_;
    NoiseModel model_;
    SamplerOptions options_;
    BackwardImageTable images_;
};

ShotResult sample_output(
    const CliffordCircuit &c, const ProductState &input, const MeasurementBasis &basis, const NoiseModel &model,
    CounterRng &rng, size_t cutoff_log2 = 22);

/// Big-endian hex of sum_q bits[q] 2^q, ceil(n/4) digits.
std::string bits_to_hex(std::span<const uint8_t> bits);

}  // namespace cliffsim

#endif
