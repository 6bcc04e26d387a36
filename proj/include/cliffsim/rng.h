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

#ifndef CLIFFSIM_RNG_H
#define CLIFFSIM_RNG_H

#include <cstdint>
#include <limits>

namespace cliffsim {

/// One SplitMix64 step from state x (the increment is applied before the finalizer).
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based SplitMix64 stream.
///
/// Word k (k = 0, 1, ...) of the stream with key K is mix64(K + k * 0x9E3779B97F4A7C15), i.e. the
/// (k+1)-th output of a standard SplitMix64 generator seeded with K.
/// The stream for task i under master seed S has key mix64(S ^ mix64(i)), so every shot or
/// trial can be regenerated independently of scheduling. Doubles are (word >> 11) * 2^-53.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit CounterRng(uint64_t key) : key_(key) {
    }

    static CounterRng for_task(uint64_t seed, uint64_t task_index) {
        return CounterRng(mix64(seed ^ mix64(task_index)));
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        return mix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0) {
            return false;
        }
        if (p >= 1) {
            return true;
        }
        return uniform() < p;
    }

    bool bit() {
        return ((*this)() >> 63) != 0;
    }

    /// Uniform integer in [0, bound). Requires bound > 0.
    uint64_t below(uint64_t bound) {
        // Lemire-style rejection keeps the stream exactly reproducible.
        uint64_t threshold = (0 - bound) % bound;
        while (true) {
            uint64_t r = (*this)();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    uint64_t key() const {
        return key_;
    }
    uint64_t position() const {
        return counter_;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace cliffsim

#endif
