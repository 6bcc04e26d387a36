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

#ifndef CLIFFSIM_TESTS_TEST_UTIL_H
#define CLIFFSIM_TESTS_TEST_UTIL_H

#include <set>
#include <string>
#include <vector>

#include "cliffsim/gf2.h"
#include "cliffsim/rng.h"

namespace cliffsim::testing {

inline BitVector random_bits(CounterRng &rng, size_t n) {
    BitVector v(n);
    for (size_t k = 0; k < n; k++) {
        v.set(k, rng.bit());
    }
    return v;
}

inline Gf2Matrix random_matrix(CounterRng &rng, size_t rows, size_t cols) {
    Gf2Matrix m(cols);
    for (size_t r = 0; r < rows; r++) {
        m.append_row(random_bits(rng, cols));
    }
    return m;
}

/// Every element of the row span, found by summing all 2^rows subsets.
inline std::set<std::string> span_by_enumeration(const Gf2Matrix &m) {
    std::set<std::string> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m.num_rows()); mask++) {
        BitVector v(m.num_cols());
        for (size_t r = 0; r < m.num_rows(); r++) {
            if ((mask >> r) & 1) {
                v ^= m.row(r);
            }
        }
        out.insert(v.str());
    }
    return out;
}

}  // namespace cliffsim::testing

#endif
