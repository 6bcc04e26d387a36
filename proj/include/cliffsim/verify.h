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

#ifndef CLIFFSIM_VERIFY_H
#define CLIFFSIM_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace cliffsim {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string measured;
    std::string bound;
    std::string details;
    double seconds = 0;
};

struct VerifyOptions {
    uint64_t seed = 20260101;
    /// Drops one propagated generator in the Clifford sampler so the exactness checks must fail.
    bool inject_fault = false;
    /// Shrinks trial counts for smoke runs. Full counts are the acceptance settings.
    bool quick = false;
    size_t threads = 0;
};

/// Tally of z-scores from many simultaneous 3-sigma comparisons.
struct ZTally {
    size_t tests = 0;
    size_t beyond_three = 0;
    double worst = 0;

    void add(double z);
    /// Exceedances allowed before the family is rejected at the 0.1% level.
    size_t allowed() const;
    bool ok() const {
        return beyond_three <= allowed() && worst <= 5;
    }
    std::string str() const;
};

CheckResult check_fixed_configuration_exactness(const VerifyOptions &opts);
CheckResult check_channel_exactness(const VerifyOptions &opts);
CheckResult check_iqp_exactness(const VerifyOptions &opts);
CheckResult check_survival_law(const VerifyOptions &opts);
CheckResult check_counting_bound(const VerifyOptions &opts);
CheckResult check_group_size(const VerifyOptions &opts);
CheckResult check_percolation(const VerifyOptions &opts);
CheckResult check_anticoncentration(const VerifyOptions &opts);
CheckResult check_conjugated_clifford(const VerifyOptions &opts);
CheckResult check_determinism_and_speed(const VerifyOptions &opts);

/// Runs the listed criteria (1..10); an empty list runs all of them.
std::vector<CheckResult> run_checks(const VerifyOptions &opts, const std::vector<int> &criteria = {});

}  // namespace cliffsim

#endif
