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

#ifndef CLIFFSIM_COMMANDS_H
#define CLIFFSIM_COMMANDS_H

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "cliffsim/clifford_sampler.h"
#include "cliffsim/rng.h"

namespace cliffsim {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitInvariant = 3,
};

using ShotFunction = std::function<ShotResult(CounterRng &)>;

/// Runs shot k with CounterRng::for_task(seed, k). Results come back in shot order.
std::vector<ShotResult> run_shots(const ShotFunction &shot, uint64_t seed, size_t shots, size_t threads = 0);

/// Header plus one row per shot. wall_micros is written as 0 unless `timing` is set, so that
/// files from equal seeds are byte-identical.
void write_shots_csv(std::ostream &out, uint64_t seed, const std::vector<ShotResult> &shots, bool timing);

/// Entry point of the cliffsim executable.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cliffsim

#endif
