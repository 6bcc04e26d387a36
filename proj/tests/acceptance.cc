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

// Runs every acceptance criterion at full settings and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstring>
#include <exception>

#include "cliffsim/verify.h"

int main(int argc, char **argv) {
    cliffsim::VerifyOptions opts;
    for (int k = 1; k < argc; k++) {
        if (std::strcmp(argv[k], "--inject-fault") == 0) {
            opts.inject_fault = true;
        }
    }
    try {
        bool all = true;
        for (const cliffsim::CheckResult &r : cliffsim::run_checks(opts)) {
            all = all && r.passed;
            std::printf("%s criterion %d (%s): %s [bound %s] %.2fs\n", r.passed ? "PASS" : "FAIL", r.criterion,
                        r.name.c_str(), r.measured.c_str(), r.bound.c_str(), r.seconds);
            if (!r.details.empty()) {
                std::printf("    %s\n", r.details.c_str());
            }
            std::fflush(stdout);
        }
        return all ? 0 : 1;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 3;
    }
}
