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

#include "cliffsim/commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsim/circuit.h"
#include "cliffsim/random_circuits.h"

namespace cliffsim {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "cliffsim");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const char *name) {
    return std::string(CLIFFSIM_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const char *name) {
    return std::filesystem::temp_directory_path() / (std::string("cliffsim_cli_test_") + name);
}

TEST(Cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"sample", "--circuit", data_file("chain8.circ")}).code, kExitUsage);
    EXPECT_EQ(run({"sample", "--circuit", data_file("chain8.circ"), "--noise", "depolarizing:2"}).code, kExitUsage);
    EXPECT_EQ(run({"sample", "--circuit", data_file("chain8.circ"), "--noise", "depolarizing:0.1", "--kind", "ccc",
                   "--conjugate-u3", "0.1,0.2,0.3"})
                  .code,
              kExitUsage);
    EXPECT_EQ(run({"sample", "--circuit", "/nonexistent.circ", "--noise", "depolarizing:0.1"}).code, kExitUsage);
}

TEST(Cli, sample_is_reproducible) {
    auto a = scratch("a.csv");
    auto b = scratch("b.csv");
    auto c = scratch("c.csv");
    std::vector<std::string> base{"sample", "--circuit", data_file("chain8.circ"), "--noise", "depolarizing:0.05",
                                  "--shots", "200"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };
    ASSERT_EQ(with({"--seed", "7", "--out", a.string()}).code, kExitOk);
    ASSERT_EQ(with({"--seed", "7", "--out", b.string()}).code, kExitOk);
    ASSERT_EQ(with({"--seed", "8", "--out", c.string()}).code, kExitOk);
    std::string first = slurp(a);
    EXPECT_EQ(first, slurp(b));
    EXPECT_NE(first, slurp(c));
    EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 201);
    EXPECT_EQ(first.substr(0, first.find('\n')),
              "seed,shot,depolarized,components,max_L,max_rank,aborted,wall_micros,bitstring");
}

TEST(Cli, shots_do_not_depend_on_thread_count) {
    CounterRng rng(81);
    CliffordCircuit c = random_brickwork_1d(rng, 24, 3);
    CliffordSampler sampler(c, ProductState::all_magic(24), MeasurementBasis::computational(24),
                            NoiseModel::depolarizing(0.2));
    ShotFunction shot = [&](CounterRng &r) { return sampler.sample(r); };
    std::ostringstream one;
    std::ostringstream three;
    write_shots_csv(one, 5, run_shots(shot, 5, 64, 1), false);
    write_shots_csv(three, 5, run_shots(shot, 5, 64, 3), false);
    EXPECT_EQ(one.str(), three.str());
}

TEST(Cli, config_file_supplies_defaults) {
    auto cfg = scratch("run.cfg");
    {
        std::ofstream f(cfg);
        f << "# run config\nnoise pauli 0.01 0.01 0.02\nshots 4\nkind iqp\nseed 3\n";
    }
    CliRun r = run({"sample", "--circuit", data_file("iqp4.circ"), "--config", cfg.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_EQ(r.out.substr(r.out.find('\n') + 1, 4), "3,0,");
    CliRun override = run({"sample", "--circuit", data_file("iqp4.circ"), "--config", cfg.string(), "--shots", "2"});
    EXPECT_EQ(std::count(override.out.begin(), override.out.end(), '\n'), 3);
}

TEST(Cli, percolation_at_full_noise_has_no_components) {
    CliRun r = run({"percolation", "--brickwork", "64:2", "--noise", "depolarizing:1", "--trials", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "trial,component,size,sublattice_span\n0,-,0,0\n1,-,0,0\n2,-,0,0\n");
}

TEST(Cli, verify_subset_prints_status_lines) {
    CliRun r = run({"verify", "--criteria", "1,5"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    CliRun bad = run({"verify", "--criteria", "1", "--inject-fault"});
    EXPECT_EQ(bad.code, kExitCheckFailed);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace cliffsim
