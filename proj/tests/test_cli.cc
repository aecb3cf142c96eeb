// Copyright 2026 The dfsgates Authors
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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "json.hpp"

using namespace dfsgates;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"tables", "--which", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"tables", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"synthesize", "toffoli"}).code, kExitUsage);
    EXPECT_EQ(run({"synthesize", "cnot", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, VerifySuites) {
    CliRun r = run({"verify", "--suite", "encoding"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("spin0 row 6 (XX)"), std::string::npos);
    EXPECT_NE(r.out.find("spin1 row 9 (ZZ)"), std::string::npos);
    r = run({"verify", "--suite", "oracle"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("max |irrep - oracle|"), std::string::npos);
    EXPECT_EQ(run({"verify"}).code, kExitOk);
}

TEST(Cli, Tables) {
    CliRun r = run({"tables", "--which", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("| 5 | plain | 63 | 12.5 | 0.99888 |"), std::string::npos) << r.out;
    r = run({"tables", "--which", "1", "--cancel-negatives", "--format", "csv"});
    EXPECT_NE(r.out.find("3,full-sum,39,9.8,0.99136,0.00552"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("5,full-sum,63,13.8,0.99888"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("9,full-sum,111,21.8,0.99989,0.00007"), std::string::npos) << r.out;
    r = run({"tables", "--which", "2", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"][0]["cycles"].get<int>(), 21);
}

TEST(Cli, SynthesizeThenSimulate) {
    std::string path = temp_path("dfsgates_cli_cnot.json");
    CliRun r = run({"synthesize", "cnot", "--mode", "spin1", "--n", "2", "--out", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc["steps"].size(), 21u);
    EXPECT_TRUE(doc["consolidated"].get<bool>());
    double f_written = doc["report"]["sectors"]["spin1"]["fidelity"].get<double>();

    r = run({"simulate", path, "--sector", "1", "--json", "--oracle"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rep = nlohmann::json::parse(r.out);
    EXPECT_NEAR(rep["sectors"]["spin1"]["fidelity"].get<double>(), f_written, 1e-12);
    EXPECT_LE(rep["sectors"]["spin1"]["oracle"]["delta_fidelity"].get<double>(), 1e-8);
    EXPECT_FALSE(rep["sectors"].contains("spin0"));
    std::filesystem::remove(path);

    EXPECT_EQ(run({"synthesize", "cnot", "--out", "/nonexistent-dir/x.json"}).code, kExitUsage);
}

TEST(Cli, SimulateSectorOrderingForIndependentCnot) {
    std::string path = temp_path("dfsgates_cli_ind.json");
    ASSERT_EQ(run({"synthesize", "cnot", "--mode", "independent", "--n", "5", "--out", path}).code, kExitOk);
    CliRun r = run({"simulate", path, "--json"});
    auto rep = nlohmann::json::parse(r.out);
    EXPECT_EQ(rep["cycles"].get<int>(), 63);
    EXPECT_GE(rep["sectors"]["spin0"]["fidelity"].get<double>(), rep["sectors"]["spin1"]["fidelity"].get<double>());
    EXPECT_NEAR(rep["sectors"]["spin1"]["fidelity"].get<double>(), 0.99888, 1e-5);
    std::filesystem::remove(path);
}

TEST(Cli, SimulateIdentityOnEmptySchedule) {
    std::string path = temp_path("dfsgates_cli_empty.json");
    std::ofstream(path) << R"({"version":1,"name":"empty","order":1,"n":1,"steps":[]})";
    CliRun r = run({"simulate", path, "--target", "identity", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rep = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(rep["sectors"]["spin0"]["fidelity"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(rep["sectors"]["spin1"]["fidelity"].get<double>(), 1.0);
    std::filesystem::remove(path);
}

TEST(Cli, MalformedScheduleIsUsageError) {
    std::string path = temp_path("dfsgates_cli_bad.json");
    std::ofstream(path) << "{\"version\": 1,\n \"name\": \"x\",\n \"order\": 1, \"n\": 1, \"steps\": [\n  {\"pairs\": [[4, 2]], "
                           "\"coeffs\": [1.0]}]}";
    CliRun r = run({"simulate", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("steps[0].pairs[0]"), std::string::npos) << r.err;
    std::ofstream(path) << "{\"version\": 1,\n\"name\": ";
    r = run({"simulate", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_EQ(run({"simulate", temp_path("dfsgates_missing.json")}).code, kExitUsage);
    std::filesystem::remove(path);
}
