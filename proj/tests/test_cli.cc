// Copyright 2026 The gsf Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsf/compiler.h"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gsf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "gsf_cli_test";
    std::filesystem::create_directories(dir);
    return dir.string();
}

const std::string P8 = "0-1,1-2,2-3,3-4,4-5,5-6,6-7";

}  // namespace

TEST(cli, compile_path_min_edges) {
    Result r = run({"compile", P8, "--strategy", "minE", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["depth"], 2);
    EXPECT_EQ(j["cz_count"], 7);
    EXPECT_TRUE(r.err.empty());
}

TEST(cli, compile_text_reports_comparison) {
    Result r = run({"compile", "--edges", "0-1,1-2,0-2", "--strategy", "minE"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("depth 3 (standard 3), CZ 2 (standard 3)"), std::string::npos);
    EXPECT_NE(r.out.find("R_0: sqX-"), std::string::npos);
}

TEST(cli, graph6_input) {
    Result a = run({"orbit", "Bw", "--format", "json"});
    Result b = run({"orbit", "--g6", "Bg", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"orbit_size\":2"), std::string::npos);
}

TEST(cli, file_input) {
    std::string path = temp_dir() + "/p8.txt";
    std::ofstream(path) << P8 << "\n";
    Result r = run({"orbit", "--file", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("min edges      7"), std::string::npos);
}

TEST(cli, classify_against_database) {
    std::string dir = temp_dir();
    Result b = run({"db-build", "--n", "8", "--db", dir, "--format", "json"});
    ASSERT_EQ(b.code, 0) << b.err;
    auto j = nlohmann::json::parse(b.out);
    EXPECT_EQ(j["classes"], 101);
    EXPECT_EQ(j["exceptional"], 1);

    Result r = run({"classify", P8, "--db", dir, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rec = nlohmann::json::parse(r.out);
    EXPECT_EQ(rec["min_edges"], 7);
    EXPECT_EQ(rec["min_edges_first"]["chi"], 2);

    setenv("GSF_DB_DIR", dir.c_str(), 1);
    Result via_env = run({"classify", P8, "--format", "json"});
    unsetenv("GSF_DB_DIR");
    EXPECT_EQ(via_env.out, r.out);

    Result missing = run({"classify", P8, "--db", dir + "/nothing.jsonl"});
    EXPECT_EQ(missing.code, 4);
}

TEST(cli, verify_detects_mutations) {
    std::string dir = temp_dir();
    Result c = run({"compile", P8, "--strategy", "minDepth", "--format", "json"});
    ASSERT_EQ(c.code, 0);
    std::string good = dir + "/good.json", bad = dir + "/bad.json";
    std::ofstream(good) << c.out;
    gsf::Circuit circuit = gsf::parse_circuit_json(c.out);
    circuit.cz_layers[0].pop_back();
    std::ofstream(bad) << gsf::emit_json(circuit);

    EXPECT_EQ(run({"verify", P8, "--circuit", good}).code, 0);
    Result r = run({"verify", P8, "--circuit", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "mismatch\n");
    EXPECT_EQ(run({"verify", "0-1,1-2", "--circuit", good}).code, 1);
}

TEST(cli, census) {
    Result r = run({"census", "--n", "5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);
    std::string path = temp_dir() + "/c5.g6";
    std::ofstream(path) << r.out;
    Result in = run({"census", "--ingest", path, "--format", "json"});
    ASSERT_EQ(in.code, 0);
    EXPECT_EQ(in.out, "{\"graphs\":21,\"classes\":21,\"connected\":21}\n");
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"compile"}).code, 2);
    EXPECT_EQ(run({"compile", "0-1", "--g6", "A_"}).code, 2);
    EXPECT_EQ(run({"compile", "0-1", "--strategy", "fast"}).code, 2);
    EXPECT_EQ(run({"compile", "0-1,1-"}).code, 2);
    EXPECT_EQ(run({"db-build", "--n", "10"}).code, 2);
    Result bad = run({"compile", "0-x"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_FALSE(bad.err.empty());
}

TEST(cli, resource_budget) {
    EXPECT_EQ(run({"compile", P8, "--budget", "3"}).code, 3);
}

TEST(cli, identical_invocations_are_byte_identical) {
    Result a = run({"compile", "0-1,1-2,2-3,3-0,0-2,4-0", "--format", "json"});
    Result b = run({"compile", "0-1,1-2,2-3,3-0,0-2,4-0", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
}
