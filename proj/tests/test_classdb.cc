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

#include "gsf/classdb.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gsf/errors.h"
#include "gsf/generate.h"
#include "gsf/graph6.h"
#include "oracles.h"

using namespace gsf;

namespace {

std::string temp_path(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "gsf_classdb_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<ClassRecord> &db7() {
    static const std::vector<ClassRecord> records = build_database(7);
    return records;
}

}  // namespace

TEST(classdb, orbit_counts_up_to_seven) {
    const std::vector<size_t> expected{1, 1, 2, 4, 11, 26};
    size_t total = 0;
    for (size_t n = 2; n <= 7; n++) {
        BuildStats stats;
        auto records = build_database(n, BuildOptions{}, &stats);
        EXPECT_EQ(records.size(), expected[n - 2]) << "n=" << n;
        EXPECT_EQ(exceptional_orbits(records), 0u);
        EXPECT_EQ(stats.vizing_violations, 0u);
        size_t sum = 0;
        for (const auto &r : records) {
            sum += r.orbit_size;
        }
        EXPECT_EQ(sum, stats.census_size);
        total += records.size();
    }
    EXPECT_EQ(total, 45u);
}

TEST(classdb, records_are_ordered_and_numbered) {
    const auto &records = db7();
    for (size_t i = 0; i < records.size(); i++) {
        EXPECT_EQ(records[i].class_id, i + 1);
        if (i > 0) {
            EXPECT_TRUE(record_less(records[i - 1], records[i]));
        }
    }
    // The star/complete class has the fewest edges.
    EXPECT_EQ(records.front().min_edges, 6u);
    EXPECT_EQ(records.front().orbit_size, 2u);
}

TEST(classdb, audit_every_record) {
    for (const auto &r : db7()) {
        EXPECT_TRUE(audit_record(r)) << r.class_id;
        EXPECT_FALSE(r.min_chi_first.has_value());
    }
    ClassRecord broken = db7()[3];
    broken.min_edges_first.count += 1;
    EXPECT_FALSE(audit_record(broken));
}

TEST(classdb, parallel_build_is_deterministic) {
    BuildOptions one{.workers = 1};
    BuildOptions four{.workers = 4};
    EXPECT_EQ(build_database(7, one), build_database(7, four));
    std::string a = temp_path("a.jsonl"), b = temp_path("b.jsonl");
    save_database(build_database(7, one), 7, a);
    save_database(build_database(7, four), 7, b);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(classdb, graph6_census_gives_the_same_database) {
    std::vector<Graph> census;
    std::mt19937_64 rng(30);
    for (const Graph &g : generate_connected_graphs(6)) {
        census.push_back(g.permuted(oracle::random_permutation(6, rng)));
    }
    EXPECT_EQ(build_database(6, census), build_database(6));
    census.pop_back();
    EXPECT_THROW(build_database(6, census), IntegrityError);
    census.push_back(census.front());
    EXPECT_THROW(build_database(6, census), IntegrityError);
    std::vector<Graph> disconnected{parse_edge_list("0-1", 3)};
    EXPECT_THROW(build_database(3, disconnected), IntegrityError);
}

TEST(classdb, size_gates) {
    EXPECT_THROW(build_database(1), ArgumentError);
    EXPECT_THROW(build_database(10), CapabilityError);
    BuildOptions large{.allow_large = true};
    EXPECT_THROW(build_database(11, large), CapabilityError);
}

TEST(classdb, save_load_round_trip) {
    std::string path = temp_path("db7.jsonl");
    save_database(db7(), 7, path);
    ClassDatabase db = load_database(path);
    EXPECT_EQ(db.n(), 7u);
    EXPECT_EQ(db.records(), db7());
    std::string text = slurp(path);
    EXPECT_EQ(text.substr(0, 23), "{\"version\":1,\"n\":7,\"cou");
}

TEST(classdb, corrupt_files_are_rejected) {
    std::string path = temp_path("db5.jsonl");
    save_database(build_database(5), 5, path);
    std::string text = slurp(path);

    std::string truncated = temp_path("truncated.jsonl");
    std::ofstream(truncated, std::ios::binary) << text.substr(0, text.size() - 20);
    EXPECT_THROW(load_database(truncated), IntegrityError);

    std::string flipped = temp_path("flipped.jsonl");
    std::string t2 = text;
    t2[t2.size() - 5] = t2[t2.size() - 5] == '0' ? '1' : '0';
    std::ofstream(flipped, std::ios::binary) << t2;
    EXPECT_THROW(load_database(flipped), IntegrityError);

    std::string version = temp_path("version.jsonl");
    std::string t3 = text;
    t3.replace(t3.find("\"version\":1"), 11, "\"version\":7");
    std::ofstream(version, std::ios::binary) << t3;
    EXPECT_THROW(load_database(version), IntegrityError);

    EXPECT_THROW(load_database(temp_path("missing.jsonl")), IntegrityError);
}

TEST(classdb, checkpoint_resume) {
    std::string ckpt = temp_path("ckpt.jsonl");
    std::filesystem::remove(ckpt);
    BuildOptions opts{.workers = 1, .checkpoint_path = ckpt};
    auto full = build_database(7, opts);
    // Keep half the completed orbits plus a torn line, as after a crash.
    std::string text = slurp(ckpt);
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), full.size());
    {
        std::ofstream out(ckpt, std::ios::trunc);
        for (size_t i = 0; i < lines.size() / 2; i++) {
            out << lines[i] << "\n";
        }
        out << lines.back().substr(0, 10);
    }
    BuildStats stats;
    auto resumed = build_database(7, opts, &stats);
    EXPECT_EQ(stats.resumed_orbits, lines.size() / 2);
    EXPECT_EQ(resumed, full);
}

TEST(classdb, classify) {
    ClassDatabase db(7, db7());
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; t++) {
        Graph g = oracle::random_connected_graph(7, rng);
        const ClassRecord &r = classify(g, db);
        EXPECT_EQ(&classify(local_complement(g, rng() % 7), db), &r);
        EXPECT_EQ(&classify(g.permuted(oracle::random_permutation(7, rng)), db), &r);
    }
    const ClassRecord &k7 = classify(Graph::complete(7), db);
    EXPECT_EQ(k7.orbit_size, 2u);
    EXPECT_EQ(k7.min_edges, 6u);
    EXPECT_THROW(classify(Graph::path(6), db), ArgumentError);
    EXPECT_THROW(classify(parse_edge_list("0-1,2-3,4-5,5-6", 7), db), ArgumentError);

    // A database missing the class must say so.
    std::vector<ClassRecord> partial;
    for (const auto &r : db7()) {
        if (r.orbit_key != k7.orbit_key) {
            partial.push_back(r);
        }
    }
    ClassDatabase smaller(7, partial);
    EXPECT_THROW(classify(Graph::star(7), smaller), IntegrityError);
}

TEST(classdb, record_json) {
    for (const auto &r : db7()) {
        EXPECT_EQ(record_from_json(record_to_json(r)), r);
    }
    EXPECT_THROW(record_from_json("{\"class_id\":1}"), ParseError);
    EXPECT_THROW(record_from_json("nope"), ParseError);
}

TEST(classdb, graph6_files) {
    std::string path = temp_path("census5.g6");
    {
        std::ofstream out(path);
        for (const Graph &g : generate_connected_graphs(5)) {
            out << write_graph6(g) << "\n";
        }
        out << "\n";
    }
    auto graphs = read_graph6_file(path);
    EXPECT_EQ(graphs.size(), 21u);
    EXPECT_EQ(build_database(5, graphs).size(), 4u);
}
