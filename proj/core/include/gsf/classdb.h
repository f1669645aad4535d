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

#ifndef GSF_CLASSDB_H
#define GSF_CLASSDB_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsf/graph.h"
#include "gsf/invariants.h"
#include "gsf/orbit.h"
#include "gsf/schedule.h"

namespace gsf {

/// (|E|, χ′, #) with a witness coloring of one attaining member.
struct OptimumSummary {
    size_t edges = 0;
    size_t chromatic_index = 0;
    size_t count = 0;
    EdgeColoring coloring;
    bool operator==(const OptimumSummary &) const = default;
};

struct ClassRecord {
    /// 1-based position in the sorted database for this n; 0 when not from a database.
    size_t class_id = 0;
    size_t n = 0;
    size_t orbit_size = 0;
    size_t min_edges = 0;
    SchmidtBounds schmidt;
    RankIndexProfile rank_indexes;
    bool two_colorable = false;
    OptimumSummary min_edges_first;
    /// Set only when the least-χ′ order selects a different (|E|, χ′) pair.
    std::optional<OptimumSummary> min_chi_first;
    WeightEnumerator fingerprint;
    /// Adjacency bit-string of the orbit's least canonical member.
    std::string orbit_key;

    bool operator==(const ClassRecord &) const = default;
};

/// Record for one orbit, with class_id 0.
ClassRecord summarize_orbit(const IsoOrbit &orbit, const ColoringOptions &coloring = {});

/// Database sort order: |E|, Schmidt bracket, rank indexes, fingerprint, |LC|, orbit key.
bool record_less(const ClassRecord &a, const ClassRecord &b);

struct BuildOptions {
    /// 0 means one worker per hardware thread.
    size_t workers = 0;
    /// Required for n >= 10.
    bool allow_large = false;
    /// Completed orbits are appended here and skipped when the build is restarted.
    std::string checkpoint_path;
    OrbitOptions orbit;
    ColoringOptions coloring;
    std::function<void(size_t graphs_done, size_t graphs_total)> progress;
};

struct BuildStats {
    size_t census_size = 0;
    size_t graphs_processed = 0;
    size_t resumed_orbits = 0;
    /// Members whose χ′ fell outside [Δ, Δ+1]. Always 0 unless something is broken.
    size_t vizing_violations = 0;
};

/// One record per LC orbit of connected graphs on n vertices, sorted by
/// `record_less`, using the built-in census generator.
std::vector<ClassRecord> build_database(size_t n, const BuildOptions &options = {}, BuildStats *stats = nullptr);
/// Same, over a supplied census (one graph per isomorphism class).
std::vector<ClassRecord> build_database(size_t n, std::span<const Graph> census, const BuildOptions &options = {},
                                        BuildStats *stats = nullptr);

/// Records whose two filter orders disagree.
size_t exceptional_orbits(std::span<const ClassRecord> records);

/// Re-enumerates the orbit behind a record and checks every stored field.
bool audit_record(const ClassRecord &record);

class ClassDatabase {
   public:
    ClassDatabase() = default;
    ClassDatabase(size_t n, std::vector<ClassRecord> records);

    size_t n() const {
        return n_;
    }
    const std::vector<ClassRecord> &records() const {
        return records_;
    }
    const ClassRecord *find_key(const std::string &orbit_key) const;

   private:
    size_t n_ = 0;
    std::vector<ClassRecord> records_;
    std::unordered_map<std::string, size_t> by_key_;
};

/// The record of the orbit containing g. Throws IntegrityError when the database has no such class.
const ClassRecord &classify(const Graph &g, const ClassDatabase &db, const OrbitOptions &options = {});

std::string record_to_json(const ClassRecord &r);
ClassRecord record_from_json(std::string_view line);

void save_database(const std::vector<ClassRecord> &records, size_t n, const std::string &path);
/// Throws IntegrityError on version, count or checksum mismatch.
ClassDatabase load_database(const std::string &path);
/// Conventional file name for the n-vertex database, e.g. "lc_classes_n8.jsonl".
std::string database_file_name(size_t n);

/// Reads one graph6 string per line, skipping blank lines.
std::vector<Graph> read_graph6_file(const std::string &path);

}  // namespace gsf

#endif
