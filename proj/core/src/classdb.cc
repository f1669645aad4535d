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

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "gsf/canonical.h"
#include "gsf/errors.h"
#include "gsf/generate.h"
#include "gsf/graph6.h"
#include "json.hpp"

namespace gsf {

namespace {

using json = nlohmann::ordered_json;

constexpr int DB_VERSION = 1;

OptimumSummary summary_of(const Optimum &o) {
    return OptimumSummary{o.edges, o.chromatic_index, o.count, o.coloring};
}

json summary_json(const OptimumSummary &s) {
    return json{{"edges", s.edges}, {"chi", s.chromatic_index}, {"count", s.count}, {"coloring", s.coloring.str()}};
}

OptimumSummary summary_from(const json &j) {
    OptimumSummary s;
    s.edges = j.at("edges").get<size_t>();
    s.chromatic_index = j.at("chi").get<size_t>();
    s.count = j.at("count").get<size_t>();
    s.coloring = EdgeColoring::parse(j.at("coloring").get<std::string>());
    return s;
}

std::uint32_t checksum(const std::string &body) {
    return static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef *>(body.data()), static_cast<uInt>(body.size())));
}

void check_size(size_t n, const BuildOptions &options) {
    if (n < 2 || n > 12) {
        throw ArgumentError("database size must be in 2..12");
    }
    if (n >= 10 && !options.allow_large) {
        throw CapabilityError("databases for n >= 10 are hours-scale builds; enable them explicitly");
    }
}

// Shared state of one build.
class Builder {
   public:
    Builder(size_t n, std::vector<GraphKey> census, const BuildOptions &options)
        : n_(n), census_(std::move(census)), visited_(census_.size()), options_(options) {
    }

    std::vector<ClassRecord> run(BuildStats *stats) {
        resume();
        size_t workers = options_.workers ? options_.workers : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> threads;
        for (size_t w = 1; w < workers; w++) {
            threads.emplace_back([this] { work(); });
        }
        work();
        for (auto &t : threads) {
            t.join();
        }
        if (error_) {
            std::rethrow_exception(error_);
        }

        std::sort(records_.begin(), records_.end(),
                  [](const ClassRecord &a, const ClassRecord &b) { return a.orbit_key < b.orbit_key; });
        // Two workers may have started seeds in the same orbit at the same time.
        records_.erase(std::unique(records_.begin(), records_.end(),
                                   [](const ClassRecord &a, const ClassRecord &b) {
                                       return a.orbit_key == b.orbit_key;
                                   }),
                       records_.end());
        size_t total = 0;
        for (const auto &r : records_) {
            total += r.orbit_size;
        }
        if (total != census_.size()) {
            throw IntegrityError("orbit sizes sum to " + std::to_string(total) + " but the census has " +
                                 std::to_string(census_.size()) + " graphs");
        }
        std::sort(records_.begin(), records_.end(), record_less);
        for (size_t i = 0; i < records_.size(); i++) {
            records_[i].class_id = i + 1;
        }
        if (stats) {
            stats->census_size = census_.size();
            stats->graphs_processed = processed_;
            stats->resumed_orbits = resumed_;
            stats->vizing_violations = vizing_violations_;
        }
        return std::move(records_);
    }

   private:
    size_t index_of(const Graph &canonical) const {
        GraphKey k = canonical.key();
        auto it = std::lower_bound(census_.begin(), census_.end(), k);
        if (it == census_.end() || !(*it == k)) {
            throw IntegrityError("orbit member " + canonical.str() + " is missing from the census");
        }
        return static_cast<size_t>(it - census_.begin());
    }

    IsoOrbit orbit_of(const Graph &g) const {
        OrbitOptions opts = options_.orbit;
        opts.record_moves = false;
        return enumerate_orbit(g, opts);
    }

    void mark(const IsoOrbit &orbit) {
        for (const auto &m : orbit.members()) {
            visited_[index_of(m)].store(true, std::memory_order_relaxed);
        }
    }

    void resume() {
        if (options_.checkpoint_path.empty()) {
            return;
        }
        std::ifstream in(options_.checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            ClassRecord r;
            try {
                r = record_from_json(line);
            } catch (const ParseError &) {
                // A crash can leave a partial last line; that orbit is rebuilt.
                continue;
            }
            if (r.n != n_) {
                throw IntegrityError("checkpoint belongs to a different n");
            }
            IsoOrbit orbit = orbit_of(Graph::from_bitstring(n_, r.orbit_key));
            mark(orbit);
            processed_ += orbit.size();
            records_.push_back(std::move(r));
            resumed_++;
        }
        checkpoint_.open(options_.checkpoint_path, std::ios::app);
        if (!checkpoint_) {
            throw IntegrityError("cannot open checkpoint file " + options_.checkpoint_path);
        }
    }

    void work() {
        try {
            while (!failed_.load()) {
                size_t i = next_.fetch_add(1);
                if (i >= census_.size()) {
                    return;
                }
                bool expected = false;
                if (!visited_[i].compare_exchange_strong(expected, true)) {
                    continue;
                }
                IsoOrbit orbit = orbit_of(Graph::from_key(census_[i]));
                mark(orbit);
                std::vector<MemberProfile> profiles = profile_members(orbit);
                size_t violations = 0;
                for (size_t m = 0; m < orbit.size(); m++) {
                    size_t delta = orbit.member(m).max_degree();
                    if (profiles[m].chromatic_index < delta || profiles[m].chromatic_index > delta + 1) {
                        violations++;
                    }
                }
                ClassRecord r = summarize(orbit, profiles);
                std::lock_guard<std::mutex> lock(mutex_);
                vizing_violations_ += violations;
                processed_ += orbit.size();
                if (checkpoint_.is_open()) {
                    checkpoint_ << record_to_json(r) << std::flush;
                }
                records_.push_back(std::move(r));
                if (options_.progress) {
                    options_.progress(processed_, census_.size());
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (!error_) {
                error_ = std::current_exception();
            }
            failed_.store(true);
        }
    }

   public:
    static ClassRecord summarize(const IsoOrbit &orbit, std::span<const MemberProfile> profiles) {
        RepresentativeReport report = optimal_representatives(orbit, profiles);
        ClassRecord r;
        r.n = orbit.num_vertices();
        r.orbit_size = orbit.size();
        r.min_edges = report.min_edges_first.edges;
        r.schmidt = schmidt_bounds(orbit);
        r.rank_indexes = rank_indexes(orbit.source());
        r.two_colorable = two_colorable_member(orbit).has_value();
        r.min_edges_first = summary_of(report.min_edges_first);
        if (report.min_chi_first) {
            r.min_chi_first = summary_of(*report.min_chi_first);
        }
        r.fingerprint = weight_enumerator(orbit.source());
        r.orbit_key = orbit.member(orbit.least_member()).bitstring();
        return r;
    }

   private:
    size_t n_;
    std::vector<GraphKey> census_;
    std::vector<std::atomic<bool>> visited_;
    const BuildOptions &options_;
    std::atomic<size_t> next_{0};
    std::atomic<bool> failed_{false};
    std::mutex mutex_;
    std::exception_ptr error_;
    std::ofstream checkpoint_;
    std::vector<ClassRecord> records_;
    size_t processed_ = 0;
    size_t resumed_ = 0;
    size_t vizing_violations_ = 0;
};

std::vector<ClassRecord> build_from_keys(size_t n, std::vector<GraphKey> keys, const BuildOptions &options,
                                         BuildStats *stats) {
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
        throw IntegrityError("census lists an isomorphism class twice");
    }
    Builder builder(n, std::move(keys), options);
    return builder.run(stats);
}

}  // namespace

ClassRecord summarize_orbit(const IsoOrbit &orbit, const ColoringOptions &coloring) {
    std::vector<MemberProfile> profiles;
    profiles.reserve(orbit.size());
    for (const auto &m : orbit.members()) {
        profiles.push_back(MemberProfile{m.num_edges(), chromatic_index(m, coloring)});
    }
    return Builder::summarize(orbit, profiles);
}

bool record_less(const ClassRecord &a, const ClassRecord &b) {
    return std::tie(a.min_edges, a.schmidt, a.rank_indexes, a.fingerprint, a.orbit_size, a.orbit_key) <
           std::tie(b.min_edges, b.schmidt, b.rank_indexes, b.fingerprint, b.orbit_size, b.orbit_key);
}

std::vector<ClassRecord> build_database(size_t n, const BuildOptions &options, BuildStats *stats) {
    check_size(n, options);
    if (n > MAX_GENERATED_VERTICES) {
        throw CapabilityError("the built-in generator stops at n = " + std::to_string(MAX_GENERATED_VERTICES) +
                              "; supply a graph6 census");
    }
    std::vector<GraphKey> keys;
    for_each_connected_graph(n, [&](const Graph &g) { keys.push_back(g.key()); });
    return build_from_keys(n, std::move(keys), options, stats);
}

std::vector<ClassRecord> build_database(size_t n, std::span<const Graph> census, const BuildOptions &options,
                                        BuildStats *stats) {
    check_size(n, options);
    std::vector<GraphKey> keys;
    keys.reserve(census.size());
    for (const auto &g : census) {
        if (g.num_vertices() != n) {
            throw IntegrityError("census graph " + g.str() + " has the wrong vertex count");
        }
        if (!is_connected(g)) {
            throw IntegrityError("census graph " + g.str() + " is disconnected");
        }
        keys.push_back(canonical_form(g).graph.key());
    }
    return build_from_keys(n, std::move(keys), options, stats);
}

size_t exceptional_orbits(std::span<const ClassRecord> records) {
    return static_cast<size_t>(
        std::count_if(records.begin(), records.end(), [](const ClassRecord &r) { return r.min_chi_first.has_value(); }));
}

bool audit_record(const ClassRecord &record) {
    Graph seed = Graph::from_bitstring(record.n, record.orbit_key);
    IsoOrbit orbit = enumerate_orbit(seed, OrbitOptions{.member_budget = OrbitOptions{}.member_budget, .record_moves = false});
    ClassRecord fresh = summarize_orbit(orbit);
    fresh.class_id = record.class_id;
    auto colorings_ok = [&](const OptimumSummary &s) {
        Graph g(record.n);
        for (const auto &cls : s.coloring.classes()) {
            for (const Edge &e : cls) {
                g.add_edge(e.a, e.b);
            }
        }
        if (!is_proper_coloring(g, s.coloring) || s.coloring.num_colors() != s.chromatic_index ||
            g.num_edges() != s.edges) {
            return false;
        }
        auto idx = orbit.find(canonical_form(g).graph);
        return idx.has_value();
    };
    if (!colorings_ok(record.min_edges_first) || (record.min_chi_first && !colorings_ok(*record.min_chi_first))) {
        return false;
    }
    auto strip = [](ClassRecord r) {
        r.min_edges_first.coloring = {};
        if (r.min_chi_first) {
            r.min_chi_first->coloring = {};
        }
        return r;
    };
    return strip(fresh) == strip(record);
}

ClassDatabase::ClassDatabase(size_t n, std::vector<ClassRecord> records) : n_(n), records_(std::move(records)) {
    for (size_t i = 0; i < records_.size(); i++) {
        if (records_[i].n != n_) {
            throw IntegrityError("record " + std::to_string(records_[i].class_id) + " has the wrong n");
        }
        if (!by_key_.emplace(records_[i].orbit_key, i).second) {
            throw IntegrityError("duplicate orbit key in database");
        }
    }
}

const ClassRecord *ClassDatabase::find_key(const std::string &orbit_key) const {
    auto it = by_key_.find(orbit_key);
    return it == by_key_.end() ? nullptr : &records_[it->second];
}

const ClassRecord &classify(const Graph &g, const ClassDatabase &db, const OrbitOptions &options) {
    if (g.num_vertices() != db.n()) {
        throw ArgumentError("graph has " + std::to_string(g.num_vertices()) + " vertices but the database covers n = " +
                            std::to_string(db.n()));
    }
    if (!is_connected(g)) {
        throw ArgumentError("classify needs a connected graph");
    }
    WeightEnumerator fp = weight_enumerator(g);
    bool any = std::any_of(db.records().begin(), db.records().end(),
                           [&](const ClassRecord &r) { return r.fingerprint == fp; });
    if (!any) {
        throw IntegrityError("no class in the database has this graph's fingerprint");
    }
    OrbitOptions opts = options;
    opts.record_moves = false;
    IsoOrbit orbit = enumerate_orbit(g, opts);
    const ClassRecord *r = db.find_key(orbit.member(orbit.least_member()).bitstring());
    if (r == nullptr || !(r->fingerprint == fp)) {
        throw IntegrityError("graph's orbit is missing from the database");
    }
    return *r;
}

std::string record_to_json(const ClassRecord &r) {
    json j;
    j["class_id"] = r.class_id;
    j["n"] = r.n;
    j["orbit_size"] = r.orbit_size;
    j["min_edges"] = r.min_edges;
    j["schmidt"] = {r.schmidt.lower, r.schmidt.upper};
    j["rank_indexes"] = r.rank_indexes.counts;
    j["two_colorable"] = r.two_colorable;
    j["min_edges_first"] = summary_json(r.min_edges_first);
    j["min_chi_first"] = r.min_chi_first ? summary_json(*r.min_chi_first) : json(nullptr);
    j["fingerprint"] = r.fingerprint.counts;
    j["orbit_key"] = r.orbit_key;
    return j.dump() + "\n";
}

ClassRecord record_from_json(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid record JSON: ") + e.what(), e.byte);
    }
    try {
        ClassRecord r;
        r.class_id = j.at("class_id").get<size_t>();
        r.n = j.at("n").get<size_t>();
        r.orbit_size = j.at("orbit_size").get<size_t>();
        r.min_edges = j.at("min_edges").get<size_t>();
        r.schmidt = SchmidtBounds{j.at("schmidt").at(0).get<size_t>(), j.at("schmidt").at(1).get<size_t>()};
        r.rank_indexes.n = r.n;
        r.rank_indexes.counts = j.at("rank_indexes").get<std::vector<std::vector<std::uint64_t>>>();
        r.two_colorable = j.at("two_colorable").get<bool>();
        r.min_edges_first = summary_from(j.at("min_edges_first"));
        if (!j.at("min_chi_first").is_null()) {
            r.min_chi_first = summary_from(j.at("min_chi_first"));
        }
        r.fingerprint.counts = j.at("fingerprint").get<std::vector<std::uint64_t>>();
        r.orbit_key = j.at("orbit_key").get<std::string>();
        if (r.n < 1 || r.n > MAX_VERTICES || r.orbit_key.size() != r.n * (r.n - 1) / 2) {
            throw ParseError("record has an inconsistent size", 0);
        }
        return r;
    } catch (const json::exception &e) {
        throw ParseError(std::string("record does not match the schema: ") + e.what(), 0);
    }
}

void save_database(const std::vector<ClassRecord> &records, size_t n, const std::string &path) {
    std::string body;
    for (const auto &r : records) {
        body += record_to_json(r);
    }
    json header;
    header["version"] = DB_VERSION;
    header["n"] = n;
    header["count"] = records.size();
    header["checksum"] = checksum(body);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IntegrityError("cannot write database file " + path);
    }
    out << header.dump() << "\n" << body;
    if (!out.flush()) {
        throw IntegrityError("failed writing database file " + path);
    }
}

ClassDatabase load_database(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IntegrityError("cannot open database file " + path);
    }
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw IntegrityError("database file " + path + " is empty");
    }
    std::stringstream rest;
    rest << in.rdbuf();
    std::string body = rest.str();

    json header;
    try {
        header = json::parse(header_line);
        if (header.at("version").get<int>() != DB_VERSION) {
            throw IntegrityError("database version " + header.at("version").dump() + " is not supported");
        }
        if (header.at("checksum").get<std::uint32_t>() != checksum(body)) {
            throw IntegrityError("database checksum mismatch in " + path);
        }
    } catch (const json::exception &e) {
        throw IntegrityError(std::string("malformed database header: ") + e.what());
    }
    size_t n = header.at("n").get<size_t>();
    size_t count = header.at("count").get<size_t>();
    std::vector<ClassRecord> records;
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
        try {
            records.push_back(record_from_json(line));
        } catch (const ParseError &e) {
            throw IntegrityError(std::string("corrupt database record: ") + e.what());
        }
    }
    if (records.size() != count) {
        throw IntegrityError("database header announces " + std::to_string(count) + " records but the file has " +
                             std::to_string(records.size()));
    }
    return ClassDatabase(n, std::move(records));
}

std::string database_file_name(size_t n) {
    return "lc_classes_n" + std::to_string(n) + ".jsonl";
}

std::vector<Graph> read_graph6_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IntegrityError("cannot open census file " + path);
    }
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace gsf
