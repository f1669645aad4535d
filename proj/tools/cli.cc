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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gsf/canonical.h"
#include "gsf/classdb.h"
#include "gsf/compiler.h"
#include "gsf/errors.h"
#include "gsf/generate.h"
#include "gsf/graph6.h"
#include "json.hpp"

namespace gsf::cli {

namespace {

struct GraphInput {
    std::string positional;
    std::string edges;
    std::string g6;
    std::string file;
    size_t n = 0;
};

struct Common {
    std::string format = "text";
    size_t budget = OrbitOptions{}.member_budget;
    std::uint64_t coloring_budget = ColoringOptions{}.node_budget;
    std::string db;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    auto ws = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
    while (!s.empty() && ws(s.back())) {
        s.pop_back();
    }
    size_t i = 0;
    while (i < s.size() && ws(s[i])) {
        i++;
    }
    return s.substr(i);
}

Graph parse_auto(const std::string &text, size_t n) {
    if (looks_like_graph6(text) && text.find('-') == std::string::npos) {
        if (n != 0) {
            throw ArgumentError("--n applies to edge lists only");
        }
        return parse_graph6(text);
    }
    return parse_edge_list(text, n);
}

Graph resolve_graph(const GraphInput &in) {
    int sources = !in.positional.empty() + !in.edges.empty() + !in.g6.empty() + !in.file.empty();
    if (sources != 1) {
        throw ArgumentError("give exactly one graph source (positional, --edges, --g6 or --file)");
    }
    if (!in.edges.empty()) {
        return parse_edge_list(in.edges, in.n);
    }
    if (!in.g6.empty()) {
        return parse_graph6(in.g6);
    }
    if (!in.file.empty()) {
        return parse_auto(trim(read_file(in.file)), in.n);
    }
    return parse_auto(in.positional, in.n);
}

void add_graph_options(CLI::App *cmd, GraphInput &in) {
    cmd->add_option("graph", in.positional, "Graph as an edge list (\"0-1,1-2\") or graph6 string");
    cmd->add_option("--edges", in.edges, "Graph as an edge list");
    cmd->add_option("--g6", in.g6, "Graph as a graph6 string");
    cmd->add_option("--file", in.file, "File holding an edge list or graph6 string");
    cmd->add_option("--n", in.n, "Vertex count for edge lists with trailing isolated vertices")
        ->check(CLI::Range(1, static_cast<int>(MAX_VERTICES)));
}

void add_format(CLI::App *cmd, Common &c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_budgets(CLI::App *cmd, Common &c) {
    cmd->add_option("--budget", c.budget, "Maximum LC orbit size before giving up")->check(CLI::PositiveNumber);
    cmd->add_option("--coloring-budget", c.coloring_budget, "Search nodes for the ordered edge-coloring attempt")
        ->check(CLI::PositiveNumber);
}

std::string db_path(const std::string &flag, size_t n) {
    std::string base = flag;
    if (base.empty()) {
        const char *env = std::getenv("GSF_DB_DIR");
        base = env ? env : ".";
    }
    if (std::filesystem::is_directory(base)) {
        return (std::filesystem::path(base) / database_file_name(n)).string();
    }
    return base;
}

std::string optimum_text(const OptimumSummary &s) {
    return "(" + std::to_string(s.edges) + ", " + std::to_string(s.chromatic_index) + ", " + std::to_string(s.count) +
           ") " + s.coloring.str();
}

std::string join(const std::vector<std::uint64_t> &v) {
    std::string out;
    for (auto x : v) {
        if (!out.empty()) {
            out += ",";
        }
        out += std::to_string(x);
    }
    return out;
}

void print_record(const ClassRecord &r, const std::string &format, std::ostream &out) {
    if (format == "json") {
        out << record_to_json(r);
        return;
    }
    if (r.class_id) {
        out << "class          " << r.class_id << "\n";
    }
    out << "n              " << r.n << "\n";
    out << "orbit size     " << r.orbit_size << "\n";
    out << "min edges      " << r.min_edges << "\n";
    out << "schmidt        [" << r.schmidt.lower << ", " << r.schmidt.upper << "]\n";
    for (size_t i = 2; i <= r.n / 2; i++) {
        out << "RI_" << i << "           " << join(r.rank_indexes.index(i)) << "\n";
    }
    out << "two-colorable  " << (r.two_colorable ? "yes" : "no") << "\n";
    out << "min(|E|,chi')  " << optimum_text(r.min_edges_first) << "\n";
    out << "min(chi',|E|)  " << (r.min_chi_first ? optimum_text(*r.min_chi_first) : "-") << "\n";
    out << "fingerprint    " << join(r.fingerprint.counts) << "\n";
    out << "orbit key      " << r.orbit_key << "\n";
}

int cmd_classify(const GraphInput &in, const Common &c, std::ostream &out) {
    Graph g = resolve_graph(in);
    ClassDatabase db = load_database(db_path(c.db, g.num_vertices()));
    OrbitOptions opts;
    opts.member_budget = c.budget;
    print_record(classify(g, db, opts), c.format, out);
    return OK;
}

int cmd_compile(const GraphInput &in, const Common &c, const std::string &strategy, std::ostream &out) {
    Graph g = resolve_graph(in);
    CompileOptions opts;
    opts.orbit.member_budget = c.budget;
    opts.coloring.node_budget = c.coloring_budget;
    Circuit circuit = compile(g, *parse_strategy(strategy), opts);
    if (c.format == "json") {
        out << emit_json(circuit);
        return OK;
    }
    out << "# strategy " << strategy << ": depth " << circuit.depth << " (standard " << circuit.standard_depth
        << "), CZ " << circuit.cz_count << " (standard " << circuit.standard_cz_count << ")\n";
    out << emit_text(circuit);
    return OK;
}

int cmd_orbit(const GraphInput &in, const Common &c, std::ostream &out) {
    Graph g = resolve_graph(in);
    if (!is_connected(g)) {
        throw ArgumentError("orbit summaries need a connected graph");
    }
    OrbitOptions opts;
    opts.member_budget = c.budget;
    opts.record_moves = false;
    ColoringOptions coloring;
    coloring.node_budget = c.coloring_budget;
    print_record(summarize_orbit(enumerate_orbit(g, opts), coloring), c.format, out);
    return OK;
}

struct BuildArgs {
    size_t n = 0;
    std::string out;
    std::string census;
    std::string checkpoint;
    size_t workers = 0;
    bool allow_large = false;
};

int cmd_db_build(const BuildArgs &b, const Common &c, std::ostream &out, std::ostream &err) {
    BuildOptions opts;
    opts.workers = b.workers;
    opts.allow_large = b.allow_large;
    opts.checkpoint_path = b.checkpoint;
    opts.orbit.member_budget = c.budget;
    opts.coloring.node_budget = c.coloring_budget;
    size_t last_percent = 0;
    opts.progress = [&](size_t done, size_t total) {
        size_t percent = total ? done * 100 / total : 100;
        if (percent >= last_percent + 10) {
            last_percent = percent;
            err << "db-build n=" << b.n << ": " << percent << "% of graphs\n";
        }
    };
    BuildStats stats;
    std::vector<ClassRecord> records;
    if (b.census.empty()) {
        records = build_database(b.n, opts, &stats);
    } else {
        std::vector<Graph> census = read_graph6_file(b.census);
        records = build_database(b.n, census, opts, &stats);
    }
    if (stats.vizing_violations != 0) {
        throw InvariantViolation("chromatic index outside the Vizing bracket");
    }
    std::string path = b.out.empty() ? db_path(c.db, b.n) : b.out;
    save_database(records, b.n, path);
    if (!b.checkpoint.empty()) {
        std::filesystem::remove(b.checkpoint);
    }
    if (c.format == "json") {
        nlohmann::ordered_json j{{"n", b.n},
                                 {"classes", records.size()},
                                 {"exceptional", exceptional_orbits(records)},
                                 {"graphs", stats.census_size},
                                 {"path", path}};
        out << j.dump() << "\n";
    } else {
        out << "n=" << b.n << " classes=" << records.size() << " exceptional=" << exceptional_orbits(records)
            << " graphs=" << stats.census_size << " -> " << path << "\n";
    }
    return OK;
}

int cmd_verify(const GraphInput &in, const std::string &circuit_path, const Common &c, std::ostream &out) {
    Graph g = resolve_graph(in);
    Circuit circuit = parse_circuit_json(read_file(circuit_path));
    bool ok = circuit.n == g.num_vertices() && verify(circuit, g);
    if (c.format == "json") {
        out << nlohmann::ordered_json{{"verified", ok}}.dump() << "\n";
    } else {
        out << (ok ? "verified" : "mismatch") << "\n";
    }
    return ok ? OK : VERIFICATION_FAILED;
}

int cmd_census(size_t n, const std::string &ingest, const Common &c, std::ostream &out) {
    if (ingest.empty()) {
        if (n == 0) {
            throw ArgumentError("census needs --n or --ingest");
        }
        for_each_connected_graph(n, [&](const Graph &g) { out << write_graph6(g) << "\n"; });
        return OK;
    }
    std::vector<Graph> graphs = read_graph6_file(ingest);
    std::set<GraphKey> classes;
    size_t connected = 0;
    for (const auto &g : graphs) {
        connected += is_connected(g);
        classes.insert(canonical_form(g).graph.key());
    }
    if (c.format == "json") {
        out << nlohmann::ordered_json{{"graphs", graphs.size()}, {"classes", classes.size()}, {"connected", connected}}
                   .dump()
            << "\n";
    } else {
        out << "graphs=" << graphs.size() << " classes=" << classes.size() << " connected=" << connected << "\n";
    }
    return OK;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Graph-state preparation compiler using local-complementation orbits", "gsf"};
    app.require_subcommand(1);

    Common common;
    GraphInput input;
    std::string strategy = "minDepth";
    std::string circuit_path;
    BuildArgs build;
    size_t census_n = 0;
    std::string ingest;

    std::vector<std::string> strategies{"standard", "minE", "minDepth"};

    auto *classify_cmd = app.add_subcommand("classify", "Identify the LC class of a graph");
    add_graph_options(classify_cmd, input);
    add_format(classify_cmd, common);
    add_budgets(classify_cmd, common);
    classify_cmd->add_option("--db", common.db, "Database file or directory (default $GSF_DB_DIR)");

    auto *compile_cmd = app.add_subcommand("compile", "Compile a preparation circuit");
    add_graph_options(compile_cmd, input);
    add_format(compile_cmd, common);
    add_budgets(compile_cmd, common);
    compile_cmd->add_option("--strategy", strategy, "standard, minE or minDepth")->check(CLI::IsMember(strategies));

    auto *orbit_cmd = app.add_subcommand("orbit", "Summarize the LC orbit of a graph");
    add_graph_options(orbit_cmd, input);
    add_format(orbit_cmd, common);
    add_budgets(orbit_cmd, common);

    auto *build_cmd = app.add_subcommand("db-build", "Build and save the class database for n vertices");
    build_cmd->add_option("--n", build.n, "Vertex count")->required()->check(CLI::Range(2, 12));
    build_cmd->add_option("--out", build.out, "Output file");
    build_cmd->add_option("--db", common.db, "Database directory (default $GSF_DB_DIR)");
    build_cmd->add_option("--census", build.census, "graph6 census file instead of the built-in generator");
    build_cmd->add_option("--checkpoint", build.checkpoint, "Checkpoint file for resumable builds");
    build_cmd->add_option("--workers", build.workers, "Worker threads (default: hardware threads)");
    build_cmd->add_flag("--allow-large", build.allow_large, "Permit n >= 10");
    add_format(build_cmd, common);
    add_budgets(build_cmd, common);

    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit JSON against a target graph");
    add_graph_options(verify_cmd, input);
    verify_cmd->add_option("--circuit", circuit_path, "Circuit JSON file")->required();
    add_format(verify_cmd, common);

    auto *census_cmd = app.add_subcommand("census", "Emit or ingest graph6 census lines");
    census_cmd->add_option("--n", census_n, "Emit all connected graphs on n vertices")
        ->check(CLI::Range(1, static_cast<int>(MAX_GENERATED_VERTICES)));
    census_cmd->add_option("--ingest", ingest, "Read and summarize a graph6 file");
    add_format(census_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return OK;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return OK;
    } catch (const CLI::ParseError &e) {
        err << "gsf: " << e.what() << "\n";
        return USAGE;
    }

    try {
        if (*classify_cmd) {
            return cmd_classify(input, common, out);
        }
        if (*compile_cmd) {
            return cmd_compile(input, common, strategy, out);
        }
        if (*orbit_cmd) {
            return cmd_orbit(input, common, out);
        }
        if (*build_cmd) {
            return cmd_db_build(build, common, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(input, circuit_path, common, out);
        }
        return cmd_census(census_n, ingest, common, out);
    } catch (const ParseError &e) {
        err << "gsf: " << e.what() << "\n";
        return USAGE;
    } catch (const ArgumentError &e) {
        err << "gsf: " << e.what() << "\n";
        return USAGE;
    } catch (const CapabilityError &e) {
        err << "gsf: " << e.what() << "\n";
        return USAGE;
    } catch (const ResourceError &e) {
        err << "gsf: " << e.what() << "\n";
        return RESOURCE;
    } catch (const IntegrityError &e) {
        err << "gsf: " << e.what() << "\n";
        return INTEGRITY;
    } catch (const InvariantViolation &e) {
        err << "gsf: internal error: " << e.what() << "\n";
        return VERIFICATION_FAILED;
    }
}

}  // namespace gsf::cli
