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

#include "gsf/compiler.h"

#include <algorithm>
#include "json.hpp"

#include "gsf/errors.h"
#include "gsf/tableau.h"

namespace gsf {

namespace {

constexpr std::array<std::string_view, 3> STRATEGY_NAMES{"standard", "minE", "minDepth"};

// A route for one connected component, in the component's own labels.
struct Route {
    std::vector<std::vector<Edge>> layers;
    LocalUnitaryLayer final_layer;
    size_t cz = 0;
    size_t depth = 0;
};

Route route_for(const Graph &start, LocalUnitaryLayer final_layer, const ColoringOptions &opts) {
    Route r;
    EdgeColoring coloring = edge_color_optimal(start, opts);
    r.layers = coloring.classes();
    r.cz = start.num_edges();
    r.depth = r.layers.size() + (final_layer.is_identity() ? 0 : 1);
    r.final_layer = std::move(final_layer);
    return r;
}

Route standard_route(const Graph &g, const ColoringOptions &opts) {
    return route_for(g, LocalUnitaryLayer::identity(g.num_vertices()), opts);
}

Route orbit_route(const Graph &g, const IsoOrbit &orbit, const RepresentativeReport &report, FilterOrder order,
                  const ColoringOptions &opts) {
    LcSequence seq = find_lc_sequence(g, orbit, report, order);
    return route_for(seq.start, compose_sequence(seq.start, seq.vertices), opts);
}

Route component_route(const Graph &g, Strategy strategy, const CompileOptions &options) {
    Route standard = standard_route(g, options.coloring);
    if (strategy == Strategy::Standard || g.num_edges() == 0) {
        return standard;
    }
    OrbitOptions orbit_opts = options.orbit;
    orbit_opts.record_moves = false;
    IsoOrbit orbit = enumerate_orbit(g, orbit_opts);
    RepresentativeReport report = optimal_representatives(orbit);
    if (strategy == Strategy::MinEdges) {
        return orbit_route(g, orbit, report, FilterOrder::MinEdgesFirst, options.coloring);
    }
    Route route = orbit_route(g, orbit, report, FilterOrder::MinChiFirst, options.coloring);
    if (standard.depth < route.depth || (standard.depth == route.depth && standard.cz <= route.cz)) {
        return standard;
    }
    return route;
}

void finish(Circuit &c) {
    c.cz_count = 0;
    for (const auto &layer : c.cz_layers) {
        c.cz_count += layer.size();
    }
    c.depth = c.cz_layers.size() + (c.final_layer.is_identity() ? 0 : 1);
}

Circuit assemble(const Graph &g, Strategy strategy, const CompileOptions &options) {
    size_t n = g.num_vertices();
    Circuit c;
    c.n = n;
    c.strategy = strategy;
    c.final_layer = LocalUnitaryLayer::identity(n);
    for (VertexSet comp : connected_components(g)) {
        if (set_size(comp) < 2) {
            continue;
        }
        std::vector<size_t> label;
        for (size_t v = 0; v < n; v++) {
            if ((comp >> v) & 1u) {
                label.push_back(v);
            }
        }
        Route r = component_route(g.induced(comp), strategy, options);
        if (c.cz_layers.size() < r.layers.size()) {
            c.cz_layers.resize(r.layers.size());
        }
        for (size_t k = 0; k < r.layers.size(); k++) {
            for (const Edge &e : r.layers[k]) {
                c.cz_layers[k].push_back(Edge{label[e.a], label[e.b]});
            }
        }
        for (size_t q = 0; q < label.size(); q++) {
            c.final_layer.gates[label[q]] = r.final_layer.gates[q];
        }
    }
    for (auto &layer : c.cz_layers) {
        std::sort(layer.begin(), layer.end());
    }
    finish(c);
    return c;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    return STRATEGY_NAMES[static_cast<size_t>(s)];
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    for (size_t i = 0; i < STRATEGY_NAMES.size(); i++) {
        if (STRATEGY_NAMES[i] == name) {
            return static_cast<Strategy>(i);
        }
    }
    return std::nullopt;
}

Circuit compile(const Graph &g, Strategy strategy, const CompileOptions &options) {
    Circuit standard = assemble(g, Strategy::Standard, options);
    Circuit c = strategy == Strategy::Standard ? standard : assemble(g, strategy, options);
    // Per-component choices can still lose to the standard circuit once merged.
    if (strategy == Strategy::MinDepth && c.depth > standard.depth) {
        c = standard;
        c.strategy = strategy;
    }
    c.standard_depth = standard.depth;
    c.standard_cz_count = standard.cz_count;
    if (!verify(c, g)) {
        throw InvariantViolation("compiled circuit does not prepare the target state");
    }
    return c;
}

bool layers_legal(const Circuit &c) {
    if (c.final_layer.size() != c.n || c.n == 0 || c.n > MAX_VERTICES) {
        return false;
    }
    for (const auto &layer : c.cz_layers) {
        VertexSet used = 0;
        for (const Edge &e : layer) {
            if (e.a >= c.n || e.b >= c.n || e.a == e.b) {
                return false;
            }
            VertexSet pair = static_cast<VertexSet>(vertex_bit(e.a) | vertex_bit(e.b));
            if (used & pair) {
                return false;
            }
            used |= pair;
        }
    }
    return true;
}

bool verify(const Circuit &c, const Graph &g) {
    if (c.n != g.num_vertices() || !layers_legal(c)) {
        return false;
    }
    StabilizerTableau t = StabilizerTableau::plus_state(c.n);
    for (const auto &layer : c.cz_layers) {
        for (const Edge &e : layer) {
            t.cz(e.a, e.b);
        }
    }
    t.layer(c.final_layer);
    return tableaux_equal(t, graph_state_tableau(g));
}

AdvantageReport advantage_report(const Graph &g, const CompileOptions &options) {
    if (!is_connected(g)) {
        throw ArgumentError("advantage report needs a connected graph");
    }
    AdvantageReport out;
    out.standard_depth = chromatic_index(g, options.coloring);
    if (g.num_edges() == 0) {
        return out;
    }
    OrbitOptions orbit_opts = options.orbit;
    orbit_opts.record_moves = false;
    IsoOrbit orbit = enumerate_orbit(g, orbit_opts);
    RepresentativeReport report = optimal_representatives(orbit);
    Route route = orbit_route(g, orbit, report, FilterOrder::MinChiFirst, options.coloring);
    const Optimum &best = report.depth_optimum();
    out.orbit_depth = route.depth;
    out.cz_saved = static_cast<long>(g.num_edges()) - static_cast<long>(best.edges);
    out.advantageous = out.standard_depth > best.chromatic_index + 1;
    return out;
}

std::string emit_json(const Circuit &c) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = c.n;
    j["strategy"] = strategy_name(c.strategy);
    auto layers = nlohmann::ordered_json::array();
    for (const auto &layer : c.cz_layers) {
        auto pairs = nlohmann::ordered_json::array();
        for (const Edge &e : layer) {
            pairs.push_back({e.a, e.b});
        }
        layers.push_back(std::move(pairs));
    }
    j["cz_layers"] = std::move(layers);
    auto final_layer = nlohmann::ordered_json::array();
    for (size_t q = 0; q < c.final_layer.size(); q++) {
        if (c.final_layer.gates[q].is_identity()) {
            continue;
        }
        auto tokens = nlohmann::ordered_json::array();
        for (GateToken t : decompose(c.final_layer.gates[q])) {
            tokens.push_back(token_name(t));
        }
        final_layer.push_back({{"qubit", q}, {"gates", std::move(tokens)}});
    }
    j["final_layer"] = std::move(final_layer);
    j["cz_count"] = c.cz_count;
    j["depth"] = c.depth;
    j["standard_depth"] = c.standard_depth;
    j["standard_cz_count"] = c.standard_cz_count;
    return j.dump() + "\n";
}

Circuit parse_circuit_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid circuit JSON: ") + e.what(), e.byte);
    }
    try {
        if (j.at("version").get<int>() != 1) {
            throw ParseError("unsupported circuit version", 0);
        }
        Circuit c;
        c.n = j.at("n").get<size_t>();
        if (c.n == 0 || c.n > MAX_VERTICES) {
            throw ParseError("circuit size out of range", 0);
        }
        auto strategy = parse_strategy(j.at("strategy").get<std::string>());
        if (!strategy) {
            throw ParseError("unknown strategy", 0);
        }
        c.strategy = *strategy;
        for (const auto &layer : j.at("cz_layers")) {
            std::vector<Edge> pairs;
            for (const auto &pair : layer) {
                if (pair.size() != 2) {
                    throw ParseError("CZ entries must be pairs", 0);
                }
                size_t a = pair[0].get<size_t>(), b = pair[1].get<size_t>();
                pairs.push_back(Edge{std::min(a, b), std::max(a, b)});
            }
            c.cz_layers.push_back(std::move(pairs));
        }
        c.final_layer = LocalUnitaryLayer::identity(c.n);
        for (const auto &entry : j.at("final_layer")) {
            size_t q = entry.at("qubit").get<size_t>();
            if (q >= c.n) {
                throw ParseError("final layer qubit out of range", 0);
            }
            std::vector<GateToken> word;
            for (const auto &tok : entry.at("gates")) {
                auto t = parse_token(tok.get<std::string>());
                if (!t) {
                    throw ParseError("unknown gate token " + tok.get<std::string>(), 0);
                }
                word.push_back(*t);
            }
            c.final_layer.gates[q] = c.final_layer.gates[q].then(SingleQubitClifford::from_word(word));
        }
        c.cz_count = j.at("cz_count").get<size_t>();
        c.depth = j.at("depth").get<size_t>();
        c.standard_depth = j.at("standard_depth").get<size_t>();
        c.standard_cz_count = j.value("standard_cz_count", size_t{0});
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("circuit JSON does not match the schema: ") + e.what(), 0);
    }
}

std::string emit_text(const Circuit &c) {
    std::string out;
    for (size_t k = 0; k < c.cz_layers.size(); k++) {
        if (k > 0) {
            out += "----\n";
        }
        std::string line;
        for (const Edge &e : c.cz_layers[k]) {
            if (!line.empty()) {
                line += " | ";
            }
            line += "CZ " + std::to_string(e.a) + " " + std::to_string(e.b);
        }
        out += line + "\n";
    }
    bool any = false;
    for (size_t q = 0; q < c.final_layer.size(); q++) {
        if (c.final_layer.gates[q].is_identity()) {
            continue;
        }
        if (!any && !c.cz_layers.empty()) {
            out += "----\n";
        }
        any = true;
        out += "R_" + std::to_string(q) + ": " + render_word(decompose(c.final_layer.gates[q])) + "\n";
    }
    return out;
}

}  // namespace gsf
