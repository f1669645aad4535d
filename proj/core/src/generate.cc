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

#include "gsf/generate.h"

#include <unordered_set>

#include "gsf/canonical.h"
#include "gsf/errors.h"

namespace gsf {

namespace {

bool is_cut_vertex(const Graph &g, size_t u) {
    size_t n = g.num_vertices();
    VertexSet allowed = all_vertices(n) & static_cast<VertexSet>(~vertex_bit(u));
    if (allowed == 0) {
        return false;
    }
    VertexSet seen = allowed & static_cast<VertexSet>(-allowed);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            size_t v = static_cast<size_t>(std::countr_zero(frontier));
            frontier &= static_cast<VertexSet>(frontier - 1);
            next |= g.neighbors(v);
        }
        next &= allowed & static_cast<VertexSet>(~seen);
        seen |= next;
        frontier = next;
    }
    return seen != allowed;
}

// Cheap isomorphism invariant used to pick the deletion vertex before any
// canonical labeling is needed.
unsigned deletion_invariant(const Graph &g, size_t v) {
    unsigned total = 0;
    VertexSet nb = g.neighbors(v);
    while (nb) {
        size_t w = static_cast<size_t>(std::countr_zero(nb));
        nb &= static_cast<VertexSet>(nb - 1);
        total += static_cast<unsigned>(g.degree(w));
    }
    return static_cast<unsigned>(g.degree(v)) * 256u + total;
}

void extend(const Graph &parent, const std::function<void(const Graph &)> &visit,
            std::unordered_set<GraphKey, GraphKeyHash> &seen) {
    size_t m = parent.num_vertices();
    size_t v = m;
    seen.clear();
    for (std::uint32_t subset = 1; subset < (1u << m); subset++) {
        Graph child = parent.with_vertex(static_cast<VertexSet>(subset));
        unsigned mine = deletion_invariant(child, v);
        VertexSet ties = vertex_bit(v);
        bool rejected = false;
        for (size_t u = 0; u < m && !rejected; u++) {
            unsigned other = deletion_invariant(child, u);
            if (other < mine) {
                continue;
            }
            if (is_cut_vertex(child, u)) {
                continue;
            }
            if (other > mine) {
                rejected = true;
            } else {
                ties |= vertex_bit(u);
            }
        }
        if (rejected) {
            continue;
        }
        CanonicalForm cf = canonical_form(child);
        if (ties != vertex_bit(v)) {
            size_t chosen = v;
            size_t best_pos = MAX_VERTICES;
            VertexSet rest = ties;
            while (rest) {
                size_t u = static_cast<size_t>(std::countr_zero(rest));
                rest &= static_cast<VertexSet>(rest - 1);
                if (cf.labeling(u) < best_pos) {
                    best_pos = cf.labeling(u);
                    chosen = u;
                }
            }
            if (cf.orbit[chosen] != cf.orbit[v]) {
                continue;
            }
        }
        if (seen.insert(cf.graph.key()).second) {
            visit(cf.graph);
        }
    }
}

}  // namespace

void for_each_connected_graph(size_t n, const std::function<void(const Graph &)> &visit) {
    if (n < 1 || n > MAX_GENERATED_VERTICES) {
        throw CapabilityError("the built-in generator supports 1.." + std::to_string(MAX_GENERATED_VERTICES) +
                              " vertices; ingest a graph6 census file for n=" + std::to_string(n));
    }
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    std::vector<Graph> level{Graph(1)};
    std::unordered_set<GraphKey, GraphKeyHash> seen;
    for (size_t size = 2; size < n; size++) {
        std::vector<Graph> next;
        for (const auto &parent : level) {
            extend(parent, [&](const Graph &g) { next.push_back(g); }, seen);
        }
        level = std::move(next);
    }
    for (const auto &parent : level) {
        extend(parent, visit, seen);
    }
}

std::vector<Graph> generate_connected_graphs(size_t n) {
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph &g) { out.push_back(g); });
    return out;
}

}  // namespace gsf
