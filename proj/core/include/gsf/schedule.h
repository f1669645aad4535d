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

#ifndef GSF_SCHEDULE_H
#define GSF_SCHEDULE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsf/graph.h"

namespace gsf {

/// A partition of a graph's edges into color classes. Each class is a set of
/// CZ gates that can run in the same time step.
///
/// Classes are kept sorted by (size descending, least edge), and edges within
/// a class ascending, so equal colorings compare equal.
class EdgeColoring {
   public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<std::vector<Edge>> classes);

    /// Parses "(0-1,2-3)(1-2)".
    static EdgeColoring parse(const std::string &text);

    size_t num_colors() const {
        return classes_.size();
    }
    size_t num_edges() const;
    const std::vector<std::vector<Edge>> &classes() const {
        return classes_;
    }
    std::optional<size_t> color_of(Edge e) const;
    std::string str() const;

    bool operator==(const EdgeColoring &other) const = default;

   private:
    std::vector<std::vector<Edge>> classes_;
};

/// True iff `c` covers exactly the edges of `g` and no two edges in a class share a vertex.
bool is_proper_coloring(const Graph &g, const EdgeColoring &c);

struct ColoringOptions {
    /// Color-class search nodes allowed for the Δ-coloring attempt before
    /// restarting with the plain lexicographic search (which always completes).
    std::uint64_t node_budget = 100'000'000;
};

/// Result of trying to color with exactly Δ colors.
struct DeltaSearchResult {
    std::optional<EdgeColoring> coloring;
    std::uint64_t nodes = 0;
    bool used_fallback = false;
};

/// Exhaustive search for a proper Δ(G)-edge-coloring. An empty result proves class 2.
DeltaSearchResult search_delta_coloring(const Graph &g, const ColoringOptions &options = {});

/// Constructive proper coloring with at most Δ(G)+1 colors (Misra–Gries).
EdgeColoring misra_gries_coloring(const Graph &g);

/// Proper coloring with exactly χ′(G) colors.
EdgeColoring edge_color_optimal(const Graph &g, const ColoringOptions &options = {});

/// Exact chromatic index; 0 for edgeless graphs.
size_t chromatic_index(const Graph &g, const ColoringOptions &options = {});

/// Depth of the CZ-only preparation of |G⟩, i.e. χ′(G).
size_t standard_depth(const Graph &g);

}  // namespace gsf

#endif
