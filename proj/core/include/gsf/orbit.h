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

#ifndef GSF_ORBIT_H
#define GSF_ORBIT_H

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gsf/graph.h"
#include "gsf/schedule.h"

namespace gsf {

struct OrbitOptions {
    /// Maximum number of canonical members before enumeration aborts with ResourceError.
    size_t member_budget = 5'000'000;
    /// Keep the full member x vertex transition table (needed by `IsoOrbit::move`).
    bool record_moves = true;
};

/// One local-complementation step in canonical-form space:
/// witness(local_complement(member, vertex)) == members[target].
struct OrbitMove {
    std::uint32_t target = 0;
    VertexPermutation witness;
};

/// One step on the breadth-first path from the source to a member.
struct OrbitStep {
    size_t member;
    size_t vertex;
    VertexPermutation witness;
};

/// The local-complementation orbit of a graph, up to isomorphism.
///
/// Members are canonical forms in breadth-first discovery order from the
/// canonical form of the seed (member 0), trying vertices in ascending order.
class IsoOrbit {
   public:
    size_t size() const {
        return members_.size();
    }
    size_t num_vertices() const {
        return members_.front().num_vertices();
    }
    const std::vector<Graph> &members() const {
        return members_;
    }
    const Graph &member(size_t i) const {
        return members_[i];
    }
    const Graph &source() const {
        return members_.front();
    }
    bool has_moves() const {
        return !moves_.empty();
    }
    const OrbitMove &move(size_t member, size_t vertex) const;
    /// Index of a canonical graph, if it is a member.
    std::optional<size_t> find(const Graph &canonical) const;
    /// Steps leading from the source to `target` along the discovery tree.
    std::vector<OrbitStep> path_from_source(size_t target) const;
    /// Member with the lexicographically least adjacency bit-string.
    size_t least_member() const;

   private:
    friend IsoOrbit enumerate_orbit(const Graph &g, const OrbitOptions &options);

    struct Parent {
        std::uint32_t member;
        std::uint8_t vertex;
        VertexPermutation witness;
    };

    std::vector<Graph> members_;
    std::vector<Parent> parents_;
    std::vector<OrbitMove> moves_;
    std::unordered_map<GraphKey, std::uint32_t, GraphKeyHash> index_;
};

/// Breadth-first closure of canonical_form(g) under local complementation at every vertex.
IsoOrbit enumerate_orbit(const Graph &g, const OrbitOptions &options = {});

struct MemberProfile {
    size_t edges;
    size_t chromatic_index;
};

std::vector<MemberProfile> profile_members(const IsoOrbit &orbit);

/// An optimal representative under one filter order.
struct Optimum {
    size_t edges = 0;
    size_t chromatic_index = 0;
    /// Number of nonisomorphic members attaining (edges, chromatic_index).
    size_t count = 0;
    size_t member = 0;
    Graph representative;
    EdgeColoring coloring;
};

struct RepresentativeReport {
    /// Fewest edges, then least chromatic index among those.
    Optimum min_edges_first;
    /// Least chromatic index, then fewest edges; empty when both orders agree.
    std::optional<Optimum> min_chi_first;

    bool coincident() const {
        return !min_chi_first.has_value();
    }
    const Optimum &depth_optimum() const {
        return min_chi_first ? *min_chi_first : min_edges_first;
    }
};

RepresentativeReport optimal_representatives(const IsoOrbit &orbit);
RepresentativeReport optimal_representatives(const IsoOrbit &orbit, std::span<const MemberProfile> profiles);

enum class FilterOrder { MinEdgesFirst, MinChiFirst };

/// A labeled graph `start` and vertices such that applying local_complement
/// at each vertex in turn, beginning at `start`, yields the target exactly.
struct LcSequence {
    Graph start;
    std::vector<size_t> vertices;
};

/// Finds a labeled optimum for `order` and the LC moves that turn it into `g`.
LcSequence find_lc_sequence(const Graph &g, FilterOrder order, const OrbitOptions &options = {});
/// Same, reusing an orbit enumerated from `g` and its report.
LcSequence find_lc_sequence(const Graph &g, const IsoOrbit &orbit, const RepresentativeReport &report,
                            FilterOrder order);

/// Applies local_complement at each vertex of `vertices` in order.
Graph replay(const Graph &start, std::span<const size_t> vertices);

/// First bipartite member in member order.
std::optional<Graph> two_colorable_member(const IsoOrbit &orbit);

}  // namespace gsf

#endif
