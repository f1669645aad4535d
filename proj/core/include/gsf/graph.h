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

#ifndef GSF_GRAPH_H
#define GSF_GRAPH_H

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gsf {

constexpr size_t MAX_VERTICES = 16;

/// Set of vertices as a bitmask; bit v set means vertex v is a member.
using VertexSet = std::uint16_t;

inline constexpr VertexSet vertex_bit(size_t v) {
    return static_cast<VertexSet>(1u << v);
}

inline constexpr VertexSet all_vertices(size_t n) {
    return static_cast<VertexSet>((1u << n) - 1u);
}

inline constexpr size_t set_size(VertexSet s) {
    return static_cast<size_t>(std::popcount(s));
}

struct Edge {
    size_t a;
    size_t b;
    auto operator<=>(const Edge &) const = default;
};

__extension__ typedef unsigned __int128 uint128;

/// Packed adjacency of a graph: the vertex count in the top byte, then the
/// upper triangle in row-major order ((0,1),(0,2),...,(1,2),...) starting at
/// bit 119. Integer order on keys of equal `n` is lexicographic order on the
/// adjacency bit-string.
struct GraphKey {
    uint128 value = 0;

    auto operator<=>(const GraphKey &) const = default;
};

class VertexPermutation;

/// Simple undirected graph on at most 16 labeled vertices.
class Graph {
   public:
    Graph() : Graph(1) {
    }
    explicit Graph(size_t num_vertices);

    static Graph from_edges(size_t num_vertices, const std::vector<Edge> &edges);
    static Graph complete(size_t n);
    static Graph path(size_t n);
    static Graph cycle(size_t n);
    static Graph star(size_t n);
    static Graph from_key(GraphKey key);
    /// Inverse of `bitstring()`.
    static Graph from_bitstring(size_t n, const std::string &bits);

    size_t num_vertices() const {
        return n_;
    }
    size_t num_edges() const;
    size_t degree(size_t v) const {
        return set_size(adj_[v]);
    }
    size_t max_degree() const;
    VertexSet neighbors(size_t v) const {
        return adj_[v];
    }
    bool has_edge(size_t a, size_t b) const {
        return (adj_[a] >> b) & 1u;
    }

    void add_edge(size_t a, size_t b);
    void remove_edge(size_t a, size_t b);
    void toggle_edge(size_t a, size_t b);

    /// Edges with a < b in lexicographic order.
    std::vector<Edge> edges() const;

    /// The graph p(G): edge (p(i), p(j)) for every edge (i, j).
    Graph permuted(const VertexPermutation &p) const;
    /// Copy with one extra vertex, numbered n, adjacent to `neighbors`.
    Graph with_vertex(VertexSet neighbors) const;
    /// Subgraph induced on `vertices`, relabeled 0..k-1 in ascending order.
    Graph induced(VertexSet vertices) const;

    GraphKey key() const;
    /// Upper triangle in row-major order as '0'/'1'.
    std::string bitstring() const;
    /// "0-1,1-2" style listing.
    std::string str() const;

    bool operator==(const Graph &other) const;

    const std::array<VertexSet, MAX_VERTICES> &rows() const {
        return adj_;
    }

   private:
    void check_pair(size_t a, size_t b) const;

    size_t n_;
    std::array<VertexSet, MAX_VERTICES> adj_{};
};

/// Bijection on {0..n-1}.
class VertexPermutation {
   public:
    VertexPermutation() = default;
    static VertexPermutation identity(size_t n);
    /// `images[i]` is the image of vertex i. Throws ArgumentError unless bijective.
    static VertexPermutation from_images(const std::vector<size_t> &images);

    size_t size() const {
        return n_;
    }
    size_t operator()(size_t v) const {
        return map_[v];
    }
    VertexPermutation inverse() const;
    /// (this ∘ first)(v) = this(first(v)).
    VertexPermutation after(const VertexPermutation &first) const;
    bool is_identity() const;
    VertexSet apply(VertexSet s) const;

    bool operator==(const VertexPermutation &other) const;

   private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, MAX_VERTICES> map_{};
};

/// Toggles every edge between distinct neighbors of `a`.
Graph local_complement(const Graph &g, size_t a);
VertexSet neighborhood(const Graph &g, size_t a);
size_t max_degree(const Graph &g);
bool is_connected(const Graph &g);
bool is_bipartite(const Graph &g);
/// Vertex sets of the connected components, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph &g);

/// Parses "i-j,k-l,..." (0-based, whitespace ignored). The vertex count is
/// 1 + the largest index unless `num_vertices` is nonzero.
Graph parse_edge_list(const std::string &text, size_t num_vertices = 0);

struct GraphKeyHash {
    size_t operator()(const GraphKey &k) const {
        auto lo = static_cast<std::uint64_t>(k.value);
        auto hi = static_cast<std::uint64_t>(k.value >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 29;
        return static_cast<size_t>(h);
    }
};

}  // namespace gsf

#endif
