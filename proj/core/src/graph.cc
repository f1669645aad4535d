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

#include "gsf/graph.h"

#include <algorithm>
#include <cctype>

#include "gsf/errors.h"

namespace gsf {

Graph::Graph(size_t num_vertices) : n_(num_vertices) {
    if (num_vertices < 1 || num_vertices > MAX_VERTICES) {
        throw ArgumentError("graph vertex count must be in 1.." + std::to_string(MAX_VERTICES) + ", got " +
                            std::to_string(num_vertices));
    }
}

Graph Graph::from_edges(size_t num_vertices, const std::vector<Edge> &edges) {
    Graph g(num_vertices);
    for (const auto &e : edges) {
        g.add_edge(e.a, e.b);
    }
    return g;
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t v = 0; v < n; v++) {
        g.adj_[v] = all_vertices(n) & static_cast<VertexSet>(~vertex_bit(v));
    }
    return g;
}

Graph Graph::path(size_t n) {
    Graph g(n);
    for (size_t v = 0; v + 1 < n; v++) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph Graph::cycle(size_t n) {
    if (n < 3) {
        throw ArgumentError("cycle needs at least 3 vertices");
    }
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph Graph::star(size_t n) {
    Graph g(n);
    for (size_t v = 1; v < n; v++) {
        g.add_edge(0, v);
    }
    return g;
}

Graph Graph::from_key(GraphKey key) {
    size_t n = static_cast<size_t>(key.value >> 120);
    Graph g(n);
    int bit = 119;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++, bit--) {
            if ((key.value >> bit) & 1u) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph Graph::from_bitstring(size_t n, const std::string &bits) {
    Graph g(n);
    if (bits.size() != n * (n - 1) / 2) {
        throw ParseError("adjacency bit-string has wrong length for n=" + std::to_string(n), bits.size());
    }
    size_t k = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++, k++) {
            if (bits[k] == '1') {
                g.add_edge(i, j);
            } else if (bits[k] != '0') {
                throw ParseError("adjacency bit-string must contain only 0 and 1", k);
            }
        }
    }
    return g;
}

size_t Graph::num_edges() const {
    size_t total = 0;
    for (size_t v = 0; v < n_; v++) {
        total += set_size(adj_[v]);
    }
    return total / 2;
}

size_t Graph::max_degree() const {
    size_t best = 0;
    for (size_t v = 0; v < n_; v++) {
        best = std::max(best, degree(v));
    }
    return best;
}

void Graph::check_pair(size_t a, size_t b) const {
    if (a >= n_ || b >= n_) {
        throw ArgumentError("vertex out of range: " + std::to_string(std::max(a, b)) + " >= " + std::to_string(n_));
    }
    if (a == b) {
        throw ArgumentError("self-loop at vertex " + std::to_string(a));
    }
}

void Graph::add_edge(size_t a, size_t b) {
    check_pair(a, b);
    adj_[a] |= vertex_bit(b);
    adj_[b] |= vertex_bit(a);
}

void Graph::remove_edge(size_t a, size_t b) {
    check_pair(a, b);
    adj_[a] &= static_cast<VertexSet>(~vertex_bit(b));
    adj_[b] &= static_cast<VertexSet>(~vertex_bit(a));
}

void Graph::toggle_edge(size_t a, size_t b) {
    check_pair(a, b);
    adj_[a] ^= vertex_bit(b);
    adj_[b] ^= vertex_bit(a);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (size_t i = 0; i < n_; i++) {
        VertexSet upper = adj_[i] & static_cast<VertexSet>(~(vertex_bit(i + 1) - 1u));
        while (upper) {
            size_t j = static_cast<size_t>(std::countr_zero(upper));
            upper &= static_cast<VertexSet>(upper - 1);
            out.push_back({i, j});
        }
    }
    return out;
}

Graph Graph::permuted(const VertexPermutation &p) const {
    if (p.size() != n_) {
        throw ArgumentError("permutation size does not match graph");
    }
    Graph out(n_);
    for (size_t v = 0; v < n_; v++) {
        out.adj_[p(v)] = p.apply(adj_[v]);
    }
    return out;
}

Graph Graph::with_vertex(VertexSet neighbors) const {
    if (neighbors & static_cast<VertexSet>(~all_vertices(n_))) {
        throw ArgumentError("new vertex neighbors out of range");
    }
    Graph out(n_ + 1);
    out.adj_ = adj_;
    out.adj_[n_] = neighbors;
    for (size_t v = 0; v < n_; v++) {
        if ((neighbors >> v) & 1u) {
            out.adj_[v] |= vertex_bit(n_);
        }
    }
    return out;
}

Graph Graph::induced(VertexSet vertices) const {
    std::array<size_t, MAX_VERTICES> relabel{};
    size_t k = 0;
    for (size_t v = 0; v < n_; v++) {
        if ((vertices >> v) & 1u) {
            relabel[v] = k++;
        }
    }
    Graph out(k);
    for (const auto &e : edges()) {
        if (((vertices >> e.a) & 1u) && ((vertices >> e.b) & 1u)) {
            out.add_edge(relabel[e.a], relabel[e.b]);
        }
    }
    return out;
}

GraphKey Graph::key() const {
    uint128 v = static_cast<uint128>(n_) << 120;
    int top = 120;
    for (size_t i = 0; i < n_; i++) {
        size_t width = n_ - 1 - i;
        if (width == 0) {
            break;
        }
        // Row i's upper part, with vertex i+1 as the most significant bit.
        std::uint32_t upper = static_cast<std::uint32_t>(adj_[i] >> (i + 1));
        std::uint32_t reversed = 0;
        for (size_t b = 0; b < width; b++) {
            reversed |= ((upper >> b) & 1u) << (width - 1 - b);
        }
        top -= static_cast<int>(width);
        v |= static_cast<uint128>(reversed) << top;
    }
    return GraphKey{v};
}

std::string Graph::bitstring() const {
    std::string out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            out.push_back(has_edge(i, j) ? '1' : '0');
        }
    }
    return out;
}

std::string Graph::str() const {
    std::string out;
    for (const auto &e : edges()) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out += std::to_string(e.a) + "-" + std::to_string(e.b);
    }
    return out;
}

bool Graph::operator==(const Graph &other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (size_t v = 0; v < n_; v++) {
        if (adj_[v] != other.adj_[v]) {
            return false;
        }
    }
    return true;
}

VertexPermutation VertexPermutation::identity(size_t n) {
    VertexPermutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (size_t v = 0; v < n; v++) {
        p.map_[v] = static_cast<std::uint8_t>(v);
    }
    return p;
}

VertexPermutation VertexPermutation::from_images(const std::vector<size_t> &images) {
    if (images.size() > MAX_VERTICES) {
        throw ArgumentError("permutation too large");
    }
    VertexPermutation p;
    p.n_ = static_cast<std::uint8_t>(images.size());
    std::uint32_t seen = 0;
    for (size_t v = 0; v < images.size(); v++) {
        if (images[v] >= images.size() || ((seen >> images[v]) & 1u)) {
            throw ArgumentError("not a permutation");
        }
        seen |= 1u << images[v];
        p.map_[v] = static_cast<std::uint8_t>(images[v]);
    }
    return p;
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation p;
    p.n_ = n_;
    for (size_t v = 0; v < n_; v++) {
        p.map_[map_[v]] = static_cast<std::uint8_t>(v);
    }
    return p;
}

VertexPermutation VertexPermutation::after(const VertexPermutation &first) const {
    if (first.n_ != n_) {
        throw ArgumentError("permutation sizes differ");
    }
    VertexPermutation p;
    p.n_ = n_;
    for (size_t v = 0; v < n_; v++) {
        p.map_[v] = map_[first.map_[v]];
    }
    return p;
}

bool VertexPermutation::is_identity() const {
    for (size_t v = 0; v < n_; v++) {
        if (map_[v] != v) {
            return false;
        }
    }
    return true;
}

VertexSet VertexPermutation::apply(VertexSet s) const {
    VertexSet out = 0;
    while (s) {
        size_t v = static_cast<size_t>(std::countr_zero(s));
        s &= static_cast<VertexSet>(s - 1);
        out |= vertex_bit(map_[v]);
    }
    return out;
}

bool VertexPermutation::operator==(const VertexPermutation &other) const {
    return n_ == other.n_ && std::equal(map_.begin(), map_.begin() + n_, other.map_.begin());
}

Graph local_complement(const Graph &g, size_t a) {
    if (a >= g.num_vertices()) {
        throw ArgumentError("local complement vertex out of range: " + std::to_string(a));
    }
    VertexSet nbrs = g.neighbors(a);
    Graph out = g;
    VertexSet rest = nbrs;
    while (rest) {
        size_t i = static_cast<size_t>(std::countr_zero(rest));
        rest &= static_cast<VertexSet>(rest - 1);
        VertexSet others = rest;
        while (others) {
            size_t j = static_cast<size_t>(std::countr_zero(others));
            others &= static_cast<VertexSet>(others - 1);
            out.toggle_edge(i, j);
        }
    }
    return out;
}

VertexSet neighborhood(const Graph &g, size_t a) {
    if (a >= g.num_vertices()) {
        throw ArgumentError("vertex out of range: " + std::to_string(a));
    }
    return g.neighbors(a);
}

size_t max_degree(const Graph &g) {
    return g.max_degree();
}

static VertexSet reach(const Graph &g, size_t start, VertexSet allowed) {
    VertexSet seen = vertex_bit(start);
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
    return seen;
}

bool is_connected(const Graph &g) {
    VertexSet all = all_vertices(g.num_vertices());
    return reach(g, 0, all) == all;
}

std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<VertexSet> out;
    VertexSet remaining = all_vertices(g.num_vertices());
    while (remaining) {
        size_t v = static_cast<size_t>(std::countr_zero(remaining));
        VertexSet comp = reach(g, v, remaining);
        out.push_back(comp);
        remaining &= static_cast<VertexSet>(~comp);
    }
    return out;
}

bool is_bipartite(const Graph &g) {
    size_t n = g.num_vertices();
    std::array<int, MAX_VERTICES> side{};
    side.fill(-1);
    for (size_t s = 0; s < n; s++) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::vector<size_t> stack{s};
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbors(v);
            while (nb) {
                size_t w = static_cast<size_t>(std::countr_zero(nb));
                nb &= static_cast<VertexSet>(nb - 1);
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph parse_edge_list(const std::string &text, size_t num_vertices) {
    std::vector<Edge> edges;
    size_t max_index = 0;
    bool any = false;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    auto read_int = [&]() -> size_t {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected vertex index", pos);
        }
        size_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<size_t>(text[pos] - '0');
            if (value >= 1000) {
                throw ParseError("vertex index too large", pos);
            }
            pos++;
        }
        return value;
    };
    skip_ws();
    while (pos < text.size()) {
        size_t start = pos;
        size_t a = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != '-') {
            throw ParseError("expected '-' between edge endpoints", pos);
        }
        pos++;
        size_t b = read_int();
        if (a == b) {
            throw ParseError("self-loop in edge list", start);
        }
        edges.push_back({std::min(a, b), std::max(a, b)});
        max_index = std::max({max_index, a, b});
        any = true;
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',') {
                throw ParseError("expected ',' between edges", pos);
            }
            pos++;
            skip_ws();
            if (pos >= text.size()) {
                throw ParseError("trailing ',' in edge list", pos);
            }
        }
    }
    size_t n = num_vertices != 0 ? num_vertices : (any ? max_index + 1 : 1);
    if (any && max_index >= n) {
        throw ArgumentError("edge list mentions vertex " + std::to_string(max_index) + " but n=" + std::to_string(n));
    }
    return Graph::from_edges(n, edges);
}

}  // namespace gsf
