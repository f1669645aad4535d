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

#include "gsf/schedule.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "gsf/errors.h"

namespace gsf {

EdgeColoring::EdgeColoring(std::vector<std::vector<Edge>> classes) {
    for (auto &cls : classes) {
        if (cls.empty()) {
            continue;
        }
        for (auto &e : cls) {
            if (e.a > e.b) {
                std::swap(e.a, e.b);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    std::sort(classes_.begin(), classes_.end(), [](const auto &x, const auto &y) {
        if (x.size() != y.size()) {
            return x.size() > y.size();
        }
        return x.front() < y.front();
    });
}

EdgeColoring EdgeColoring::parse(const std::string &text) {
    std::vector<std::vector<Edge>> classes;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    auto read_int = [&]() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected vertex index in coloring", pos);
        }
        size_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<size_t>(text[pos++] - '0');
        }
        return v;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw ParseError("expected '(' starting a color class", pos);
        }
        pos++;
        std::vector<Edge> cls;
        while (true) {
            size_t a = read_int();
            skip_ws();
            if (pos >= text.size() || text[pos] != '-') {
                throw ParseError("expected '-'", pos);
            }
            pos++;
            size_t b = read_int();
            cls.push_back({a, b});
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                pos++;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                pos++;
                break;
            }
            throw ParseError("expected ',' or ')'", pos);
        }
        classes.push_back(std::move(cls));
        skip_ws();
    }
    return EdgeColoring(std::move(classes));
}

size_t EdgeColoring::num_edges() const {
    size_t total = 0;
    for (const auto &cls : classes_) {
        total += cls.size();
    }
    return total;
}

std::optional<size_t> EdgeColoring::color_of(Edge e) const {
    if (e.a > e.b) {
        std::swap(e.a, e.b);
    }
    for (size_t c = 0; c < classes_.size(); c++) {
        if (std::binary_search(classes_[c].begin(), classes_[c].end(), e)) {
            return c;
        }
    }
    return std::nullopt;
}

std::string EdgeColoring::str() const {
    std::string out;
    for (const auto &cls : classes_) {
        out.push_back('(');
        for (size_t i = 0; i < cls.size(); i++) {
            if (i) {
                out.push_back(',');
            }
            out += std::to_string(cls[i].a) + "-" + std::to_string(cls[i].b);
        }
        out.push_back(')');
    }
    return out;
}

bool is_proper_coloring(const Graph &g, const EdgeColoring &c) {
    size_t n = g.num_vertices();
    std::array<VertexSet, MAX_VERTICES> covered{};
    size_t count = 0;
    for (const auto &cls : c.classes()) {
        if (cls.empty()) {
            return false;
        }
        VertexSet touched = 0;
        for (const auto &e : cls) {
            if (e.a >= n || e.b >= n || e.a == e.b || !g.has_edge(e.a, e.b)) {
                return false;
            }
            if ((touched & vertex_bit(e.a)) || (touched & vertex_bit(e.b))) {
                return false;
            }
            if (covered[e.a] & vertex_bit(e.b)) {
                return false;
            }
            touched |= static_cast<VertexSet>(vertex_bit(e.a) | vertex_bit(e.b));
            covered[e.a] |= vertex_bit(e.b);
            count++;
        }
    }
    return count == g.num_edges();
}

namespace {

EdgeColoring from_assignment(const std::vector<Edge> &edges, const std::vector<int> &colors, size_t num_colors) {
    std::vector<std::vector<Edge>> classes(num_colors);
    for (size_t i = 0; i < edges.size(); i++) {
        classes[static_cast<size_t>(colors[i])].push_back(edges[i]);
    }
    return EdgeColoring(std::move(classes));
}

// Builds the coloring one color class at a time. With k colors left, the
// class is a matching that covers every vertex of remaining degree k, and it
// can be taken maximal since deleting more edges never hurts. Classes are
// interchangeable, so the class is the one holding the least remaining edge.
class MatchingSearch {
   public:
    MatchingSearch(size_t n, std::uint64_t budget) : n_(n), budget_(budget) {
    }

    // 1 found, 0 exhausted, -1 budget exceeded.
    int run(const Graph &g, size_t colors) {
        return solve(g, colors);
    }

    const std::vector<std::vector<Edge>> &classes() const {
        return classes_;
    }
    std::uint64_t nodes() const {
        return nodes_;
    }

   private:
    // Every color class is a matching, so a component on c vertices holds at
    // most k * floor(c / 2) edges.
    bool overfull(const Graph &g, size_t k) const {
        const auto &adj = g.rows();
        VertexSet seen = 0;
        for (size_t s = 0; s < n_; s++) {
            if (((seen >> s) & 1u) || !adj[s]) {
                continue;
            }
            VertexSet comp = vertex_bit(s);
            VertexSet frontier = comp;
            size_t degree_sum = 0;
            while (frontier) {
                size_t v = static_cast<size_t>(std::countr_zero(frontier));
                frontier &= static_cast<VertexSet>(frontier - 1);
                degree_sum += set_size(adj[v]);
                VertexSet fresh = adj[v] & static_cast<VertexSet>(~comp);
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            if (degree_sum / 2 > k * (set_size(comp) / 2)) {
                return true;
            }
        }
        return false;
    }

    int solve(const Graph &g, size_t k) {
        size_t first = n_;
        for (size_t v = 0; v < n_ && first == n_; v++) {
            if (g.neighbors(v)) {
                first = v;
            }
        }
        if (first == n_) {
            return 1;
        }
        if (k == 0 || g.max_degree() > k || overfull(g, k)) {
            return 0;
        }
        if (++nodes_ > budget_) {
            return -1;
        }
        GraphKey key = g.key();
        key.value ^= static_cast<uint128>(k) << 124;
        if (failed_.count(key)) {
            return 0;
        }
        VertexSet tight = 0;
        for (size_t v = 0; v < n_; v++) {
            if (g.degree(v) == k) {
                tight |= vertex_bit(v);
            }
        }
        size_t partner = static_cast<size_t>(std::countr_zero(g.neighbors(first)));
        std::vector<Edge> matching{{first, partner}};
        int r = extend(g, k, tight, vertex_bit(first) | vertex_bit(partner), 0, matching);
        if (r == 0) {
            failed_.insert(key);
        }
        return r;
    }

    // Vertices below v are decided; `covered` holds the matched ones.
    int extend(const Graph &g, size_t k, VertexSet tight, VertexSet covered, size_t v,
               std::vector<Edge> &matching) {
        while (v < n_ && ((covered >> v) & 1u)) {
            v++;
        }
        if (v == n_) {
            Graph rest = g;
            for (const auto &e : matching) {
                rest.remove_edge(e.a, e.b);
            }
            int r = solve(rest, k - 1);
            if (r == 1) {
                classes_.push_back(matching);
            }
            return r;
        }
        VertexSet free_now = static_cast<VertexSet>(~covered);
        VertexSet later = static_cast<VertexSet>(g.neighbors(v) & free_now & ~all_vertices(v + 1));
        while (later) {
            size_t w = static_cast<size_t>(std::countr_zero(later));
            later &= static_cast<VertexSet>(later - 1);
            matching.push_back({v, w});
            int r = extend(g, k, tight, covered | vertex_bit(v) | vertex_bit(w), v + 1, matching);
            if (r != 0) {
                return r;
            }
            matching.pop_back();
        }
        // Unmatched v keeps the matching maximal only if every earlier neighbor is covered.
        if (((tight >> v) & 1u) || (g.neighbors(v) & free_now & all_vertices(v))) {
            return 0;
        }
        return extend(g, k, tight, covered, v + 1, matching);
    }

    size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Edge>> classes_;
    std::unordered_set<GraphKey, GraphKeyHash> failed_;
};

// Plain backtracking over edges in lexicographic order. Colors are
// interchangeable, so an edge may open at most one new color index beyond
// those already used.
class DeltaSearch {
   public:
    DeltaSearch(std::vector<Edge> order, size_t colors)
        : order_(std::move(order)), m_(order_.size()), full_((1u << colors) - 1u), color_(m_, -1) {
    }

    // 1 found, 0 exhausted.
    int run() {
        return dfs(0, -1);
    }

    const std::vector<Edge> &order() const {
        return order_;
    }
    const std::vector<int> &colors() const {
        return color_;
    }
    std::uint64_t nodes() const {
        return nodes_;
    }

   private:
    int dfs(size_t index, int max_used) {
        if (index == m_) {
            return 1;
        }
        nodes_++;
        const Edge &e = order_[index];
        std::uint32_t open = max_used + 2 >= 32 ? full_ : ((1u << (max_used + 2)) - 1u);
        std::uint32_t avail = full_ & open & ~(used_[e.a] | used_[e.b]);
        while (avail) {
            int c = std::countr_zero(avail);
            avail &= avail - 1;
            std::uint32_t bit = 1u << c;
            used_[e.a] |= bit;
            used_[e.b] |= bit;
            color_[index] = c;
            if (dfs(index + 1, std::max(max_used, c)) == 1) {
                return 1;
            }
            used_[e.a] &= ~bit;
            used_[e.b] &= ~bit;
            color_[index] = -1;
        }
        return 0;
    }

    std::vector<Edge> order_;
    size_t m_;
    std::uint32_t full_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::array<std::uint32_t, MAX_VERTICES> used_{};
};

}  // namespace

DeltaSearchResult search_delta_coloring(const Graph &g, const ColoringOptions &options) {
    DeltaSearchResult out;
    std::vector<Edge> edges = g.edges();
    size_t delta = g.max_degree();
    if (edges.empty()) {
        out.coloring = EdgeColoring();
        return out;
    }
    MatchingSearch first(g.num_vertices(), options.node_budget);
    int r = first.run(g, delta);
    out.nodes = first.nodes();
    if (r == 1) {
        out.coloring = EdgeColoring(first.classes());
        return out;
    }
    if (r == 0) {
        return out;
    }
    out.used_fallback = true;
    DeltaSearch plain(edges, delta);
    r = plain.run();
    out.nodes += plain.nodes();
    if (r == 1) {
        out.coloring = from_assignment(plain.order(), plain.colors(), delta);
    }
    return out;
}

EdgeColoring misra_gries_coloring(const Graph &g) {
    size_t n = g.num_vertices();
    size_t palette = g.max_degree() + 1;
    std::array<std::array<int, MAX_VERTICES>, MAX_VERTICES> color;
    for (auto &row : color) {
        row.fill(-1);
    }
    auto is_free = [&](size_t v, int c) {
        for (size_t w = 0; w < n; w++) {
            if (color[v][w] == c) {
                return false;
            }
        }
        return true;
    };
    auto free_color = [&](size_t v) {
        for (size_t c = 0; c < palette; c++) {
            if (is_free(v, static_cast<int>(c))) {
                return static_cast<int>(c);
            }
        }
        throw InvariantViolation("Misra-Gries: no free color at a vertex");
    };
    auto set_color = [&](size_t a, size_t b, int c) {
        color[a][b] = c;
        color[b][a] = c;
    };

    for (const auto &edge : g.edges()) {
        size_t u = edge.a;
        size_t v = edge.b;
        // Maximal fan of u starting at v.
        std::vector<size_t> fan{v};
        VertexSet in_fan = vertex_bit(v);
        bool grew = true;
        while (grew) {
            grew = false;
            VertexSet nb = g.neighbors(u) & static_cast<VertexSet>(~in_fan);
            while (nb) {
                size_t w = static_cast<size_t>(std::countr_zero(nb));
                nb &= static_cast<VertexSet>(nb - 1);
                if (color[u][w] >= 0 && is_free(fan.back(), color[u][w])) {
                    fan.push_back(w);
                    in_fan |= vertex_bit(w);
                    grew = true;
                    break;
                }
            }
        }
        int c = free_color(u);
        int d = free_color(fan.back());
        // Invert the cd-path starting at u (its first edge has color d).
        if (c != d) {
            std::vector<std::pair<size_t, size_t>> walk;
            size_t cur = u;
            int want = d;
            VertexSet visited = vertex_bit(u);
            while (true) {
                size_t next = n;
                for (size_t w = 0; w < n; w++) {
                    if (color[cur][w] == want) {
                        next = w;
                        break;
                    }
                }
                if (next == n || (visited & vertex_bit(next))) {
                    break;
                }
                walk.push_back({cur, next});
                visited |= vertex_bit(next);
                cur = next;
                want = want == d ? c : d;
            }
            for (const auto &[a, b] : walk) {
                set_color(a, b, color[a][b] == d ? c : d);
            }
        }
        // First fan vertex on which d is free, keeping the prefix a fan.
        size_t stop = fan.size();
        for (size_t i = 0; i < fan.size(); i++) {
            if (i > 0 && (color[u][fan[i]] < 0 || !is_free(fan[i - 1], color[u][fan[i]]))) {
                break;
            }
            if (is_free(fan[i], d)) {
                stop = i;
                break;
            }
        }
        if (stop == fan.size()) {
            throw InvariantViolation("Misra-Gries: no fan vertex with the inverted color free");
        }
        for (size_t i = 0; i < stop; i++) {
            set_color(u, fan[i], color[u][fan[i + 1]]);
        }
        set_color(u, fan[stop], d);
    }

    std::vector<std::vector<Edge>> classes(palette);
    for (const auto &e : g.edges()) {
        classes[static_cast<size_t>(color[e.a][e.b])].push_back(e);
    }
    EdgeColoring out(std::move(classes));
    if (!is_proper_coloring(g, out) || out.num_colors() > palette) {
        throw InvariantViolation("Misra-Gries produced an improper coloring");
    }
    return out;
}

EdgeColoring edge_color_optimal(const Graph &g, const ColoringOptions &options) {
    DeltaSearchResult r = search_delta_coloring(g, options);
    EdgeColoring out = r.coloring ? *r.coloring : misra_gries_coloring(g);
    if (!is_proper_coloring(g, out)) {
        throw InvariantViolation("edge coloring is not proper");
    }
    if (!r.coloring && out.num_colors() != g.max_degree() + 1) {
        throw InvariantViolation("class-2 graph colored with the wrong number of colors");
    }
    return out;
}

size_t chromatic_index(const Graph &g, const ColoringOptions &options) {
    if (g.num_edges() == 0) {
        return 0;
    }
    return search_delta_coloring(g, options).coloring ? g.max_degree() : g.max_degree() + 1;
}

size_t standard_depth(const Graph &g) {
    return chromatic_index(g);
}

}  // namespace gsf
