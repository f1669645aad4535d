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

#include "gsf/invariants.h"

#include <algorithm>
#include <limits>

#include "gsf/errors.h"
#include "gsf/gf2.h"

namespace gsf {

std::vector<std::uint64_t> RankIndexProfile::index(size_t i) const {
    const auto &row = counts.at(i - 2);
    std::vector<std::uint64_t> out;
    for (size_t r = i; r >= 1; r--) {
        out.push_back(row[r]);
    }
    return out;
}

std::strong_ordering RankIndexProfile::operator<=>(const RankIndexProfile &other) const {
    if (auto c = n <=> other.n; c != 0) {
        return c;
    }
    for (size_t k = 0; k < std::min(counts.size(), other.counts.size()); k++) {
        size_t i = k + 2;
        auto mine = index(i);
        auto theirs = other.index(i);
        if (auto c = mine <=> theirs; c != 0) {
            return c;
        }
    }
    return counts.size() <=> other.counts.size();
}

RankIndexProfile rank_indexes(const Graph &g) {
    size_t n = g.num_vertices();
    RankIndexProfile out;
    out.n = n;
    for (size_t i = 2; i <= n / 2; i++) {
        out.counts.emplace_back(i + 1, 0);
    }
    if (out.counts.empty()) {
        return out;
    }
    for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
        size_t size = static_cast<size_t>(std::popcount(mask));
        if (size < 2 || size > n / 2) {
            continue;
        }
        if (2 * size == n && !(mask & 1u)) {
            continue;
        }
        out.counts[size - 2][cut_rank(g, static_cast<VertexSet>(mask))]++;
    }
    return out;
}

size_t max_cut_rank(const Graph &g) {
    size_t n = g.num_vertices();
    size_t best = 0;
    // Subsets containing vertex 0 cover every bipartition once.
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
        best = std::max(best, cut_rank(g, static_cast<VertexSet>(mask)));
    }
    return best;
}

std::vector<std::uint8_t> cut_rank_distribution(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<std::uint8_t> out(size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
        out[mask] = static_cast<std::uint8_t>(cut_rank(g, static_cast<VertexSet>(mask)));
    }
    return out;
}

WeightEnumerator weight_enumerator(const Graph &g) {
    size_t n = g.num_vertices();
    WeightEnumerator w;
    w.counts.assign(n + 1, 0);
    w.counts[0] = 1;
    // Gray-code walk over products of K_a = X_a Z_N(a).
    VertexSet xs = 0;
    VertexSet zs = 0;
    for (std::uint32_t k = 1; k < (1u << n); k++) {
        size_t a = static_cast<size_t>(std::countr_zero(k));
        xs ^= vertex_bit(a);
        zs ^= g.neighbors(a);
        w.counts[set_size(static_cast<VertexSet>(xs | zs))]++;
    }
    return w;
}

namespace {

void cover_search(const Graph &g, VertexSet remaining, size_t taken, size_t &best) {
    if (taken >= best) {
        return;
    }
    size_t pick = MAX_VERTICES;
    size_t pick_degree = 0;
    size_t edges = 0;
    VertexSet rest = remaining;
    while (rest) {
        size_t v = static_cast<size_t>(std::countr_zero(rest));
        rest &= static_cast<VertexSet>(rest - 1);
        size_t d = set_size(g.neighbors(v) & remaining);
        edges += d;
        if (d > pick_degree) {
            pick_degree = d;
            pick = v;
        }
    }
    if (pick_degree == 0) {
        best = taken;
        return;
    }
    edges /= 2;
    // Each further cover vertex removes at most pick_degree edges.
    if (taken + (edges + pick_degree - 1) / pick_degree >= best) {
        return;
    }
    VertexSet nb = g.neighbors(pick) & remaining;
    cover_search(g, remaining & static_cast<VertexSet>(~vertex_bit(pick)), taken + 1, best);
    // With max degree 1 both branches are symmetric.
    if (pick_degree > 1) {
        cover_search(g, remaining & static_cast<VertexSet>(~(nb | vertex_bit(pick))), taken + set_size(nb), best);
    }
}

}  // namespace

size_t min_vertex_cover(const Graph &g) {
    size_t best = g.num_vertices();
    cover_search(g, all_vertices(g.num_vertices()), 0, best);
    return best;
}

SchmidtBounds schmidt_bounds(const IsoOrbit &orbit) {
    SchmidtBounds out;
    out.lower = max_cut_rank(orbit.source());
    out.upper = std::numeric_limits<size_t>::max();
    for (const auto &m : orbit.members()) {
        out.upper = std::min(out.upper, min_vertex_cover(m));
    }
    if (out.lower > out.upper) {
        throw InvariantViolation("Schmidt bracket inverted: max cut-rank exceeds a vertex cover");
    }
    return out;
}

}  // namespace gsf
