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

#ifndef GSF_INVARIANTS_H
#define GSF_INVARIANTS_H

#include <compare>
#include <cstdint>
#include <vector>

#include "gsf/graph.h"
#include "gsf/orbit.h"

namespace gsf {

/// Cut-rank histograms over vertex subsets of each size i in 2..floor(n/2).
/// For even n and i = n/2 each unordered bipartition is counted once.
struct RankIndexProfile {
    size_t n = 0;
    /// counts[i - 2][r] = number of subsets of size i with cut-rank r.
    std::vector<std::vector<std::uint64_t>> counts;

    /// (m_i, m_{i-1}, ..., m_1) for split size i.
    std::vector<std::uint64_t> index(size_t i) const;

    bool operator==(const RankIndexProfile &) const = default;
    std::strong_ordering operator<=>(const RankIndexProfile &other) const;
};

RankIndexProfile rank_indexes(const Graph &g);

struct SchmidtBounds {
    size_t lower = 0;
    size_t upper = 0;
    auto operator<=>(const SchmidtBounds &) const = default;
};

/// Lower bound: largest cut-rank over all bipartitions. Upper bound: least
/// minimum vertex cover over the orbit's members.
SchmidtBounds schmidt_bounds(const IsoOrbit &orbit);

/// Largest cut-rank over all bipartitions.
size_t max_cut_rank(const Graph &g);

/// Cut-rank of every vertex subset, indexed by its bitmask.
std::vector<std::uint8_t> cut_rank_distribution(const Graph &g);

/// Support-size distribution over the 2^n elements of the graph state's stabilizer group.
struct WeightEnumerator {
    std::vector<std::uint64_t> counts;
    auto operator<=>(const WeightEnumerator &) const = default;
};

WeightEnumerator weight_enumerator(const Graph &g);

size_t min_vertex_cover(const Graph &g);

}  // namespace gsf

#endif
