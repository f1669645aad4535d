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

#ifndef GSF_CANONICAL_H
#define GSF_CANONICAL_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "gsf/graph.h"

namespace gsf {

struct CanonicalForm {
    /// The canonical isomorph. Among all labelings reachable by the search it
    /// has the lexicographically least adjacency bit-string.
    Graph graph;
    /// Maps input vertices to canonical positions: input.permuted(labeling) == graph.
    VertexPermutation labeling;
    /// orbit[v] is the least vertex of v's automorphism orbit (input labels).
    std::array<std::uint8_t, MAX_VERTICES> orbit{};
    /// Number of automorphism generators discovered during the search.
    size_t num_generators = 0;
};

/// Canonical labeling by equitable partition refinement followed by a
/// search over individualizations, pruned with discovered automorphisms.
CanonicalForm canonical_form(const Graph &g);

/// Same as `canonical_form`, restricted to labelings that place vertices in
/// ascending color order. Two colored graphs with equal color-class sizes
/// get equal canonical graphs iff a color-preserving isomorphism exists.
CanonicalForm canonical_form(const Graph &g, std::span<const std::uint8_t> colors);

/// Permutation p with p(g) == h, if g and h are isomorphic.
std::optional<VertexPermutation> find_isomorphism(const Graph &g, const Graph &h);

}  // namespace gsf

#endif
