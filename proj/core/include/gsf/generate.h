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

#ifndef GSF_GENERATE_H
#define GSF_GENERATE_H

#include <functional>
#include <vector>

#include "gsf/graph.h"

namespace gsf {

/// Largest vertex count the built-in generator accepts; bigger censuses are ingested from graph6 files.
constexpr size_t MAX_GENERATED_VERTICES = 10;

/// Visits one canonical representative of every isomorphism class of
/// connected graphs on `n` vertices, in a fixed order.
///
/// Graphs are grown one vertex at a time by canonical augmentation: a child
/// is kept only if its new vertex is, up to automorphism, the canonical
/// deletion vertex among its non-cut vertices. Throws CapabilityError for n
/// outside 1..MAX_GENERATED_VERTICES.
void for_each_connected_graph(size_t n, const std::function<void(const Graph &)> &visit);

std::vector<Graph> generate_connected_graphs(size_t n);

}  // namespace gsf

#endif
