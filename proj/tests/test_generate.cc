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

#include <gtest/gtest.h>

#include <set>

#include "gsf/canonical.h"
#include "gsf/errors.h"
#include "oracles.h"

using namespace gsf;

TEST(generate, connected_census_counts) {
    // Connected unlabeled graphs on n vertices.
    const std::vector<size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
    for (size_t n = 1; n <= expected.size(); n++) {
        EXPECT_EQ(generate_connected_graphs(n).size(), expected[n - 1]) << "n=" << n;
    }
}

TEST(generate, outputs_are_distinct_connected_canonical_forms) {
    for (size_t n = 1; n <= 7; n++) {
        std::set<GraphKey> seen;
        for (const Graph &g : generate_connected_graphs(n)) {
            EXPECT_TRUE(is_connected(g));
            EXPECT_EQ(canonical_form(g).graph, g);
            EXPECT_TRUE(seen.insert(g.key()).second);
        }
    }
}

TEST(generate, matches_brute_force_enumeration) {
    // Every connected labeled graph on 5 vertices lands in the generated set.
    std::set<std::string> generated;
    for (const Graph &g : generate_connected_graphs(5)) {
        generated.insert(oracle::brute_canonical_bits(g));
    }
    std::set<std::string> all;
    for (std::uint32_t s = 0; s < (1u << 10); s++) {
        std::string bits;
        for (size_t k = 0; k < 10; k++) {
            bits.push_back(((s >> k) & 1u) ? '1' : '0');
        }
        Graph g = Graph::from_bitstring(5, bits);
        if (is_connected(g)) {
            all.insert(oracle::brute_canonical_bits(g));
        }
    }
    EXPECT_EQ(generated, all);
}

TEST(generate, refuses_sizes_outside_range) {
    EXPECT_THROW(generate_connected_graphs(0), CapabilityError);
    EXPECT_THROW(generate_connected_graphs(11), CapabilityError);
}
