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

#include "gsf/canonical.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "gsf/errors.h"
#include "oracles.h"

using namespace gsf;

namespace {

std::vector<Graph> all_labeled_graphs(size_t n) {
    size_t m = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint32_t s = 0; s < (1u << m); s++) {
        std::string bits;
        for (size_t k = 0; k < m; k++) {
            bits.push_back(((s >> k) & 1u) ? '1' : '0');
        }
        out.push_back(Graph::from_bitstring(n, bits));
    }
    return out;
}

}  // namespace

TEST(canonical, labeling_maps_input_to_form) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 500; t++) {
        size_t n = 1 + rng() % 16;
        Graph g = oracle::random_graph(n, 0.5, rng);
        CanonicalForm cf = canonical_form(g);
        EXPECT_EQ(g.permuted(cf.labeling), cf.graph);
        Graph h = g.permuted(oracle::random_permutation(n, rng));
        EXPECT_EQ(canonical_form(h).graph, cf.graph);
    }
}

TEST(canonical, separates_exactly_the_isomorphism_classes) {
    // Classes of labeled graphs by the brute-force oracle and by canonical_form must coincide.
    for (size_t n = 1; n <= 6; n++) {
        std::map<std::string, std::set<GraphKey>> by_oracle;
        std::set<GraphKey> forms;
        for (const Graph &g : all_labeled_graphs(n)) {
            GraphKey k = canonical_form(g).graph.key();
            by_oracle[oracle::brute_canonical_bits(g)].insert(k);
            forms.insert(k);
        }
        for (const auto &[bits, keys] : by_oracle) {
            EXPECT_EQ(keys.size(), 1u) << "n=" << n << " " << bits;
        }
        EXPECT_EQ(forms.size(), by_oracle.size()) << "n=" << n;
    }
    // 1, 2, 4, 11, 34, 156 unlabeled graphs.
}

TEST(canonical, automorphism_orbits_match_brute_force) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng() % 7;
        Graph g = oracle::random_graph(n, 0.5, rng);
        CanonicalForm cf = canonical_form(g);
        std::vector<size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<size_t> least(n);
        std::iota(least.begin(), least.end(), 0);
        do {
            VertexPermutation perm = VertexPermutation::from_images(p);
            if (g.permuted(perm) == g) {
                for (size_t v = 0; v < n; v++) {
                    least[p[v]] = std::min(least[p[v]], v);
                }
            }
        } while (std::next_permutation(p.begin(), p.end()));
        for (size_t v = 0; v < n; v++) {
            EXPECT_EQ(cf.orbit[v], least[v]) << g.str() << " vertex " << v;
        }
    }
}

TEST(canonical, symmetric_families) {
    for (size_t n = 2; n <= 16; n++) {
        CanonicalForm k = canonical_form(Graph::complete(n));
        EXPECT_EQ(k.graph, Graph::complete(n));
        for (size_t v = 0; v < n; v++) {
            EXPECT_EQ(k.orbit[v], 0);
        }
        CanonicalForm c = canonical_form(Graph::cycle(std::max<size_t>(n, 3)));
        EXPECT_EQ(c.graph.num_edges(), std::max<size_t>(n, 3));
    }
}

TEST(canonical, colored_forms) {
    Graph p3 = Graph::path(3);
    std::vector<std::uint8_t> end_colored{1, 0, 0};
    std::vector<std::uint8_t> other_end{0, 0, 1};
    std::vector<std::uint8_t> center{0, 1, 0};
    EXPECT_EQ(canonical_form(p3, end_colored).graph,
              canonical_form(p3.permuted(VertexPermutation::from_images({2, 1, 0})), other_end).graph);
    EXPECT_NE(canonical_form(p3, end_colored).graph.key(), canonical_form(p3, center).graph.key());
    EXPECT_THROW(canonical_form(p3, std::vector<std::uint8_t>{0}), ArgumentError);
}

TEST(canonical, find_isomorphism) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; t++) {
        size_t n = 2 + rng() % 12;
        Graph g = oracle::random_graph(n, 0.4, rng);
        Graph h = g.permuted(oracle::random_permutation(n, rng));
        auto p = find_isomorphism(g, h);
        ASSERT_TRUE(p.has_value());
        EXPECT_EQ(g.permuted(*p), h);
    }
    EXPECT_FALSE(find_isomorphism(Graph::path(4), Graph::star(4)).has_value());
}
