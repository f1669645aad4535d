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

#include "gsf/orbit.h"

#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <set>

#include "gsf/canonical.h"
#include "gsf/errors.h"
#include "gsf/generate.h"
#include "oracles.h"

using namespace gsf;

namespace {

// Orbit as a set of brute-force canonical bit-strings, by breadth-first search over labeled graphs.
std::set<std::string> labeled_orbit(const Graph &g) {
    std::set<std::string> labeled{g.bitstring()};
    std::deque<Graph> queue{g};
    while (!queue.empty()) {
        Graph h = queue.front();
        queue.pop_front();
        for (size_t a = 0; a < h.num_vertices(); a++) {
            Graph k = local_complement(h, a);
            if (labeled.insert(k.bitstring()).second) {
                queue.push_back(k);
            }
        }
    }
    std::set<std::string> classes;
    for (const auto &bits : labeled) {
        classes.insert(oracle::brute_canonical_bits(Graph::from_bitstring(g.num_vertices(), bits)));
    }
    return classes;
}

}  // namespace

TEST(orbit, small_orbits) {
    for (size_t n = 3; n <= 12; n++) {
        IsoOrbit o = enumerate_orbit(Graph::complete(n));
        EXPECT_EQ(o.size(), 2u);
        EXPECT_TRUE(o.find(canonical_form(Graph::star(n)).graph).has_value());
    }
    EXPECT_EQ(enumerate_orbit(Graph::path(4)).size(), 4u);
    EXPECT_EQ(enumerate_orbit(Graph(1)).size(), 1u);
    EXPECT_EQ(enumerate_orbit(Graph::path(2)).size(), 1u);
}

TEST(orbit, matches_labeled_breadth_first_search) {
    for (size_t n = 2; n <= 5; n++) {
        for (const Graph &g : generate_connected_graphs(n)) {
            IsoOrbit o = enumerate_orbit(g);
            std::set<std::string> got;
            for (const auto &m : o.members()) {
                got.insert(oracle::brute_canonical_bits(m));
            }
            EXPECT_EQ(got, labeled_orbit(g)) << g.str();
        }
    }
    std::mt19937_64 rng(13);
    for (int t = 0; t < 5; t++) {
        Graph g = oracle::random_connected_graph(6, rng);
        IsoOrbit o = enumerate_orbit(g);
        EXPECT_EQ(o.size(), labeled_orbit(g).size()) << g.str();
    }
}

TEST(orbit, move_table_is_consistent) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 20; t++) {
        Graph g = oracle::random_connected_graph(2 + rng() % 7, rng);
        IsoOrbit o = enumerate_orbit(g);
        ASSERT_TRUE(o.has_moves());
        EXPECT_EQ(o.source(), canonical_form(g).graph);
        for (size_t m = 0; m < o.size(); m++) {
            EXPECT_EQ(canonical_form(o.member(m)).graph, o.member(m));
            for (size_t v = 0; v < o.num_vertices(); v++) {
                const OrbitMove &mv = o.move(m, v);
                EXPECT_EQ(local_complement(o.member(m), v).permuted(mv.witness), o.member(mv.target));
            }
        }
        for (size_t m = 0; m < o.size(); m++) {
            Graph cur = o.source();
            for (const OrbitStep &s : o.path_from_source(m)) {
                EXPECT_EQ(cur, o.member(s.member));
                cur = local_complement(cur, s.vertex).permuted(s.witness);
            }
            EXPECT_EQ(cur, o.member(m));
        }
        size_t least = o.least_member();
        for (const auto &m : o.members()) {
            EXPECT_LE(o.member(least).bitstring(), m.bitstring());
        }
    }
}

TEST(orbit, member_budget) {
    OrbitOptions tight{.member_budget = 3};
    EXPECT_THROW(enumerate_orbit(Graph::path(8), tight), ResourceError);
    EXPECT_NO_THROW(enumerate_orbit(Graph::complete(8), tight));
}

TEST(orbit, linear_cluster_of_eight) {
    IsoOrbit o = enumerate_orbit(Graph::path(8));
    RepresentativeReport r = optimal_representatives(o);
    EXPECT_TRUE(r.coincident());
    EXPECT_EQ(r.min_edges_first.edges, 7u);
    EXPECT_EQ(r.min_edges_first.chromatic_index, 2u);
    EXPECT_EQ(r.min_edges_first.count, 1u);
    EXPECT_EQ(r.min_edges_first.representative, canonical_form(Graph::path(8)).graph);
    EXPECT_TRUE(is_proper_coloring(r.min_edges_first.representative, r.min_edges_first.coloring));
    // Some member has 13 edges and one vertex adjacent to all others.
    bool found = false;
    for (const auto &m : o.members()) {
        found |= m.num_edges() == 13 && m.max_degree() == 7;
    }
    EXPECT_TRUE(found);
}

TEST(orbit, representatives_agree_with_member_scan) {
    std::mt19937_64 rng(15);
    // The matching-cover oracle is exponential in |E|, so stay at n <= 6.
    for (int t = 0; t < 30; t++) {
        Graph g = oracle::random_connected_graph(3 + rng() % 4, rng);
        IsoOrbit o = enumerate_orbit(g);
        RepresentativeReport r = optimal_representatives(o);
        size_t min_e = SIZE_MAX, chi_at_min_e = SIZE_MAX, min_chi = SIZE_MAX, e_at_min_chi = SIZE_MAX;
        for (const auto &m : o.members()) {
            size_t e = m.num_edges(), c = oracle::brute_chromatic_index(m);
            if (e < min_e || (e == min_e && c < chi_at_min_e)) {
                min_e = e;
                chi_at_min_e = c;
            }
            if (c < min_chi || (c == min_chi && e < e_at_min_chi)) {
                min_chi = c;
                e_at_min_chi = e;
            }
        }
        EXPECT_EQ(r.min_edges_first.edges, min_e);
        EXPECT_EQ(r.min_edges_first.chromatic_index, chi_at_min_e);
        const Optimum &d = r.depth_optimum();
        EXPECT_EQ(d.chromatic_index, min_chi);
        EXPECT_EQ(d.edges, e_at_min_chi);
        EXPECT_EQ(r.coincident(), min_e == e_at_min_chi && chi_at_min_e == min_chi);
    }
}

TEST(orbit, lc_sequences_replay_exactly) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 200; t++) {
        Graph g = oracle::random_connected_graph(2 + rng() % 8, rng);
        for (FilterOrder order : {FilterOrder::MinEdgesFirst, FilterOrder::MinChiFirst}) {
            LcSequence s = find_lc_sequence(g, order);
            EXPECT_EQ(replay(s.start, s.vertices), g);
            IsoOrbit o = enumerate_orbit(g);
            RepresentativeReport r = optimal_representatives(o);
            const Optimum &target = order == FilterOrder::MinEdgesFirst ? r.min_edges_first : r.depth_optimum();
            EXPECT_EQ(canonical_form(s.start).graph, target.representative);
            if (s.vertices.empty()) {
                EXPECT_EQ(s.start, g);
            }
        }
    }
}

TEST(orbit, sequence_requires_matching_orbit) {
    IsoOrbit o = enumerate_orbit(Graph::complete(4));
    RepresentativeReport r = optimal_representatives(o);
    EXPECT_THROW(find_lc_sequence(Graph::path(4), o, r, FilterOrder::MinEdgesFirst), ArgumentError);
}

TEST(orbit, two_colorable_member) {
    // A 2-coloring exists iff some vertex subset has no edge inside it or its complement.
    auto brute_bipartite = [](const Graph &g) {
        size_t n = g.num_vertices();
        for (std::uint32_t s = 0; s < (1u << n); s++) {
            bool ok = true;
            for (const Edge &e : g.edges()) {
                ok &= ((s >> e.a) & 1u) != ((s >> e.b) & 1u);
            }
            if (ok) {
                return true;
            }
        }
        return false;
    };
    for (size_t n = 2; n <= 6; n++) {
        for (const Graph &g : generate_connected_graphs(n)) {
            IsoOrbit o = enumerate_orbit(g);
            bool any = false;
            for (const auto &m : o.members()) {
                any |= brute_bipartite(m);
            }
            auto m = two_colorable_member(o);
            EXPECT_EQ(m.has_value(), any) << g.str();
            if (m) {
                EXPECT_TRUE(brute_bipartite(*m));
            }
        }
    }
}
