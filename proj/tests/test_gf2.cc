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

#include "gsf/gf2.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gsf/errors.h"
#include "oracles.h"

using namespace gsf;

namespace {

BitMatrix random_matrix(size_t r, size_t c, std::mt19937_64 &rng) {
    BitMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            m.set(i, j, rng() & 1u);
        }
    }
    return m;
}

// Rank by counting the distinct row combinations: |row space| = 2^rank.
size_t span_rank(const BitMatrix &m) {
    std::set<std::uint64_t> space{0};
    for (size_t r = 0; r < m.rows(); r++) {
        std::set<std::uint64_t> next = space;
        for (auto v : space) {
            next.insert(v ^ m.row(r));
        }
        space = next;
    }
    size_t k = 0;
    while ((size_t{1} << k) < space.size()) {
        k++;
    }
    return k;
}

}  // namespace

TEST(gf2, small_ranks) {
    EXPECT_EQ(rank(BitMatrix::identity(5)), 5u);
    EXPECT_EQ(rank(BitMatrix(3, 4)), 0u);
    EXPECT_EQ(rank_of_rows({0b011, 0b110, 0b101}), 2u);
    EXPECT_THROW(BitMatrix(1, 65), ArgumentError);
}

TEST(gf2, rank_matches_span_size) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; t++) {
        BitMatrix m = random_matrix(1 + rng() % 10, 1 + rng() % 12, rng);
        EXPECT_EQ(rank(m), span_rank(m));
        EXPECT_EQ(rank(m), rank(m.transposed()));
    }
}

TEST(gf2, rref_with_transform) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; t++) {
        BitMatrix m = random_matrix(6, 6, rng);
        RrefResult r = rref_with_transform(m);
        EXPECT_EQ(r.transform * m, r.reduced);
        EXPECT_TRUE(r.reduced.is_rref());
        EXPECT_EQ(rank(r.transform), 6u);
        EXPECT_EQ(rank(r.reduced), rank(m));
    }
}

TEST(gf2, cut_rank_matches_explicit_block) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; t++) {
        size_t n = 2 + rng() % 12;
        Graph g = oracle::random_graph(n, 0.5, rng);
        auto side = static_cast<VertexSet>(rng() & all_vertices(n));
        EXPECT_EQ(cut_rank(g, side), oracle::brute_cut_rank(g, side));
        EXPECT_EQ(cut_rank(g, side), cut_rank(g, static_cast<VertexSet>(all_vertices(n) & ~side)));
    }
}
