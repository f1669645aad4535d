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

#include <algorithm>
#include <vector>

#include "gsf/errors.h"

namespace gsf {

namespace {

using Perm = std::array<std::uint8_t, MAX_VERTICES>;

// Ordered partition of the vertex positions 0..n-1 into cells. A cell is
// identified by its first position; every decision below depends only on
// positions and neighbor counts, so refinement commutes with relabeling.
struct Partition {
    Perm lab{};
    std::array<std::uint8_t, MAX_VERTICES> end{};
    std::array<VertexSet, MAX_VERTICES> cell_mask{};
    std::uint32_t starts = 0;
    size_t num_cells = 0;
};

void refine(const Graph &g, size_t n, Partition &p, std::uint32_t pending) {
    const auto &adj = g.rows();
    std::array<std::uint8_t, MAX_VERTICES> count{};
    while (pending && p.num_cells < n) {
        size_t s = static_cast<size_t>(std::countr_zero(pending));
        pending &= pending - 1;
        VertexSet splitter = p.cell_mask[s];

        size_t next;
        for (size_t c = 0; c < n; c = next) {
            next = p.end[c];
            size_t size = next - c;
            if (size == 1) {
                continue;
            }
            std::uint8_t lo = 255, hi = 0;
            for (size_t pos = c; pos < next; pos++) {
                auto k = static_cast<std::uint8_t>(std::popcount(static_cast<VertexSet>(adj[p.lab[pos]] & splitter)));
                count[pos] = k;
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
            if (lo == hi) {
                continue;
            }
            // Stable insertion sort of the cell by count.
            for (size_t i = c + 1; i < next; i++) {
                std::uint8_t kv = count[i];
                std::uint8_t vv = p.lab[i];
                size_t j = i;
                while (j > c && count[j - 1] > kv) {
                    count[j] = count[j - 1];
                    p.lab[j] = p.lab[j - 1];
                    j--;
                }
                count[j] = kv;
                p.lab[j] = vv;
            }
            bool was_pending = (pending >> c) & 1u;
            size_t largest_start = c;
            size_t largest_size = 0;
            std::uint32_t piece_starts = 0;
            size_t piece = c;
            while (piece < next) {
                size_t piece_end = piece + 1;
                while (piece_end < next && count[piece_end] == count[piece]) {
                    piece_end++;
                }
                VertexSet mask = 0;
                for (size_t pos = piece; pos < piece_end; pos++) {
                    mask |= vertex_bit(p.lab[pos]);
                }
                p.cell_mask[piece] = mask;
                p.end[piece] = static_cast<std::uint8_t>(piece_end);
                p.starts |= 1u << piece;
                piece_starts |= 1u << piece;
                if (piece_end - piece > largest_size) {
                    largest_size = piece_end - piece;
                    largest_start = piece;
                }
                if (piece != c) {
                    p.num_cells++;
                }
                piece = piece_end;
            }
            if (was_pending) {
                pending |= piece_starts;
            } else {
                pending |= piece_starts & ~(1u << largest_start);
            }
        }
    }
}

void individualize(Partition &p, size_t cell, std::uint8_t v) {
    size_t pos = cell;
    while (p.lab[pos] != v) {
        pos++;
    }
    std::swap(p.lab[pos], p.lab[cell]);
    p.end[cell + 1] = p.end[cell];
    p.end[cell] = static_cast<std::uint8_t>(cell + 1);
    p.cell_mask[cell + 1] = p.cell_mask[cell] & static_cast<VertexSet>(~vertex_bit(v));
    p.cell_mask[cell] = vertex_bit(v);
    p.starts |= 1u << (cell + 1);
    p.num_cells++;
}

class Search {
   public:
    Search(const Graph &g) : g_(g), n_(g.num_vertices()) {
    }

    void run(Partition p, std::uint32_t pending) {
        refine(g_, n_, p, pending);
        if (p.num_cells == n_) {
            leaf(p.lab);
            return;
        }
        // Target: first smallest non-singleton cell.
        size_t target = n_;
        size_t target_size = MAX_VERTICES + 1;
        for (size_t c = 0; c < n_; c = p.end[c]) {
            size_t size = p.end[c] - c;
            if (size > 1 && size < target_size) {
                target = c;
                target_size = size;
            }
        }
        VertexSet cell = p.cell_mask[target];
        VertexSet explored = 0;
        VertexSet todo = cell;
        while (todo) {
            auto v = static_cast<std::uint8_t>(std::countr_zero(todo));
            todo &= static_cast<VertexSet>(todo - 1);
            if (explored && (stabilizer_orbit(vertex_bit(v)) & explored)) {
                continue;
            }
            explored |= vertex_bit(v);
            Partition child = p;
            individualize(child, target, v);
            fixed_ |= vertex_bit(v);
            run(child, 1u << target);
            fixed_ &= static_cast<VertexSet>(~vertex_bit(v));
        }
    }

    CanonicalForm result() const {
        std::vector<size_t> images(n_);
        for (size_t pos = 0; pos < n_; pos++) {
            images[best_lab_[pos]] = pos;
        }
        CanonicalForm out{Graph::from_key(GraphKey{best_key_}), VertexPermutation::from_images(images), {}, gens_.size()};
        for (size_t v = 0; v < n_; v++) {
            out.orbit[v] = static_cast<std::uint8_t>(v);
        }
        // Union-find over all generators; representatives are least vertices.
        auto find = [&](size_t v) {
            while (out.orbit[v] != v) {
                v = out.orbit[v];
            }
            return v;
        };
        for (const auto &gen : gens_) {
            for (size_t v = 0; v < n_; v++) {
                size_t a = find(v);
                size_t b = find(gen.perm[v]);
                if (a != b) {
                    out.orbit[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
                }
            }
        }
        for (size_t v = 0; v < n_; v++) {
            out.orbit[v] = static_cast<std::uint8_t>(find(v));
        }
        return out;
    }

   private:
    struct Generator {
        Perm perm;
        VertexSet fixed;
    };

    uint128 leaf_key(const Perm &lab) const {
        const auto &adj = g_.rows();
        uint128 key = static_cast<uint128>(n_) << 120;
        int bit = 119;
        for (size_t i = 0; i < n_; i++) {
            VertexSet row = adj[lab[i]];
            for (size_t j = i + 1; j < n_; j++, bit--) {
                if ((row >> lab[j]) & 1u) {
                    key |= static_cast<uint128>(1) << bit;
                }
            }
        }
        return key;
    }

    void leaf(const Perm &lab) {
        uint128 key = leaf_key(lab);
        if (!have_first_) {
            have_first_ = true;
            first_key_ = best_key_ = key;
            first_lab_ = best_lab_ = lab;
            return;
        }
        if (key == first_key_) {
            add_automorphism(first_lab_, lab);
        } else if (key == best_key_) {
            add_automorphism(best_lab_, lab);
        } else if (key < best_key_) {
            best_key_ = key;
            best_lab_ = lab;
        }
    }

    // Both leaves produce the same graph, so mapping lab_b[i] -> lab_a[i]
    // is an automorphism.
    void add_automorphism(const Perm &lab_a, const Perm &lab_b) {
        Generator gen{};
        for (size_t i = 0; i < n_; i++) {
            gen.perm[lab_b[i]] = lab_a[i];
        }
        for (size_t v = 0; v < n_; v++) {
            if (gen.perm[v] == v) {
                gen.fixed |= vertex_bit(v);
            }
        }
        if (gen.fixed == all_vertices(n_)) {
            return;
        }
        gens_.push_back(gen);
    }

    // Orbit of `seed` under the generators that fix every individualized vertex.
    VertexSet stabilizer_orbit(VertexSet seed) const {
        VertexSet orbit = seed;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto &gen : gens_) {
                if ((fixed_ & static_cast<VertexSet>(~gen.fixed)) != 0) {
                    continue;
                }
                VertexSet image = 0;
                VertexSet rest = orbit;
                while (rest) {
                    size_t v = static_cast<size_t>(std::countr_zero(rest));
                    rest &= static_cast<VertexSet>(rest - 1);
                    image |= vertex_bit(gen.perm[v]);
                }
                if (image & static_cast<VertexSet>(~orbit)) {
                    orbit |= image;
                    grew = true;
                }
            }
        }
        return orbit;
    }

    const Graph &g_;
    size_t n_;
    bool have_first_ = false;
    uint128 first_key_ = 0;
    uint128 best_key_ = 0;
    Perm first_lab_{};
    Perm best_lab_{};
    std::vector<Generator> gens_;
    VertexSet fixed_ = 0;
};

CanonicalForm canonize(const Graph &g, std::span<const std::uint8_t> colors) {
    size_t n = g.num_vertices();
    Partition p;
    std::array<std::uint8_t, MAX_VERTICES> order{};
    for (size_t v = 0; v < n; v++) {
        order[v] = static_cast<std::uint8_t>(v);
    }
    if (!colors.empty()) {
        std::stable_sort(order.begin(), order.begin() + n,
                         [&](std::uint8_t a, std::uint8_t b) { return colors[a] < colors[b]; });
    }
    p.lab = order;
    std::uint32_t pending = 0;
    size_t start = 0;
    while (start < n) {
        size_t stop = start + 1;
        while (stop < n && (colors.empty() || colors[order[stop]] == colors[order[start]])) {
            stop++;
        }
        VertexSet mask = 0;
        for (size_t pos = start; pos < stop; pos++) {
            mask |= vertex_bit(order[pos]);
        }
        p.cell_mask[start] = mask;
        p.end[start] = static_cast<std::uint8_t>(stop);
        p.starts |= 1u << start;
        pending |= 1u << start;
        p.num_cells++;
        start = stop;
    }
    Search search(g);
    search.run(p, pending);
    return search.result();
}

}  // namespace

CanonicalForm canonical_form(const Graph &g) {
    return canonize(g, {});
}

CanonicalForm canonical_form(const Graph &g, std::span<const std::uint8_t> colors) {
    if (colors.size() != g.num_vertices()) {
        throw ArgumentError("color vector length must equal the vertex count");
    }
    return canonize(g, colors);
}

std::optional<VertexPermutation> find_isomorphism(const Graph &g, const Graph &h) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
        return std::nullopt;
    }
    CanonicalForm cg = canonical_form(g);
    CanonicalForm ch = canonical_form(h);
    if (!(cg.graph == ch.graph)) {
        return std::nullopt;
    }
    return ch.labeling.inverse().after(cg.labeling);
}

}  // namespace gsf
