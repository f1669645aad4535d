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

#ifndef GSF_TESTS_ORACLES_H
#define GSF_TESTS_ORACLES_H

// Slow, independent reference implementations used to check the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gsf/clifford.h"
#include "gsf/compiler.h"
#include "gsf/graph.h"

namespace gsf::oracle {

inline Graph random_graph(size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (coin(rng)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

inline Graph random_connected_graph(size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> density(0.2, 0.9);
    while (true) {
        Graph g = random_graph(n, density(rng), rng);
        if (is_connected(g)) {
            return g;
        }
    }
}

inline VertexPermutation random_permutation(size_t n, std::mt19937_64 &rng) {
    std::vector<size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return VertexPermutation::from_images(images);
}

/// Adjacency bit-string of g under every relabeling, lexicographically least.
inline std::string brute_canonical_bits(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string bits;
        // bits for the graph whose vertex i is g's vertex p[i]
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                bits.push_back(g.has_edge(p[i], p[j]) ? '1' : '0');
            }
        }
        if (best.empty() || bits < best) {
            best = bits;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_isomorphic(const Graph &g, const Graph &h) {
    return g.num_vertices() == h.num_vertices() && brute_canonical_bits(g) == brute_canonical_bits(h);
}

/// Least number of matchings covering all edges, by dynamic programming over edge subsets.
inline size_t brute_chromatic_index(const Graph &g) {
    std::vector<Edge> edges = g.edges();
    size_t m = edges.size();
    if (m == 0) {
        return 0;
    }
    std::vector<std::uint32_t> matchings;
    for (std::uint32_t s = 1; s < (1u << m); s++) {
        std::uint32_t used = 0;
        bool ok = true;
        for (size_t e = 0; e < m && ok; e++) {
            if ((s >> e) & 1u) {
                std::uint32_t ends = (1u << edges[e].a) | (1u << edges[e].b);
                ok = (used & ends) == 0;
                used |= ends;
            }
        }
        if (ok) {
            matchings.push_back(s);
        }
    }
    std::vector<std::uint8_t> best(1u << m, 255);
    best[0] = 0;
    for (std::uint32_t s = 1; s < (1u << m); s++) {
        std::uint32_t low = s & (~s + 1);
        for (std::uint32_t mt : matchings) {
            if ((mt & low) && (mt & ~s) == 0) {
                best[s] = std::min<std::uint8_t>(best[s], static_cast<std::uint8_t>(best[s & ~mt] + 1));
            }
        }
    }
    return best[(1u << m) - 1];
}

inline size_t brute_vertex_cover(const Graph &g) {
    size_t n = g.num_vertices();
    size_t best = n;
    for (std::uint32_t s = 0; s < (1u << n); s++) {
        bool cover = true;
        for (const Edge &e : g.edges()) {
            if (!((s >> e.a) & 1u) && !((s >> e.b) & 1u)) {
                cover = false;
                break;
            }
        }
        if (cover) {
            best = std::min<size_t>(best, static_cast<size_t>(__builtin_popcount(s)));
        }
    }
    return best;
}

/// GF(2) rank of the |side| x |rest| adjacency block, by plain elimination.
inline size_t brute_cut_rank(const Graph &g, VertexSet side) {
    size_t n = g.num_vertices();
    std::vector<std::vector<int>> m;
    for (size_t a = 0; a < n; a++) {
        if (!((side >> a) & 1u)) {
            continue;
        }
        std::vector<int> row;
        for (size_t b = 0; b < n; b++) {
            if (!((side >> b) & 1u)) {
                row.push_back(g.has_edge(a, b) ? 1 : 0);
            }
        }
        m.push_back(row);
    }
    size_t rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && rank < m.size(); c++) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) {
            piv++;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

// ---- state-vector simulation ----

using Amp = std::complex<double>;
using Mat2 = std::array<Amp, 4>;  // row-major

inline Mat2 mat_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

/// exp(i θ P) = cos θ I + i sin θ P.
inline Mat2 token_matrix(GateToken t) {
    const double q = std::acos(-1.0) / 4;
    const Amp i{0, 1};
    auto rot_x = [&](double th) { return Mat2{std::cos(th), i * std::sin(th), i * std::sin(th), std::cos(th)}; };
    auto rot_z = [&](double th) { return Mat2{std::exp(i * th), 0, 0, std::exp(-i * th)}; };
    switch (t) {
        case GateToken::SqXPlus:
            return rot_x(q);
        case GateToken::SqXMinus:
            return rot_x(-q);
        case GateToken::SqZPlus:
            return rot_z(q);
        case GateToken::SqZMinus:
            return rot_z(-q);
        case GateToken::HZPlus:
            return rot_z(2 * q);
        case GateToken::HZMinus:
            return rot_z(-2 * q);
    }
    return {1, 0, 0, 1};
}

/// Matrix of a word in application order.
inline Mat2 word_matrix(const std::vector<GateToken> &word) {
    Mat2 m{1, 0, 0, 1};
    for (GateToken t : word) {
        m = mat_mul(token_matrix(t), m);
    }
    return m;
}

inline Mat2 pauli_matrix(Pauli p) {
    const Amp i{0, 1};
    switch (p) {
        case Pauli::X:
            return {0, 1, 1, 0};
        case Pauli::Z:
            return {1, 0, 0, -1};
        case Pauli::Y:
            return {0, -i, i, 0};
        default:
            return {1, 0, 0, 1};
    }
}

inline Mat2 dagger(const Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

/// Signed Pauli equal to m, if any.
inline std::optional<SignedPauli> as_signed_pauli(const Mat2 &m) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (bool neg : {false, true}) {
            Mat2 ref = pauli_matrix(p);
            double s = neg ? -1 : 1;
            bool eq = true;
            for (size_t k = 0; k < 4; k++) {
                eq &= std::abs(m[k] - s * ref[k]) < 1e-9;
            }
            if (eq) {
                return SignedPauli{p, neg};
            }
        }
    }
    return std::nullopt;
}

using State = std::vector<Amp>;

inline State plus_state(size_t n) {
    return State(size_t{1} << n, Amp(1.0 / std::sqrt(static_cast<double>(size_t{1} << n))));
}

inline void apply_cz(State &psi, size_t a, size_t b) {
    for (size_t k = 0; k < psi.size(); k++) {
        if (((k >> a) & 1u) && ((k >> b) & 1u)) {
            psi[k] = -psi[k];
        }
    }
}

inline void apply_1q(State &psi, size_t q, const Mat2 &m) {
    for (size_t k = 0; k < psi.size(); k++) {
        if ((k >> q) & 1u) {
            continue;
        }
        size_t k1 = k | (size_t{1} << q);
        Amp a0 = psi[k], a1 = psi[k1];
        psi[k] = m[0] * a0 + m[1] * a1;
        psi[k1] = m[2] * a0 + m[3] * a1;
    }
}

inline State graph_state(const Graph &g) {
    State psi = plus_state(g.num_vertices());
    for (const Edge &e : g.edges()) {
        apply_cz(psi, e.a, e.b);
    }
    return psi;
}

/// |<a|b>| = 1, i.e. equal up to global phase.
inline bool same_ray(const State &a, const State &b) {
    Amp inner = 0;
    for (size_t k = 0; k < a.size(); k++) {
        inner += std::conj(a[k]) * b[k];
    }
    return std::abs(std::abs(inner) - 1.0) < 1e-9;
}

/// Runs a circuit on amplitudes, decoding the final layer from its gate tokens.
inline State simulate(const Circuit &c) {
    State psi = plus_state(c.n);
    for (const auto &layer : c.cz_layers) {
        for (const Edge &e : layer) {
            apply_cz(psi, e.a, e.b);
        }
    }
    for (size_t q = 0; q < c.n; q++) {
        apply_1q(psi, q, word_matrix(decompose(c.final_layer.gates[q])));
    }
    return psi;
}

}  // namespace gsf::oracle

#endif
