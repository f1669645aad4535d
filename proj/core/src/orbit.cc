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

#include <algorithm>

#include "gsf/canonical.h"
#include "gsf/errors.h"

namespace gsf {

const OrbitMove &IsoOrbit::move(size_t member, size_t vertex) const {
    if (moves_.empty()) {
        throw ArgumentError("orbit was enumerated without a move table");
    }
    if (member >= members_.size() || vertex >= num_vertices()) {
        throw ArgumentError("orbit move index out of range");
    }
    return moves_[member * num_vertices() + vertex];
}

std::optional<size_t> IsoOrbit::find(const Graph &canonical) const {
    auto it = index_.find(canonical.key());
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<OrbitStep> IsoOrbit::path_from_source(size_t target) const {
    if (target >= members_.size()) {
        throw ArgumentError("orbit member index out of range");
    }
    std::vector<OrbitStep> steps;
    while (target != 0) {
        const Parent &p = parents_[target];
        steps.push_back({p.member, p.vertex, p.witness});
        target = p.member;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

size_t IsoOrbit::least_member() const {
    size_t best = 0;
    for (size_t i = 1; i < members_.size(); i++) {
        if (members_[i].key() < members_[best].key()) {
            best = i;
        }
    }
    return best;
}

IsoOrbit enumerate_orbit(const Graph &g, const OrbitOptions &options) {
    size_t n = g.num_vertices();
    IsoOrbit orbit;
    CanonicalForm seed = canonical_form(g);
    orbit.members_.push_back(seed.graph);
    orbit.parents_.push_back({0, 0, VertexPermutation::identity(n)});
    orbit.index_.emplace(seed.graph.key(), 0);
    VertexPermutation identity = VertexPermutation::identity(n);

    for (size_t i = 0; i < orbit.members_.size(); i++) {
        for (size_t a = 0; a < n; a++) {
            const Graph &current = orbit.members_[i];
            OrbitMove move;
            if (set_size(current.neighbors(a)) < 2) {
                // Nothing to toggle; the member maps to itself.
                move = {static_cast<std::uint32_t>(i), identity};
            } else {
                CanonicalForm cf = canonical_form(local_complement(current, a));
                auto [it, inserted] =
                    orbit.index_.emplace(cf.graph.key(), static_cast<std::uint32_t>(orbit.members_.size()));
                if (inserted) {
                    if (orbit.members_.size() >= options.member_budget) {
                        throw ResourceError("orbit member budget of " + std::to_string(options.member_budget) +
                                            " canonical forms exceeded");
                    }
                    orbit.members_.push_back(cf.graph);
                    orbit.parents_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(a), cf.labeling});
                }
                move = {it->second, cf.labeling};
            }
            if (options.record_moves) {
                orbit.moves_.push_back(move);
            }
        }
    }
    return orbit;
}

std::vector<MemberProfile> profile_members(const IsoOrbit &orbit) {
    std::vector<MemberProfile> out;
    out.reserve(orbit.size());
    for (const auto &m : orbit.members()) {
        out.push_back({m.num_edges(), chromatic_index(m)});
    }
    return out;
}

namespace {

Optimum pick(const IsoOrbit &orbit, std::span<const MemberProfile> profiles, size_t edges, size_t chi) {
    Optimum best;
    best.edges = edges;
    best.chromatic_index = chi;
    bool found = false;
    for (size_t i = 0; i < profiles.size(); i++) {
        if (profiles[i].edges != edges || profiles[i].chromatic_index != chi) {
            continue;
        }
        best.count++;
        if (!found || orbit.member(i).key() < orbit.member(best.member).key()) {
            best.member = i;
            found = true;
        }
    }
    best.representative = orbit.member(best.member);
    best.coloring = edge_color_optimal(best.representative);
    if (best.coloring.num_colors() != chi) {
        throw InvariantViolation("representative coloring disagrees with its chromatic index");
    }
    return best;
}

}  // namespace

RepresentativeReport optimal_representatives(const IsoOrbit &orbit) {
    std::vector<MemberProfile> profiles = profile_members(orbit);
    return optimal_representatives(orbit, profiles);
}

RepresentativeReport optimal_representatives(const IsoOrbit &orbit, std::span<const MemberProfile> profiles) {
    if (profiles.size() != orbit.size() || profiles.empty()) {
        throw ArgumentError("member profiles do not match the orbit");
    }
    auto by_edges = [](const MemberProfile &x, const MemberProfile &y) {
        return std::pair(x.edges, x.chromatic_index) < std::pair(y.edges, y.chromatic_index);
    };
    auto by_chi = [](const MemberProfile &x, const MemberProfile &y) {
        return std::pair(x.chromatic_index, x.edges) < std::pair(y.chromatic_index, y.edges);
    };
    const MemberProfile &e = *std::min_element(profiles.begin(), profiles.end(), by_edges);
    const MemberProfile &c = *std::min_element(profiles.begin(), profiles.end(), by_chi);
    RepresentativeReport report{pick(orbit, profiles, e.edges, e.chromatic_index), std::nullopt};
    if (c.edges != e.edges || c.chromatic_index != e.chromatic_index) {
        report.min_chi_first = pick(orbit, profiles, c.edges, c.chromatic_index);
    }
    return report;
}

Graph replay(const Graph &start, std::span<const size_t> vertices) {
    Graph g = start;
    for (size_t v : vertices) {
        g = local_complement(g, v);
    }
    return g;
}

LcSequence find_lc_sequence(const Graph &g, FilterOrder order, const OrbitOptions &options) {
    OrbitOptions local = options;
    local.record_moves = false;
    IsoOrbit orbit = enumerate_orbit(g, local);
    RepresentativeReport report = optimal_representatives(orbit);
    return find_lc_sequence(g, orbit, report, order);
}

LcSequence find_lc_sequence(const Graph &g, const IsoOrbit &orbit, const RepresentativeReport &report,
                            FilterOrder order) {
    CanonicalForm cf = canonical_form(g);
    if (!(cf.graph == orbit.source())) {
        throw ArgumentError("orbit was not enumerated from this graph");
    }
    const Optimum &target = order == FilterOrder::MinEdgesFirst ? report.min_edges_first : report.depth_optimum();
    if (g.num_edges() == target.edges && chromatic_index(g) == target.chromatic_index) {
        return {g, {}};
    }

    // Walk the canonical path while tracking labeling: labeling(current) == path member.
    Graph current = g;
    VertexPermutation labeling = cf.labeling;
    std::vector<size_t> lifted;
    for (const OrbitStep &step : orbit.path_from_source(target.member)) {
        size_t vertex = labeling.inverse()(step.vertex);
        current = local_complement(current, vertex);
        labeling = step.witness.after(labeling);
        lifted.push_back(vertex);
    }
    if (!(current.permuted(labeling) == target.representative)) {
        throw InvariantViolation("lifted LC path does not reach the representative");
    }
    std::reverse(lifted.begin(), lifted.end());
    LcSequence out{current, std::move(lifted)};
    if (!(replay(out.start, out.vertices) == g)) {
        throw InvariantViolation("LC sequence replay does not reproduce the target graph");
    }
    return out;
}

std::optional<Graph> two_colorable_member(const IsoOrbit &orbit) {
    for (const auto &m : orbit.members()) {
        if (is_bipartite(m)) {
            return m;
        }
    }
    return std::nullopt;
}

}  // namespace gsf
