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

#ifndef GSF_COMPILER_H
#define GSF_COMPILER_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/clifford.h"
#include "gsf/graph.h"
#include "gsf/orbit.h"
#include "gsf/schedule.h"

namespace gsf {

enum class Strategy { Standard, MinEdges, MinDepth };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// CZ layers applied to |+...+⟩, followed by one layer of single-qubit Cliffords.
struct Circuit {
    size_t n = 1;
    Strategy strategy = Strategy::Standard;
    /// Each layer holds vertex-disjoint pairs (a < b).
    std::vector<std::vector<Edge>> cz_layers;
    LocalUnitaryLayer final_layer = LocalUnitaryLayer::identity(1);
    size_t cz_count = 0;
    /// CZ layers, plus one if the final layer is not the identity.
    size_t depth = 0;
    size_t standard_depth = 0;
    size_t standard_cz_count = 0;

    bool operator==(const Circuit &) const = default;
};

struct CompileOptions {
    OrbitOptions orbit;
    ColoringOptions coloring;
};

/// Compiles a preparation circuit for |G⟩. Disconnected graphs are compiled
/// per component with layer k of every component merged into layer k.
/// The result is verified before it is returned.
Circuit compile(const Graph &g, Strategy strategy, const CompileOptions &options = {});

/// No qubit repeats within a layer, all indices are in range, sizes agree.
bool layers_legal(const Circuit &c);
/// Simulates the circuit from |0...0⟩ (with H on every qubit) and compares
/// against the stabilizer of |G⟩.
bool verify(const Circuit &c, const Graph &g);

struct AdvantageReport {
    size_t standard_depth = 0;
    /// Depth of the route through the least-χ′ representative.
    size_t orbit_depth = 0;
    /// |E(G)| minus the edges of that representative.
    long cz_saved = 0;
    /// χ′(G) − χ′(H) > 1.
    bool advantageous = false;
};

AdvantageReport advantage_report(const Graph &g, const CompileOptions &options = {});

std::string emit_json(const Circuit &c);
/// Throws ParseError on malformed text or schema violations.
Circuit parse_circuit_json(std::string_view text);
std::string emit_text(const Circuit &c);

}  // namespace gsf

#endif
