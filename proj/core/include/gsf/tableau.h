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

#ifndef GSF_TABLEAU_H
#define GSF_TABLEAU_H

#include <cstdint>
#include <string>
#include <vector>

#include "gsf/clifford.h"
#include "gsf/graph.h"

namespace gsf {

/// One stabilizer generator: bit q of `x`/`z` is the X/Z component on qubit q.
struct PauliRow {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    bool negative = false;
    bool operator==(const PauliRow &) const = default;
};

/// Stabilizer state on n ≤ 16 qubits as n independent commuting generators.
class StabilizerTableau {
   public:
    /// |0...0⟩.
    explicit StabilizerTableau(size_t n);
    static StabilizerTableau zero_state(size_t n) {
        return StabilizerTableau(n);
    }
    static StabilizerTableau plus_state(size_t n);
    static StabilizerTableau from_rows(size_t n, std::vector<PauliRow> rows);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliRow> &rows() const {
        return rows_;
    }

    void cz(size_t i, size_t j);
    void hadamard(size_t q);
    void clifford(size_t q, const SingleQubitClifford &g);
    void layer(const LocalUnitaryLayer &layer);
    /// Replaces generator `target` by the product of generators `target` and `source`.
    void multiply_row(size_t target, size_t source);

    /// Generators commute pairwise and are independent.
    bool is_valid() const;
    /// Reduced row echelon form, unique per stabilizer group.
    StabilizerTableau canonical() const;
    /// One line per generator, e.g. "+XZI".
    std::string str() const;

    bool operator==(const StabilizerTableau &) const = default;

   private:
    void check_qubit(size_t q) const;
    void debug_check() const;

    size_t n_;
    std::vector<PauliRow> rows_;
};

/// Generator a is X_a Z_{N(a)}.
StabilizerTableau graph_state_tableau(const Graph &g);

StabilizerTableau apply_cz(StabilizerTableau t, size_t i, size_t j);
StabilizerTableau apply_hadamard(StabilizerTableau t, size_t q);
StabilizerTableau apply_single_clifford(StabilizerTableau t, size_t q, const SingleQubitClifford &g);
StabilizerTableau apply_layer(StabilizerTableau t, const LocalUnitaryLayer &layer);

/// Same stabilizer group, signs included.
bool tableaux_equal(const StabilizerTableau &a, const StabilizerTableau &b);

}  // namespace gsf

#endif
