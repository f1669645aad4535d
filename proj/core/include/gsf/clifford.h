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

#ifndef GSF_CLIFFORD_H
#define GSF_CLIFFORD_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/graph.h"

namespace gsf {

/// Single-qubit Pauli; bit 0 is the X component and bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

struct SignedPauli {
    Pauli pauli = Pauli::I;
    bool negative = false;
    bool operator==(const SignedPauli &) const = default;
};

/// Quarter and half turns: sqX+ = exp(+iπ/4 σx), sqX- = exp(-iπ/4 σx),
/// sqZ± = exp(±iπ/4 σz), hZ± = exp(±iπ/2 σz).
enum class GateToken : std::uint8_t { SqXPlus, SqXMinus, SqZPlus, SqZMinus, HZPlus, HZMinus };

std::string_view token_name(GateToken t);
std::optional<GateToken> parse_token(std::string_view name);

/// A single-qubit Clifford operation up to global phase, stored as its
/// conjugation action U X U† and U Z U†.
class SingleQubitClifford {
   public:
    constexpr SingleQubitClifford() = default;

    /// Throws ArgumentError unless the images anticommute.
    static SingleQubitClifford from_images(SignedPauli x_image, SignedPauli z_image);
    static SingleQubitClifford from_token(GateToken t);
    /// Product of a word given in application order.
    static SingleQubitClifford from_word(std::span<const GateToken> word);
    /// All 24 elements, ordered by `index()`.
    static const std::array<SingleQubitClifford, 24> &all();

    SignedPauli image_of_x() const {
        return x_;
    }
    SignedPauli image_of_z() const {
        return z_;
    }
    /// U P U† for any Pauli letter, including Y.
    SignedPauli image(Pauli p) const;

    /// The operation "apply this, then `next`".
    SingleQubitClifford then(const SingleQubitClifford &next) const;
    SingleQubitClifford inverse() const;
    bool is_identity() const {
        return *this == SingleQubitClifford();
    }
    size_t index() const;

    std::string str() const;

    bool operator==(const SingleQubitClifford &) const = default;

   private:
    constexpr SingleQubitClifford(SignedPauli x, SignedPauli z) : x_(x), z_(z) {
    }

    SignedPauli x_{Pauli::X, false};
    SignedPauli z_{Pauli::Z, false};
};

/// Shortest word (at most 3 tokens, application order) equal to `g` up to global phase.
const std::vector<GateToken> &decompose(const SingleQubitClifford &g);
std::string render_word(std::span<const GateToken> word);

/// One single-qubit Clifford per qubit, all applied in one time step.
struct LocalUnitaryLayer {
    std::vector<SingleQubitClifford> gates;

    static LocalUnitaryLayer identity(size_t n);
    size_t size() const {
        return gates.size();
    }
    bool is_identity() const;
    /// Per-qubit "apply this, then `next`".
    LocalUnitaryLayer then(const LocalUnitaryLayer &next) const;
    bool operator==(const LocalUnitaryLayer &) const = default;
};

/// Local unitary realizing local complementation at `a`:
/// exp(-iπ/4 σx) on a and exp(+iπ/4 σz) on each neighbor of a.
LocalUnitaryLayer lc_unitary(const Graph &g, size_t a);

/// Collapses the local unitaries of successive local complementations at
/// `sequence` (starting from `g`, graph updated after every step) into one layer.
LocalUnitaryLayer compose_sequence(const Graph &g, std::span<const size_t> sequence);

}  // namespace gsf

#endif
