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

#include "gsf/clifford.h"

#include <deque>

#include "gsf/errors.h"

namespace gsf {

namespace {

constexpr std::array<std::string_view, 6> TOKEN_NAMES{"sqX+", "sqX-", "sqZ+", "sqZ-", "hZ+", "hZ-"};

// P * Q = i^k * R.
struct Product {
    Pauli pauli;
    int k;
};

Product multiply(Pauli p, Pauli q) {
    auto r = static_cast<Pauli>(static_cast<std::uint8_t>(p) ^ static_cast<std::uint8_t>(q));
    if (p == Pauli::I || q == Pauli::I || p == q) {
        return {r, 0};
    }
    // Cyclic order X -> Y -> Z -> X gives +i.
    auto cyc = [](Pauli a) {
        switch (a) {
            case Pauli::X:
                return 0;
            case Pauli::Y:
                return 1;
            default:
                return 2;
        }
    };
    return {r, (cyc(q) - cyc(p) + 3) % 3 == 1 ? 1 : 3};
}

SignedPauli apply_signed(const SingleQubitClifford &g, SignedPauli p) {
    SignedPauli out = g.image(p.pauli);
    out.negative ^= p.negative;
    return out;
}

// Tokens in the order breadth-first decomposition tries them.
constexpr std::array<GateToken, 6> SEARCH_ORDER{GateToken::SqXMinus, GateToken::SqZPlus, GateToken::HZPlus,
                                                GateToken::SqXPlus,  GateToken::SqZMinus, GateToken::HZMinus};

struct DecompositionTable {
    std::array<std::vector<GateToken>, 24> words;

    DecompositionTable() {
        std::array<bool, 24> done{};
        std::deque<SingleQubitClifford> queue{SingleQubitClifford()};
        done[SingleQubitClifford().index()] = true;
        while (!queue.empty()) {
            SingleQubitClifford g = queue.front();
            queue.pop_front();
            for (GateToken t : SEARCH_ORDER) {
                SingleQubitClifford next = g.then(SingleQubitClifford::from_token(t));
                size_t idx = next.index();
                if (!done[idx]) {
                    done[idx] = true;
                    words[idx] = words[g.index()];
                    words[idx].push_back(t);
                    queue.push_back(next);
                }
            }
        }
        for (bool d : done) {
            if (!d) {
                throw InvariantViolation("gate tokens do not generate the single-qubit Clifford group");
            }
        }
    }
};

}  // namespace

std::string_view token_name(GateToken t) {
    return TOKEN_NAMES[static_cast<size_t>(t)];
}

std::optional<GateToken> parse_token(std::string_view name) {
    for (size_t i = 0; i < TOKEN_NAMES.size(); i++) {
        if (TOKEN_NAMES[i] == name) {
            return static_cast<GateToken>(i);
        }
    }
    return std::nullopt;
}

SingleQubitClifford SingleQubitClifford::from_images(SignedPauli x_image, SignedPauli z_image) {
    if (x_image.pauli == Pauli::I || z_image.pauli == Pauli::I || x_image.pauli == z_image.pauli) {
        throw ArgumentError("Clifford images of X and Z must be anticommuting Paulis");
    }
    return SingleQubitClifford(x_image, z_image);
}

SingleQubitClifford SingleQubitClifford::from_token(GateToken t) {
    switch (t) {
        case GateToken::SqXPlus:
            return SingleQubitClifford({Pauli::X, false}, {Pauli::Y, false});
        case GateToken::SqXMinus:
            return SingleQubitClifford({Pauli::X, false}, {Pauli::Y, true});
        case GateToken::SqZPlus:
            return SingleQubitClifford({Pauli::Y, true}, {Pauli::Z, false});
        case GateToken::SqZMinus:
            return SingleQubitClifford({Pauli::Y, false}, {Pauli::Z, false});
        case GateToken::HZPlus:
        case GateToken::HZMinus:
            return SingleQubitClifford({Pauli::X, true}, {Pauli::Z, false});
    }
    throw ArgumentError("unknown gate token");
}

SingleQubitClifford SingleQubitClifford::from_word(std::span<const GateToken> word) {
    SingleQubitClifford g;
    for (GateToken t : word) {
        g = g.then(from_token(t));
    }
    return g;
}

const std::array<SingleQubitClifford, 24> &SingleQubitClifford::all() {
    static const std::array<SingleQubitClifford, 24> table = [] {
        std::array<SingleQubitClifford, 24> out{};
        size_t k = 0;
        for (Pauli px : {Pauli::X, Pauli::Z, Pauli::Y}) {
            for (Pauli pz : {Pauli::X, Pauli::Z, Pauli::Y}) {
                if (px == pz) {
                    continue;
                }
                for (bool sx : {false, true}) {
                    for (bool sz : {false, true}) {
                        out[k++] = SingleQubitClifford({px, sx}, {pz, sz});
                    }
                }
            }
        }
        return out;
    }();
    return table;
}

size_t SingleQubitClifford::index() const {
    auto slot = [](Pauli p) -> size_t {
        switch (p) {
            case Pauli::X:
                return 0;
            case Pauli::Z:
                return 1;
            default:
                return 2;
        }
    };
    size_t px = slot(x_.pauli);
    size_t pz = slot(z_.pauli);
    size_t pair = px * 2 + (pz > px ? pz - 1 : pz);
    return pair * 4 + (x_.negative ? 2 : 0) + (z_.negative ? 1 : 0);
}

SignedPauli SingleQubitClifford::image(Pauli p) const {
    switch (p) {
        case Pauli::I:
            return {Pauli::I, false};
        case Pauli::X:
            return x_;
        case Pauli::Z:
            return z_;
        case Pauli::Y:
            break;
    }
    // Y = i X Z, so U Y U† = i (U X U†)(U Z U†).
    Product prod = multiply(x_.pauli, z_.pauli);
    int k = (1 + prod.k) % 4;
    if (k % 2 != 0) {
        throw InvariantViolation("Clifford image of Y is not Hermitian");
    }
    return {prod.pauli, static_cast<bool>(x_.negative ^ z_.negative ^ (k == 2))};
}

SingleQubitClifford SingleQubitClifford::then(const SingleQubitClifford &next) const {
    return SingleQubitClifford(apply_signed(next, x_), apply_signed(next, z_));
}

SingleQubitClifford SingleQubitClifford::inverse() const {
    for (const auto &candidate : all()) {
        if (then(candidate).is_identity()) {
            return candidate;
        }
    }
    throw InvariantViolation("Clifford without inverse");
}

std::string SingleQubitClifford::str() const {
    auto render = [](SignedPauli p) {
        std::string s = p.negative ? "-" : "+";
        s.push_back("IXZY"[static_cast<size_t>(p.pauli)]);
        return s;
    };
    return "X->" + render(x_) + " Z->" + render(z_);
}

const std::vector<GateToken> &decompose(const SingleQubitClifford &g) {
    static const DecompositionTable table;
    return table.words[g.index()];
}

std::string render_word(std::span<const GateToken> word) {
    std::string out;
    for (GateToken t : word) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += token_name(t);
    }
    return out;
}

LocalUnitaryLayer LocalUnitaryLayer::identity(size_t n) {
    return LocalUnitaryLayer{std::vector<SingleQubitClifford>(n)};
}

bool LocalUnitaryLayer::is_identity() const {
    for (const auto &g : gates) {
        if (!g.is_identity()) {
            return false;
        }
    }
    return true;
}

LocalUnitaryLayer LocalUnitaryLayer::then(const LocalUnitaryLayer &next) const {
    if (next.size() != size()) {
        throw ArgumentError("layer sizes differ");
    }
    LocalUnitaryLayer out = *this;
    for (size_t q = 0; q < size(); q++) {
        out.gates[q] = gates[q].then(next.gates[q]);
    }
    return out;
}

LocalUnitaryLayer lc_unitary(const Graph &g, size_t a) {
    if (a >= g.num_vertices()) {
        throw ArgumentError("LC unitary vertex out of range: " + std::to_string(a));
    }
    LocalUnitaryLayer layer = LocalUnitaryLayer::identity(g.num_vertices());
    layer.gates[a] = SingleQubitClifford::from_token(GateToken::SqXMinus);
    VertexSet nb = g.neighbors(a);
    while (nb) {
        size_t b = static_cast<size_t>(std::countr_zero(nb));
        nb &= static_cast<VertexSet>(nb - 1);
        layer.gates[b] = SingleQubitClifford::from_token(GateToken::SqZPlus);
    }
    return layer;
}

LocalUnitaryLayer compose_sequence(const Graph &g, std::span<const size_t> sequence) {
    LocalUnitaryLayer total = LocalUnitaryLayer::identity(g.num_vertices());
    Graph current = g;
    for (size_t a : sequence) {
        total = total.then(lc_unitary(current, a));
        current = local_complement(current, a);
    }
    return total;
}

}  // namespace gsf
