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

#include "gsf/tableau.h"

#include <bit>

#include "gsf/errors.h"

namespace gsf {

namespace {

// Exponent of i picked up by the single-qubit product (x1,z1)·(x2,z2).
int g_exponent(unsigned x1, unsigned z1, unsigned x2, unsigned z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return static_cast<int>(z2) - static_cast<int>(x2);
    }
    if (x1) {
        return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
    }
    return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

bool commute(const PauliRow &a, const PauliRow &b) {
    return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

std::uint64_t packed(const PauliRow &r, size_t n) {
    return static_cast<std::uint64_t>(r.x) | (static_cast<std::uint64_t>(r.z) << n);
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t n) : n_(n), rows_(n) {
    if (n == 0 || n > MAX_VERTICES) {
        throw ArgumentError("tableau size must be in 1.." + std::to_string(MAX_VERTICES));
    }
    for (size_t q = 0; q < n; q++) {
        rows_[q].z = 1u << q;
    }
}

StabilizerTableau StabilizerTableau::plus_state(size_t n) {
    StabilizerTableau t(n);
    for (size_t q = 0; q < n; q++) {
        t.hadamard(q);
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_rows(size_t n, std::vector<PauliRow> rows) {
    StabilizerTableau t(n);
    if (rows.size() != n) {
        throw ArgumentError("tableau needs exactly n generators");
    }
    std::uint32_t mask = static_cast<std::uint32_t>(all_vertices(n));
    for (const auto &r : rows) {
        if ((r.x | r.z) & ~mask) {
            throw ArgumentError("generator acts outside the qubit range");
        }
    }
    t.rows_ = std::move(rows);
    return t;
}

void StabilizerTableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw ArgumentError("qubit out of range: " + std::to_string(q));
    }
}

void StabilizerTableau::debug_check() const {
#ifndef NDEBUG
    if (!is_valid()) {
        throw InvariantViolation("tableau generators no longer commute or are dependent");
    }
#endif
}

void StabilizerTableau::cz(size_t i, size_t j) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) {
        throw ArgumentError("CZ needs two distinct qubits");
    }
    for (auto &r : rows_) {
        unsigned xi = (r.x >> i) & 1u, xj = (r.x >> j) & 1u;
        unsigned zi = (r.z >> i) & 1u, zj = (r.z >> j) & 1u;
        r.negative ^= static_cast<bool>(xi & xj & (zi ^ zj));
        r.z ^= (xj << i) | (xi << j);
    }
    debug_check();
}

void StabilizerTableau::hadamard(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        unsigned x = (r.x >> q) & 1u, z = (r.z >> q) & 1u;
        r.negative ^= static_cast<bool>(x & z);
        r.x = (r.x & ~(1u << q)) | (z << q);
        r.z = (r.z & ~(1u << q)) | (x << q);
    }
    debug_check();
}

void StabilizerTableau::clifford(size_t q, const SingleQubitClifford &g) {
    check_qubit(q);
    if (g.is_identity()) {
        return;
    }
    for (auto &r : rows_) {
        auto letter = static_cast<Pauli>(((r.x >> q) & 1u) | (((r.z >> q) & 1u) << 1));
        SignedPauli img = g.image(letter);
        auto bits = static_cast<unsigned>(img.pauli);
        r.x = (r.x & ~(1u << q)) | ((bits & 1u) << q);
        r.z = (r.z & ~(1u << q)) | (((bits >> 1) & 1u) << q);
        r.negative ^= img.negative;
    }
    debug_check();
}

void StabilizerTableau::layer(const LocalUnitaryLayer &layer) {
    if (layer.size() != n_) {
        throw ArgumentError("layer size differs from qubit count");
    }
    for (size_t q = 0; q < n_; q++) {
        clifford(q, layer.gates[q]);
    }
}

void StabilizerTableau::multiply_row(size_t target, size_t source) {
    if (target >= n_ || source >= n_ || target == source) {
        throw ArgumentError("bad generator indices");
    }
    PauliRow &t = rows_[target];
    const PauliRow &s = rows_[source];
    int phase = 2 * static_cast<int>(t.negative) + 2 * static_cast<int>(s.negative);
    for (size_t q = 0; q < n_; q++) {
        phase += g_exponent((s.x >> q) & 1u, (s.z >> q) & 1u, (t.x >> q) & 1u, (t.z >> q) & 1u);
    }
    phase = ((phase % 4) + 4) % 4;
    if (phase % 2 != 0) {
        throw InvariantViolation("product of commuting generators has imaginary phase");
    }
    t.negative = phase == 2;
    t.x ^= s.x;
    t.z ^= s.z;
}

bool StabilizerTableau::is_valid() const {
    for (size_t a = 0; a < n_; a++) {
        for (size_t b = a + 1; b < n_; b++) {
            if (!commute(rows_[a], rows_[b])) {
                return false;
            }
        }
    }
    std::vector<std::uint64_t> basis;
    for (const auto &r : rows_) {
        std::uint64_t v = packed(r, n_);
        for (std::uint64_t b : basis) {
            v = std::min(v, v ^ b);
        }
        if (v == 0) {
            return false;
        }
        basis.push_back(v);
    }
    return true;
}

StabilizerTableau StabilizerTableau::canonical() const {
    StabilizerTableau t = *this;
    size_t pivot_row = 0;
    // Columns X_0..X_{n-1} then Z_0..Z_{n-1}.
    for (size_t col = 0; col < 2 * n_ && pivot_row < n_; col++) {
        auto has = [&](size_t r) { return (packed(t.rows_[r], n_) >> col) & 1u; };
        size_t found = n_;
        for (size_t r = pivot_row; r < n_; r++) {
            if (has(r)) {
                found = r;
                break;
            }
        }
        if (found == n_) {
            continue;
        }
        std::swap(t.rows_[pivot_row], t.rows_[found]);
        for (size_t r = 0; r < n_; r++) {
            if (r != pivot_row && has(r)) {
                t.multiply_row(r, pivot_row);
            }
        }
        pivot_row++;
    }
    return t;
}

std::string StabilizerTableau::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out.push_back(r.negative ? '-' : '+');
        for (size_t q = 0; q < n_; q++) {
            out.push_back("IXZY"[((r.x >> q) & 1u) | (((r.z >> q) & 1u) << 1)]);
        }
        out.push_back('\n');
    }
    return out;
}

StabilizerTableau graph_state_tableau(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<PauliRow> rows(n);
    for (size_t a = 0; a < n; a++) {
        rows[a].x = 1u << a;
        rows[a].z = g.neighbors(a);
    }
    return StabilizerTableau::from_rows(n, std::move(rows));
}

StabilizerTableau apply_cz(StabilizerTableau t, size_t i, size_t j) {
    t.cz(i, j);
    return t;
}

StabilizerTableau apply_hadamard(StabilizerTableau t, size_t q) {
    t.hadamard(q);
    return t;
}

StabilizerTableau apply_single_clifford(StabilizerTableau t, size_t q, const SingleQubitClifford &g) {
    t.clifford(q, g);
    return t;
}

StabilizerTableau apply_layer(StabilizerTableau t, const LocalUnitaryLayer &layer) {
    t.layer(layer);
    return t;
}

bool tableaux_equal(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError("tableaux have different qubit counts");
    }
    return a.canonical() == b.canonical();
}

}  // namespace gsf
