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

#include <bit>

#include "gsf/errors.h"

namespace gsf {

BitMatrix::BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    if (rows > MAX_DIM || cols > MAX_DIM) {
        throw ArgumentError("BitMatrix dimensions are limited to 64x64");
    }
}

BitMatrix BitMatrix::identity(size_t k) {
    BitMatrix m(k, k);
    for (size_t i = 0; i < k; i++) {
        m.data_[i] = std::uint64_t{1} << i;
    }
    return m;
}

BitMatrix BitMatrix::from_rows(size_t cols, const std::vector<std::uint64_t> &rows) {
    BitMatrix m(rows.size(), cols);
    std::uint64_t mask = cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r] & ~mask) {
            throw ArgumentError("row has bits beyond the column count");
        }
        m.data_[r] = rows[r];
    }
    return m;
}

void BitMatrix::check(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw ArgumentError("BitMatrix index out of range");
    }
}

bool BitMatrix::get(size_t r, size_t c) const {
    check(r, c);
    return (data_[r] >> c) & 1u;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    check(r, c);
    if (value) {
        data_[r] |= std::uint64_t{1} << c;
    } else {
        data_[r] &= ~(std::uint64_t{1} << c);
    }
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        std::uint64_t bits = data_[r];
        while (bits) {
            size_t c = static_cast<size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            t.data_[c] |= std::uint64_t{1} << r;
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (cols_ != other.rows_) {
        throw ArgumentError("BitMatrix product dimension mismatch");
    }
    BitMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        std::uint64_t bits = data_[r];
        std::uint64_t acc = 0;
        while (bits) {
            size_t k = static_cast<size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            acc ^= other.data_[k];
        }
        out.data_[r] = acc;
    }
    return out;
}

// Pivot columns are taken in increasing column order.
bool BitMatrix::is_rref() const {
    int last_pivot = -1;
    bool seen_zero = false;
    std::uint64_t pivots = 0;
    for (size_t r = 0; r < rows_; r++) {
        if (data_[r] == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) {
            return false;
        }
        int pivot = std::countr_zero(data_[r]);
        if (pivot <= last_pivot) {
            return false;
        }
        last_pivot = pivot;
        pivots |= std::uint64_t{1} << pivot;
    }
    for (size_t r = 0; r < rows_; r++) {
        if (data_[r] == 0) {
            continue;
        }
        std::uint64_t own = std::uint64_t{1} << std::countr_zero(data_[r]);
        if ((data_[r] & pivots) != own) {
            return false;
        }
    }
    return true;
}

size_t rank_of_rows(std::vector<std::uint64_t> rows) {
    size_t r = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i] == 0) {
            continue;
        }
        std::uint64_t pivot = rows[i] & -rows[i];
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (rows[j] & pivot) {
                rows[j] ^= rows[i];
            }
        }
        r++;
    }
    return r;
}

size_t rank(const BitMatrix &m) {
    std::vector<std::uint64_t> rows(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        rows[r] = m.row(r);
    }
    return rank_of_rows(std::move(rows));
}

RrefResult rref_with_transform(const BitMatrix &m) {
    RrefResult out{m, BitMatrix::identity(m.rows())};
    size_t next = 0;
    for (size_t c = 0; c < m.cols() && next < m.rows(); c++) {
        std::uint64_t bit = std::uint64_t{1} << c;
        size_t pivot = next;
        while (pivot < m.rows() && !(out.reduced.row(pivot) & bit)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        out.reduced.swap_rows(pivot, next);
        out.transform.swap_rows(pivot, next);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next && (out.reduced.row(r) & bit)) {
                out.reduced.add_row(r, next);
                out.transform.add_row(r, next);
            }
        }
        next++;
    }
    return out;
}

size_t cut_rank(const Graph &g, VertexSet side) {
    VertexSet all = all_vertices(g.num_vertices());
    side &= all;
    VertexSet other = all & static_cast<VertexSet>(~side);
    // XOR basis indexed by leading bit; rows are restricted on the fly.
    std::array<VertexSet, MAX_VERTICES> basis{};
    size_t r = 0;
    VertexSet rest = side;
    while (rest) {
        size_t v = static_cast<size_t>(std::countr_zero(rest));
        rest &= static_cast<VertexSet>(rest - 1);
        VertexSet row = g.neighbors(v) & other;
        while (row) {
            size_t lead = static_cast<size_t>(std::bit_width(static_cast<unsigned>(row)) - 1);
            if (basis[lead] == 0) {
                basis[lead] = row;
                r++;
                break;
            }
            row ^= basis[lead];
        }
    }
    return r;
}

}  // namespace gsf
