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

#ifndef GSF_GF2_H
#define GSF_GF2_H

#include <cstdint>
#include <utility>
#include <vector>

#include "gsf/graph.h"

namespace gsf {

/// Dense matrix over GF(2), at most 64x64, one machine word per row.
class BitMatrix {
   public:
    static constexpr size_t MAX_DIM = 64;

    BitMatrix(size_t rows, size_t cols);
    static BitMatrix identity(size_t k);
    static BitMatrix from_rows(size_t cols, const std::vector<std::uint64_t> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool value);
    std::uint64_t row(size_t r) const {
        return data_[r];
    }
    void add_row(size_t target, size_t source) {
        data_[target] ^= data_[source];
    }
    void swap_rows(size_t a, size_t b) {
        std::swap(data_[a], data_[b]);
    }

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix &other) const;
    bool operator==(const BitMatrix &other) const = default;

    bool is_rref() const;

   private:
    void check(size_t r, size_t c) const;

    size_t rows_;
    size_t cols_;
    std::vector<std::uint64_t> data_;
};

size_t rank(const BitMatrix &m);

struct RrefResult {
    BitMatrix reduced;
    /// transform * input == reduced.
    BitMatrix transform;
};
RrefResult rref_with_transform(const BitMatrix &m);

/// Rank of a list of words viewed as GF(2) row vectors.
size_t rank_of_rows(std::vector<std::uint64_t> rows);

/// GF(2) rank of the adjacency submatrix with rows `side` and columns V \ side.
size_t cut_rank(const Graph &g, VertexSet side);

}  // namespace gsf

#endif
