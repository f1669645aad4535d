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

#include "gsf/graph6.h"

#include "gsf/errors.h"

namespace gsf {

namespace {

constexpr std::string_view HEADER = ">>graph6<<";

// Bit order follows the format: x(0,1), x(0,2), x(1,2), x(0,3), ... (column-major upper triangle).
size_t data_bytes(size_t n) {
    return (n * (n - 1) / 2 + 5) / 6;
}

}  // namespace

bool looks_like_graph6(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            return false;
        }
    }
    return true;
}

Graph parse_graph6(std::string_view text) {
    size_t base = 0;
    if (text.starts_with(HEADER)) {
        base = HEADER.size();
    }
    std::string_view body = text.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) {
        body.remove_suffix(1);
    }
    if (body.empty()) {
        throw ParseError("empty graph6 string", base);
    }
    for (size_t i = 0; i < body.size(); i++) {
        if (body[i] < 63 || body[i] > 126) {
            throw ParseError("byte outside the graph6 range 63..126", base + i);
        }
    }
    if (body[0] == 126) {
        throw ParseError("graph6 vertex count exceeds " + std::to_string(MAX_VERTICES), base);
    }
    size_t n = static_cast<size_t>(body[0] - 63);
    if (n == 0) {
        throw ParseError("graph6 graph with zero vertices", base);
    }
    if (n > MAX_VERTICES) {
        throw ParseError("graph6 vertex count exceeds " + std::to_string(MAX_VERTICES), base);
    }
    size_t expected = 1 + data_bytes(n);
    if (body.size() != expected) {
        throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " bytes for n=" +
                             std::to_string(n),
                         base + std::min(body.size(), expected));
    }
    Graph g(n);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            unsigned byte = static_cast<unsigned>(body[1 + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1u) {
                g.add_edge(i, j);
            }
        }
    }
    size_t total = n * (n - 1) / 2;
    if (total % 6 != 0) {
        unsigned last = static_cast<unsigned>(body.back() - 63);
        unsigned pad_mask = (1u << (6 - total % 6)) - 1u;
        if (last & pad_mask) {
            throw ParseError("nonzero graph6 padding bits", base + body.size() - 1);
        }
    }
    return g;
}

std::string write_graph6(const Graph &g) {
    size_t n = g.num_vertices();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    std::string data(data_bytes(n), 0);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            if (g.has_edge(i, j)) {
                data[k / 6] = static_cast<char>(data[k / 6] | (1 << (5 - k % 6)));
            }
        }
    }
    for (char &c : data) {
        c = static_cast<char>(c + 63);
    }
    return out + data;
}

}  // namespace gsf
