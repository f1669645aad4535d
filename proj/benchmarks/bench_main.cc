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

#include <benchmark/benchmark.h>

#include <random>

#include "gsf/canonical.h"
#include "gsf/classdb.h"
#include "gsf/compiler.h"
#include "gsf/generate.h"
#include "gsf/invariants.h"
#include "gsf/orbit.h"
#include "gsf/schedule.h"
#include "gsf/tableau.h"

using namespace gsf;

namespace {

std::vector<Graph> random_graphs(size_t n, size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Graph> out;
    while (out.size() < count) {
        Graph g(n);
        for (size_t a = 0; a < n; a++) {
            for (size_t b = a + 1; b < n; b++) {
                if (coin(rng)) {
                    g.add_edge(a, b);
                }
            }
        }
        if (is_connected(g)) {
            out.push_back(g);
        }
    }
    return out;
}

void BM_canonical_form(benchmark::State &state) {
    auto graphs = random_graphs(static_cast<size_t>(state.range(0)), 64, 1);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_canonical_form)->DenseRange(6, 16, 2);

void BM_canonical_form_symmetric(benchmark::State &state) {
    Graph g = Graph::cycle(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_canonical_form_symmetric)->DenseRange(6, 16, 5);

void BM_enumerate_orbit(benchmark::State &state) {
    Graph g = Graph::path(static_cast<size_t>(state.range(0)));
    OrbitOptions opts{.record_moves = false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_orbit(g, opts).size());
    }
}
BENCHMARK(BM_enumerate_orbit)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

void BM_chromatic_index(benchmark::State &state) {
    auto graphs = random_graphs(static_cast<size_t>(state.range(0)), 64, 2);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_index(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_chromatic_index)->DenseRange(6, 12, 2);

void BM_rank_indexes(benchmark::State &state) {
    auto graphs = random_graphs(static_cast<size_t>(state.range(0)), 16, 3);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_indexes(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_rank_indexes)->DenseRange(8, 16, 4);

void BM_compile_min_depth(benchmark::State &state) {
    auto graphs = random_graphs(static_cast<size_t>(state.range(0)), 16, 4);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile(graphs[i++ % graphs.size()], Strategy::MinDepth));
    }
}
BENCHMARK(BM_compile_min_depth)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

void BM_tableau_equality(benchmark::State &state) {
    auto graphs = random_graphs(16, 16, 5);
    size_t i = 0;
    for (auto _ : state) {
        const Graph &g = graphs[i++ % graphs.size()];
        benchmark::DoNotOptimize(tableaux_equal(graph_state_tableau(g), graph_state_tableau(g)));
    }
}
BENCHMARK(BM_tableau_equality);

void BM_census(benchmark::State &state) {
    for (auto _ : state) {
        size_t count = 0;
        for_each_connected_graph(static_cast<size_t>(state.range(0)), [&](const Graph &) { count++; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_census)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

void BM_build_database(benchmark::State &state) {
    BuildOptions opts{.workers = 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_database(static_cast<size_t>(state.range(0)), opts).size());
    }
}
BENCHMARK(BM_build_database)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
