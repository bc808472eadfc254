// Copyright 2026 The dstomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dstomo/dst_engine.hpp"
#include "dstomo/reconstruct.hpp"

namespace dstomo {
namespace {

void BM_ScanNoiseless(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = make_smooth_random({n, n, 125e-6}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(f, {}, 0, 0, {1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}
BENCHMARK(BM_ScanNoiseless)->Arg(32)->Arg(64)->Arg(128);

void BM_ScanSampled(benchmark::State& state) {
  const GridSpec g{64, 64, 125e-6};
  const auto f = make_mode({}, g);
  const auto budget = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(f, {}, budget, seed++, {1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.cell_count()));
}
BENCHMARK(BM_ScanSampled)->Arg(1000)->Arg(1000000);

void BM_ScanWorkers(benchmark::State& state) {
  const GridSpec g{128, 128, 125e-6};
  const auto f = make_mode({}, g);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(f, {}, 100000, 3, {workers}));
  }
}
BENCHMARK(BM_ScanWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_ReconstructDst(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec g{n, n, 125e-6};
  const auto records = scan(make_smooth_random(g, 2), {}, 0, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_dst(g, records));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}
BENCHMARK(BM_ReconstructDst)->Arg(64)->Arg(128);

}  // namespace
}  // namespace dstomo
