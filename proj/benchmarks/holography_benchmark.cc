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

#include "dstomo/holography.hpp"

namespace dstomo {
namespace {

PropagationSpec spec_for(const GridSpec& g, KernelKind kernel, int pad) {
  PropagationSpec s;
  s.kernel = kernel;
  s.pad_factor = pad;
  s.distance = 1.0;
  s.distance = 1.01 * min_sampled_distance(g, s);
  return s;
}

void BM_PropagatorSetup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec g{n, n, 125e-6};
  const auto spec = spec_for(g, KernelKind::FresnelParaxial, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Propagator(g, spec, Direction::Forward));
  }
}
BENCHMARK(BM_PropagatorSetup)->Arg(64)->Arg(128)->Arg(256);

void BM_PropagateApply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int pad = static_cast<int>(state.range(1));
  const GridSpec g{n, n, 125e-6};
  const Propagator p(g, spec_for(g, KernelKind::FresnelParaxial, pad), Direction::Forward);
  const auto f = make_mode({}, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.apply(f));
  }
}
BENCHMARK(BM_PropagateApply)->Args({64, 2})->Args({128, 2})->Args({128, 4})->Args({256, 2});

void BM_RoundTrip(benchmark::State& state) {
  const GridSpec g{128, 128, 125e-6};
  const auto spec = spec_for(g, KernelKind::FresnelParaxial, 2);
  const auto f = make_mode({}, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_inverse(propagate_forward(f, spec), spec));
  }
}
BENCHMARK(BM_RoundTrip);

}  // namespace
}  // namespace dstomo
