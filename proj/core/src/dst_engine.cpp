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

#include "dstomo/dst_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "dstomo/errors.hpp"

namespace dstomo {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::array<Projector, 2> projectors_of(Basis b) {
  switch (b) {
    case Basis::Diagonal:
      return {Projector::Plus, Projector::Minus};
    case Basis::Computational:
      return {Projector::P0, Projector::P1};
    case Basis::Circular:
      return {Projector::Left, Projector::Right};
  }
  throw_validation("unknown basis");
}

std::string_view to_string(Projector p) {
  switch (p) {
    case Projector::P0: return "0";
    case Projector::P1: return "1";
    case Projector::Plus: return "plus";
    case Projector::Minus: return "minus";
    case Projector::Left: return "L";
    case Projector::Right: return "R";
  }
  return "?";
}

PointerState projector_vector(Projector p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case Projector::P0: return {1.0, 0.0};
    case Projector::P1: return {0.0, 1.0};
    case Projector::Plus: return {kInvSqrt2, kInvSqrt2};
    case Projector::Minus: return {kInvSqrt2, -kInvSqrt2};
    case Projector::Left: return {kInvSqrt2, i * kInvSqrt2};
    case Projector::Right: return {kInvSqrt2, -i * kInvSqrt2};
  }
  throw_validation("unknown projector");
}

void CouplingConfig::validate() const {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi / 2.0) {
    throw_validation("coupling angle must lie in [0, pi/2], got " +
                     std::to_string(theta));
  }
}

PostSelection::PostSelection(const TransverseWavefunction& f)
    : field_(gauge_fixed(f)) {
  const double n = static_cast<double>(f.size());
  const Complex sum = f.amplitude_sum();
  const double norm2 = f.norm_squared();
  // Scale-free: compare |<p0|psi>|^2 against the field's own norm.
  if (!(std::norm(sum) / n > kMinPostSelectionProbability * norm2)) {
    throw_numerical(
        "field has no zero-momentum component (sum of amplitudes vanishes); "
        "post-selection on p = 0 is impossible");
  }
  psi_tilde_ = field_.amplitude_sum().real();
  inv_sqrt_n_ = 1.0 / std::sqrt(n);
}

PointerState PostSelection::pointer(CellIndex cell,
                                    const CouplingConfig& cfg) const {
  cfg.validate();
  if (!field_.grid().contains(cell)) {
    throw_validation("cell (" + std::to_string(cell.ix) + ", " +
                     std::to_string(cell.iy) + ") is outside the grid");
  }
  const Complex psi = field_.at(cell);
  const double c = std::cos(cfg.theta);
  const double s = std::sin(cfg.theta);
  // exp(-i theta P (x) sigma_y) = 1 + P (x) (cos theta - i sin theta sigma_y - 1),
  // and (cos theta - i sin theta sigma_y)|0> = cos theta |0> + sin theta |1>.
  return {(psi_tilde_ + psi * (c - 1.0)) * inv_sqrt_n_,
          psi * s * inv_sqrt_n_};
}

PointerState couple_and_postselect(const TransverseWavefunction& f,
                                   CellIndex cell, const CouplingConfig& cfg) {
  cfg.validate();
  if (!f.grid().contains(cell)) {
    throw_validation("cell is outside the grid");
  }
  return PostSelection(f).pointer(cell, cfg);
}

PointerState dwt_pointer(const TransverseWavefunction& f, CellIndex cell,
                         double theta) {
  return couple_and_postselect(f, cell,
                               {theta, CouplingMode::WeakFirstOrder});
}

ProjectorProbs readout_probs(const PointerState& p) {
  ProjectorProbs out;
  for (Projector proj : kAllProjectors) {
    const PointerState v = projector_vector(proj);
    out[proj] = std::norm(std::conj(v.a0) * p.a0 + std::conj(v.a1) * p.a1);
  }
  return out;
}

std::uint64_t cell_stream_seed(std::uint64_t seed, CellIndex cell) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(cell.ix));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(cell.iy) << 1));
  return h;
}

ProjectorCounts sample_counts(const ProjectorProbs& probs,
                              std::uint64_t photons_per_setting,
                              std::uint64_t stream_seed) {
  ProjectorCounts counts;
  if (photons_per_setting == 0) return counts;
  for (Basis b : kAllBases) {
    const auto [first, second] = projectors_of(b);
    const double p1 = std::max(probs[first], 0.0);
    const double p2 = std::max(probs[second], 0.0);
    const double weight = p1 + p2;
    if (!(weight > 0.0)) continue;

    std::mt19937_64 rng(
        splitmix64(stream_seed ^ (0x100ull + static_cast<std::uint64_t>(b))));
    std::poisson_distribution<std::uint64_t> arrivals(
        static_cast<double>(photons_per_setting) * weight);
    const std::uint64_t total = arrivals(rng);
    std::binomial_distribution<std::uint64_t> split(
        total, std::clamp(p1 / weight, 0.0, 1.0));
    const std::uint64_t n1 = split(rng);
    counts[first] = n1;
    counts[second] = total - n1;
  }
  return counts;
}

std::vector<ReadoutRecord> scan(const TransverseWavefunction& f,
                                const CouplingConfig& cfg,
                                std::uint64_t photons_per_setting,
                                std::uint64_t seed,
                                const ScanOptions& options) {
  cfg.validate();
  const PostSelection post(f);
  const GridSpec& g = f.grid();
  std::vector<ReadoutRecord> records(g.cell_count());

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ReadoutRecord& r = records[i];
      r.cell = g.cell(i);
      r.probs = readout_probs(post.pointer(r.cell, cfg));
      r.photons_per_setting = photons_per_setting;
      if (photons_per_setting > 0) {
        r.counts = sample_counts(r.probs, photons_per_setting,
                                 cell_stream_seed(seed, r.cell));
      }
    }
  };

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, g.ny));
  if (workers <= 1) {
    fill(0, records.size());
    return records;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t rows_per = (g.ny + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t r0 = std::min(g.ny, w * rows_per);
    const std::size_t r1 = std::min(g.ny, r0 + rows_per);
    if (r0 == r1) break;
    pool.emplace_back(fill, r0 * g.nx, r1 * g.nx);
  }
  pool.clear();
  return records;
}

}  // namespace dstomo
