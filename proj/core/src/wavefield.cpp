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

#include "dstomo/wavefield.hpp"

#include <cmath>
#include <random>
#include <string>

#include "dstomo/errors.hpp"
#include "dstomo/numeric.hpp"

namespace dstomo {
namespace {

double wrap_phase(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

}  // namespace

TransverseWavefunction::TransverseWavefunction(GridSpec grid,
                                               std::vector<Complex> amps)
    : grid_(grid), amps_(std::move(amps)) {
  grid_.validate();
  if (amps_.size() != grid_.cell_count()) {
    throw_validation("field has " + std::to_string(amps_.size()) +
                     " amplitudes, grid needs " +
                     std::to_string(grid_.cell_count()));
  }
  for (const Complex& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw_validation("field contains non-finite amplitudes");
    }
  }
}

TransverseWavefunction TransverseWavefunction::zeros(const GridSpec& grid) {
  return {grid, std::vector<Complex>(grid.cell_count())};
}

double TransverseWavefunction::norm_squared() const {
  std::vector<double> sq(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) sq[i] = std::norm(amps_[i]);
  return pairwise_sum(sq);
}

Complex TransverseWavefunction::amplitude_sum() const {
  return pairwise_sum(amps_);
}

double default_waist(const GridSpec& grid) {
  return static_cast<double>(grid.nx) * grid.pitch / 8.0;
}

double best_postselection_tilt(int oam, double waist) {
  if (oam == 0) return 0.0;
  return std::sqrt(2.0 * std::abs(oam)) / waist;
}

TransverseWavefunction make_custom(
    const GridSpec& grid,
    const std::function<Complex(double x, double y)>& amplitude) {
  grid.validate();
  std::vector<Complex> amps(grid.cell_count());
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      amps[grid.index(ix, iy)] = amplitude(grid.x(ix), grid.y(iy));
    }
  }
  return normalize(TransverseWavefunction(grid, std::move(amps)));
}

TransverseWavefunction make_mode(const ModeSpec& spec, const GridSpec& grid) {
  grid.validate();
  if (spec.kind == ModeKind::Custom) {
    throw_validation("custom fields are built with make_custom");
  }
  if (spec.waist && !(std::isfinite(*spec.waist) && *spec.waist > 0.0)) {
    throw_validation("beam waist must be finite and positive");
  }
  if (spec.radial < 0) throw_validation("radial index must be non-negative");
  if (!std::isfinite(spec.center_x) || !std::isfinite(spec.center_y) ||
      !std::isfinite(spec.tilt_x) || !std::isfinite(spec.tilt_y)) {
    throw_validation("mode center and tilt must be finite");
  }

  const double w0 = spec.waist.value_or(default_waist(grid));
  const bool lg = spec.kind == ModeKind::LaguerreGaussian;
  const unsigned abs_l = lg ? static_cast<unsigned>(std::abs(spec.oam)) : 0u;
  const unsigned p = lg ? static_cast<unsigned>(spec.radial) : 0u;
  const int l = lg ? spec.oam : 0;

  return make_custom(grid, [&](double x, double y) {
    const double dx = x - spec.center_x;
    const double dy = y - spec.center_y;
    const double r2 = (dx * dx + dy * dy) / (w0 * w0);
    double mag = std::exp(-r2);
    double phase = spec.tilt_x * x + spec.tilt_y * y;
    if (lg) {
      if (abs_l > 0) mag *= std::pow(std::sqrt(2.0 * r2), abs_l);
      if (p > 0) mag *= std::assoc_laguerre(p, abs_l, 2.0 * r2);
      if (l != 0) phase += l * std::atan2(dy, dx);
    }
    return std::polar(mag, phase);
  });
}

TransverseWavefunction make_smooth_random(const GridSpec& grid,
                                          std::uint64_t seed) {
  grid.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double wx = static_cast<double>(grid.nx) * grid.pitch;
  const double wy = static_cast<double>(grid.ny) * grid.pitch;
  struct Blob {
    double cx, cy, w;
    Complex c;
  };
  std::vector<Blob> blobs(4);
  for (Blob& b : blobs) {
    b.cx = (unit(rng) - 0.5) * 0.5 * wx;
    b.cy = (unit(rng) - 0.5) * 0.5 * wy;
    b.w = (1.0 / 16.0 + unit(rng) / 16.0) * std::min(wx, wy);
    b.c = std::polar(0.3 + 0.7 * unit(rng), 2.0 * kPi * unit(rng));
  }
  const double background_w = std::min(wx, wy) / 5.0;

  return make_custom(grid, [&](double x, double y) {
    Complex v = std::exp(-(x * x + y * y) / (background_w * background_w));
    for (const Blob& b : blobs) {
      const double r2 = ((x - b.cx) * (x - b.cx) + (y - b.cy) * (y - b.cy)) /
                        (b.w * b.w);
      v += b.c * std::exp(-r2);
    }
    return v;
  });
}

TransverseWavefunction apply_vortex_plate(const TransverseWavefunction& f,
                                          int l) {
  if (l == 0) return f;
  const GridSpec& g = f.grid();
  std::vector<Complex> out(f.amps().begin(), f.amps().end());
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const double phi = std::atan2(g.y(iy), g.x(ix));
      out[g.index(ix, iy)] *= std::polar(1.0, l * phi);
    }
  }
  return {g, std::move(out)};
}

TransverseWavefunction normalize(const TransverseWavefunction& f) {
  const double n2 = f.norm_squared();
  if (!(n2 > 0.0)) throw_numerical("cannot normalize an all-zero field");
  const double s = 1.0 / std::sqrt(n2);
  std::vector<Complex> out(f.amps().begin(), f.amps().end());
  for (Complex& a : out) a *= s;
  return {f.grid(), std::move(out)};
}

TransverseWavefunction gauge_fixed(const TransverseWavefunction& f) {
  const Complex sum = f.amplitude_sum();
  if (std::abs(sum) == 0.0) return f;
  const Complex rot = std::conj(sum) / std::abs(sum);
  std::vector<Complex> out(f.amps().begin(), f.amps().end());
  for (Complex& a : out) a *= rot;
  return {f.grid(), std::move(out)};
}

double winding_number(std::span<const double> phase, const GridSpec& grid,
                      CellIndex center, std::size_t radius) {
  if (phase.size() != grid.cell_count()) {
    throw_validation("phase map size does not match grid");
  }
  if (radius == 0 || center.ix < radius || center.iy < radius ||
      center.ix + radius >= grid.nx || center.iy + radius >= grid.ny) {
    throw_validation("winding loop does not fit inside the grid");
  }
  const auto r = static_cast<long>(radius);
  const auto cx = static_cast<long>(center.ix);
  const auto cy = static_cast<long>(center.iy);

  // Counter-clockwise with x right and y up.
  std::vector<std::size_t> loop;
  for (long dy = -r; dy < r; ++dy) loop.push_back(grid.index(cx + r, cy + dy));
  for (long dx = r; dx > -r; --dx) loop.push_back(grid.index(cx + dx, cy + r));
  for (long dy = r; dy > -r; --dy) loop.push_back(grid.index(cx - r, cy + dy));
  for (long dx = -r; dx < r; ++dx) loop.push_back(grid.index(cx + dx, cy - r));

  std::vector<double> steps(loop.size());
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const std::size_t next = loop[(i + 1) % loop.size()];
    steps[i] = wrap_phase(phase[next] - phase[loop[i]]);
  }
  return pairwise_sum(steps) / (2.0 * kPi);
}

std::vector<double> phase_of(const TransverseWavefunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = std::arg(f[i]);
    out[i] = a <= -kPi ? kPi : a;
  }
  return out;
}

}  // namespace dstomo
