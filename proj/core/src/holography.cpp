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

#include "dstomo/holography.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dstomo/errors.hpp"
#include "dstomo/numeric.hpp"

namespace dstomo {
namespace {

const PropagationSpec& checked(const GridSpec& g, const PropagationSpec& s) {
  g.validate();
  s.validate();
  return s;
}

double max_offset(const GridSpec& g) {
  return static_cast<double>(std::max(g.nx, g.ny) - 1) * g.pitch;
}

}  // namespace

std::string_view to_string(KernelKind k) {
  return k == KernelKind::FeynmanExact ? "feynman" : "fresnel";
}

double PropagationSpec::wavenumber() const { return 2.0 * kPi / wavelength; }

void PropagationSpec::validate() const {
  if (!std::isfinite(wavelength) || wavelength <= 0.0) {
    throw_validation("wavelength must be finite and positive");
  }
  if (!std::isfinite(distance) || distance <= 0.0) {
    throw_validation("propagation distance must be finite and positive");
  }
  if (pad_factor < 2) throw_validation("pad factor must be at least 2");
}

bool paraxial_ok(const GridSpec& grid, const PropagationSpec& spec) {
  return spec.distance >= kParaxialRatio * grid.extent();
}

double kernel_phase_step(const GridSpec& grid, const PropagationSpec& spec) {
  const double k = spec.wavenumber();
  const double x = max_offset(grid);
  const double slope =
      spec.kernel == KernelKind::FresnelParaxial
          ? k * x / spec.distance
          : k * x / std::sqrt(x * x + spec.distance * spec.distance);
  return slope * grid.pitch;
}

double min_sampled_distance(const GridSpec& grid, const PropagationSpec& spec) {
  const double k = spec.wavenumber();
  const double x = max_offset(grid);
  const double a = k * x * grid.pitch / kPi;
  if (spec.kernel == KernelKind::FresnelParaxial) return a;
  return a > x ? std::sqrt(a * a - x * x) : 0.0;
}

Propagator::Propagator(const GridSpec& grid, const PropagationSpec& spec,
                       Direction direction)
    : grid_(grid),
      spec_(checked(grid, spec)),
      direction_(direction),
      mx_(static_cast<std::size_t>(spec_.pad_factor) * grid.nx),
      my_(static_cast<std::size_t>(spec_.pad_factor) * grid.ny),
      fft_(mx_, my_) {
  if (direction == Direction::Inverse &&
      spec.kernel != KernelKind::FresnelParaxial) {
    throw_validation(
        "inverse propagation is defined for the paraxial kernel only");
  }
  if (spec.kernel == KernelKind::FresnelParaxial && !paraxial_ok(grid, spec)) {
    throw_validation("paraxial kernel needs distance >= " +
                     std::to_string(kParaxialRatio) +
                     " x transverse extent (" +
                     std::to_string(kParaxialRatio * grid.extent()) + " m)");
  }
  if (kernel_phase_step(grid, spec) > kPi) {
    throw_numerical("propagation kernel is undersampled: distance must be >= " +
                    std::to_string(min_sampled_distance(grid, spec)) + " m");
  }

  kernel_spectrum_.assign(mx_ * my_, Complex{});
  const double area = grid.pitch * grid.pitch;
  const auto reach_x = static_cast<long>(grid.nx) - 1;
  const auto reach_y = static_cast<long>(grid.ny) - 1;
  for (std::size_t jy = 0; jy < my_; ++jy) {
    const long dy = jy < my_ / 2 ? static_cast<long>(jy)
                                 : static_cast<long>(jy) - static_cast<long>(my_);
    if (std::abs(dy) > reach_y) continue;
    for (std::size_t jx = 0; jx < mx_; ++jx) {
      const long dx = jx < mx_ / 2
                          ? static_cast<long>(jx)
                          : static_cast<long>(jx) - static_cast<long>(mx_);
      if (std::abs(dx) > reach_x) continue;
      kernel_spectrum_[jy * mx_ + jx] =
          kernel(static_cast<double>(dx) * grid.pitch,
                 static_cast<double>(dy) * grid.pitch) *
          area;
    }
  }
  fft_.forward(kernel_spectrum_);
  const double inv_size = 1.0 / static_cast<double>(mx_ * my_);
  for (Complex& c : kernel_spectrum_) c *= inv_size;
}

Complex Propagator::kernel(double dx, double dy) const {
  const double k = spec_.wavenumber();
  const double lambda = spec_.wavelength;
  const double d = spec_.distance;
  const double s2 = dx * dx + dy * dy;
  const Complex i(0.0, 1.0);
  if (direction_ == Direction::Inverse) {
    // exp(-ikD) exp(-ik s^2 / 2D) / (-i lambda D)
    return std::polar(1.0, -(k * d + k * s2 / (2.0 * d))) / (-i * lambda * d);
  }
  if (spec_.kernel == KernelKind::FresnelParaxial) {
    return std::polar(1.0, k * d + k * s2 / (2.0 * d)) / (i * lambda * d);
  }
  const double rho = std::sqrt(s2 + d * d);
  // k (rho - D) written without cancellation.
  const double excess = s2 / (rho + d);
  return std::polar(1.0 / rho, k * d + k * excess) / (i * lambda);
}

TransverseWavefunction Propagator::apply(const TransverseWavefunction& f) const {
  if (!same_geometry(f.grid(), grid_)) {
    throw_validation("field grid does not match the propagator grid");
  }
  std::vector<Complex> work(mx_ * my_, Complex{});
  for (std::size_t iy = 0; iy < grid_.ny; ++iy) {
    std::copy_n(f.amps().begin() + static_cast<std::ptrdiff_t>(iy * grid_.nx),
                grid_.nx,
                work.begin() + static_cast<std::ptrdiff_t>(iy * mx_));
  }
  fft_.forward(work);
  for (std::size_t i = 0; i < work.size(); ++i) work[i] *= kernel_spectrum_[i];
  fft_.inverse(work);

  std::vector<Complex> out(grid_.cell_count());
  for (std::size_t iy = 0; iy < grid_.ny; ++iy) {
    std::copy_n(work.begin() + static_cast<std::ptrdiff_t>(iy * mx_), grid_.nx,
                out.begin() + static_cast<std::ptrdiff_t>(iy * grid_.nx));
  }
  return {grid_, std::move(out)};
}

TransverseWavefunction propagate_forward(const TransverseWavefunction& f,
                                         const PropagationSpec& spec) {
  return Propagator(f.grid(), spec, Direction::Forward).apply(f);
}

TransverseWavefunction propagate_inverse(const TransverseWavefunction& f_d,
                                         const PropagationSpec& spec) {
  return Propagator(f_d.grid(), spec, Direction::Inverse).apply(f_d);
}

ObjectReconstruction reconstruct_object(
    const TransverseWavefunction& measured_d,
    const TransverseWavefunction& known_input, const PropagationSpec& spec,
    const ObjectOptions& options) {
  if (!same_geometry(measured_d.grid(), known_input.grid())) {
    throw_validation("measured and input fields are on different grids");
  }
  if (!(options.mask_threshold >= 0.0)) {
    throw_validation("mask threshold must be non-negative");
  }
  const TransverseWavefunction object_field =
      propagate_inverse(measured_d, spec);

  double peak = 0.0;
  for (const Complex& a : known_input.amps()) peak = std::max(peak, std::abs(a));
  const double cut = options.mask_threshold * peak;

  ObjectReconstruction out;
  out.grid = known_input.grid();
  out.transmission.assign(known_input.size(), Complex{});
  out.valid.assign(known_input.size(), 0);
  std::vector<Complex> overlap;
  for (std::size_t i = 0; i < known_input.size(); ++i) {
    const double mag = std::abs(known_input[i]);
    if (mag > 0.0 && mag >= cut) {
      out.valid[i] = 1;
      out.transmission[i] = object_field[i] / known_input[i];
      overlap.push_back(std::conj(known_input[i]) * object_field[i]);
      ++out.valid_count;
    }
  }
  if (out.valid_count == 0) {
    throw_numerical("illumination is zero everywhere: empty object mask");
  }
  if (options.align_global_phase) {
    const Complex s = pairwise_sum(overlap);
    if (std::abs(s) > 0.0) {
      const Complex rot = std::conj(s) / std::abs(s);
      for (Complex& t : out.transmission) t *= rot;
    }
  }
  return out;
}

double masked_correlation(std::span<const double> a, std::span<const double> b,
                          std::span<const std::uint8_t> mask) {
  if (a.size() != b.size() || a.size() != mask.size()) {
    throw_validation("correlation inputs differ in size");
  }
  std::vector<double> va, vb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask[i] != 0) {
      va.push_back(a[i]);
      vb.push_back(b[i]);
    }
  }
  if (va.empty()) return 0.0;
  const double n = static_cast<double>(va.size());
  const double ma = pairwise_sum(va) / n;
  const double mb = pairwise_sum(vb) / n;
  std::vector<double> cab(va.size()), caa(va.size()), cbb(va.size());
  for (std::size_t i = 0; i < va.size(); ++i) {
    cab[i] = (va[i] - ma) * (vb[i] - mb);
    caa[i] = (va[i] - ma) * (va[i] - ma);
    cbb[i] = (vb[i] - mb) * (vb[i] - mb);
  }
  const double den = std::sqrt(pairwise_sum(caa) * pairwise_sum(cbb));
  return den > 0.0 ? pairwise_sum(cab) / den : 0.0;
}

double relative_l2(const TransverseWavefunction& a,
                   const TransverseWavefunction& b) {
  if (a.size() != b.size()) throw_validation("fields differ in size");
  std::vector<double> diff(a.size()), ref(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff[i] = std::norm(a[i] - b[i]);
    ref[i] = std::norm(b[i]);
  }
  const double den = pairwise_sum(ref);
  if (!(den > 0.0)) throw_numerical("reference field is zero");
  return std::sqrt(pairwise_sum(diff) / den);
}

}  // namespace dstomo
