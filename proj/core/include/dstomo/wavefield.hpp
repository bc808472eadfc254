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

#ifndef DSTOMO_WAVEFIELD_HPP_
#define DSTOMO_WAVEFIELD_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dstomo/grid.hpp"

namespace dstomo {

using Complex = std::complex<double>;

// Complex amplitudes psi(x, y) of one photon's transverse state, sampled on a
// grid. Amplitudes are dimensionless per-cell coefficients, so a normalized
// field has sum |psi|^2 == 1. Row-major storage: y outer, x inner.
//
// Values are immutable after construction and every entry is finite.
class TransverseWavefunction {
 public:
  // Throws ValidationError on an invalid grid, a size mismatch or non-finite
  // amplitudes.
  TransverseWavefunction(GridSpec grid, std::vector<Complex> amps);

  // All-zero field.
  static TransverseWavefunction zeros(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> amps() const { return amps_; }
  std::size_t size() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  const Complex& at(CellIndex c) const { return amps_[grid_.index(c)]; }

  // Sum of |psi|^2.
  double norm_squared() const;
  // Sum of psi over all cells (the zero-momentum overlap, unnormalized).
  Complex amplitude_sum() const;

 private:
  GridSpec grid_;
  std::vector<Complex> amps_;
};

enum class ModeKind { Gaussian, LaguerreGaussian, Custom };

// Analytic beam description. Gaussian: exp(-r^2 / w0^2). Laguerre-Gaussian:
// (sqrt(2) r / w0)^|l| L_p^|l|(2 r^2 / w0^2) exp(-r^2 / w0^2) exp(i l phi).
//
// `tilt_*` adds a transverse wavevector exp(i (kx x + ky y)) on top of the
// mode. It leaves |psi|^2 untouched but moves the beam's momentum
// distribution; a centred vortex mode without tilt has no zero-momentum
// component and cannot be post-selected.
struct ModeSpec {
  ModeKind kind = ModeKind::Gaussian;
  std::optional<double> waist;  // w0 in meters; unset selects default_waist()
  int oam = 0;               // l, LG only
  int radial = 0;            // p, LG only
  double center_x = 0.0;     // meters, relative to grid center
  double center_y = 0.0;
  double tilt_x = 0.0;       // rad / m
  double tilt_y = 0.0;       // rad / m
};

// nx * pitch / 8.
double default_waist(const GridSpec& grid);

// Tilt magnitude (rad/m) that maximizes the zero-momentum amplitude of an
// LG_{0,l} mode of waist w0: sqrt(2 |l|) / w0. Zero for l == 0.
double best_postselection_tilt(int oam, double waist);

// Normalized field for `spec`. Throws ValidationError for a Custom kind (use
// make_custom), a non-finite or non-positive waist, a negative radial index or
// an invalid grid.
TransverseWavefunction make_mode(const ModeSpec& spec, const GridSpec& grid);

// Samples `amplitude(x, y)` at every cell center and normalizes.
TransverseWavefunction make_custom(
    const GridSpec& grid,
    const std::function<Complex(double x, double y)>& amplitude);

// Smooth random field: a few complex Gaussian blobs on a broad real
// background, so the zero-momentum amplitude stays well away from zero.
// Deterministic in `seed`. Normalized.
TransverseWavefunction make_smooth_random(const GridSpec& grid,
                                          std::uint64_t seed);

// Multiplies every amplitude by exp(i l phi), phi = atan2(y, x) about the
// grid center.
TransverseWavefunction apply_vortex_plate(const TransverseWavefunction& f,
                                          int l);

// Rescales to unit norm. Throws NumericalError for an all-zero field.
TransverseWavefunction normalize(const TransverseWavefunction& f);

// Multiplies the field by exp(-i arg(sum psi)), so the amplitude sum becomes
// real and non-negative. Returns the field unchanged if the sum is zero.
TransverseWavefunction gauge_fixed(const TransverseWavefunction& f);

// Winding number of a wrapped phase map around the square loop of Chebyshev
// radius `radius` cells centred on `center`: the sum of wrapped phase steps
// along the loop divided by 2 pi. Throws ValidationError if the loop leaves
// the grid or radius is zero.
double winding_number(std::span<const double> phase, const GridSpec& grid,
                      CellIndex center, std::size_t radius);

// Phase angles arg(psi) of a field, in (-pi, pi].
std::vector<double> phase_of(const TransverseWavefunction& f);

}  // namespace dstomo

#endif  // DSTOMO_WAVEFIELD_HPP_
