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

#ifndef DSTOMO_HOLOGRAPHY_HPP_
#define DSTOMO_HOLOGRAPHY_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dstomo/fft2d.hpp"
#include "dstomo/wavefield.hpp"

namespace dstomo {

enum class KernelKind {
  // (1 / i lambda) exp(i k rho) / rho, rho = sqrt(dx^2 + dy^2 + D^2)
  FeynmanExact,
  // exp(i k D) / (i lambda D) exp(i k (dx^2 + dy^2) / 2D)
  FresnelParaxial,
};
std::string_view to_string(KernelKind k);

enum class Direction { Forward, Inverse };

struct PropagationSpec {
  double wavelength = 808e-9;  // m
  double distance = 1.0;       // m, object plane to detection plane
  KernelKind kernel = KernelKind::FresnelParaxial;
  int pad_factor = 2;          // FFT size per axis = pad_factor * n

  double wavenumber() const;
  // Throws ValidationError unless wavelength and distance are finite and
  // positive and pad_factor >= 2.
  void validate() const;
};

// D >= 10 x the grid's largest side.
inline constexpr double kParaxialRatio = 10.0;
bool paraxial_ok(const GridSpec& grid, const PropagationSpec& spec);

// Largest local spatial frequency of the kernel over its support (offsets up
// to n - 1 cells), times the pitch. Must not exceed pi.
double kernel_phase_step(const GridSpec& grid, const PropagationSpec& spec);

// Smallest distance for which the kernel is sampled below Nyquist on `grid`.
double min_sampled_distance(const GridSpec& grid, const PropagationSpec& spec);

// Convolution with a sampled kernel, cached for one grid and spec.
//
// The kernel is sampled at cell offsets |dx|, |dy| <= n - 1 (the offsets that
// couple two cells of the grid), scaled by pitch^2, and applied by FFT on a
// zero-padded pad_factor * n grid. Output lives on the input grid.
class Propagator {
 public:
  // Throws ValidationError for an invalid spec, a paraxial violation with the
  // Fresnel kernel or an inverse Feynman request; NumericalError when the
  // kernel would alias (kernel_phase_step > pi).
  Propagator(const GridSpec& grid, const PropagationSpec& spec,
             Direction direction);

  TransverseWavefunction apply(const TransverseWavefunction& f) const;

  // Continuous kernel value at a transverse offset (meters), no pitch^2.
  Complex kernel(double dx, double dy) const;

  const GridSpec& grid() const { return grid_; }

 private:
  GridSpec grid_;
  PropagationSpec spec_;
  Direction direction_;
  std::size_t mx_ = 0;
  std::size_t my_ = 0;
  Fft2d fft_;
  std::vector<Complex> kernel_spectrum_;
};

// Object plane -> detection plane with spec.kernel.
TransverseWavefunction propagate_forward(const TransverseWavefunction& f,
                                         const PropagationSpec& spec);

// Detection plane -> object plane with the paraxial inverse kernel
// exp(-i k D) / (-i lambda D) exp(-i k (dx^2 + dy^2) / 2D). FresnelParaxial
// only.
TransverseWavefunction propagate_inverse(const TransverseWavefunction& f_d,
                                         const PropagationSpec& spec);

struct ObjectOptions {
  // Cells with |psi_i| >= threshold * max |psi_i| are reconstructed.
  double mask_threshold = 0.1;
  // Remove the unobservable global phase: rotate t so that
  // sum_mask conj(psi_i) psi_o is real and positive.
  bool align_global_phase = true;
};

// Thin object t(x, y) with psi_o = t psi_i.
struct ObjectReconstruction {
  GridSpec grid;
  std::vector<Complex> transmission;  // 0 where the mask is false
  std::vector<std::uint8_t> valid;
  std::size_t valid_count = 0;
};

// Back-propagates the measured detection-plane field and divides by the
// known illumination on the mask. Throws ValidationError on grid mismatch,
// NumericalError if the mask is empty.
ObjectReconstruction reconstruct_object(
    const TransverseWavefunction& measured_d,
    const TransverseWavefunction& known_input, const PropagationSpec& spec,
    const ObjectOptions& options = {});

// Pearson correlation of a and b over cells where mask != 0. Zero if either
// side is constant there.
double masked_correlation(std::span<const double> a, std::span<const double> b,
                          std::span<const std::uint8_t> mask);

// ||a - b|| / ||b||.
double relative_l2(const TransverseWavefunction& a,
                   const TransverseWavefunction& b);

}  // namespace dstomo

#endif  // DSTOMO_HOLOGRAPHY_HPP_
