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

#ifndef DSTOMO_RECONSTRUCT_HPP_
#define DSTOMO_RECONSTRUCT_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dstomo/dst_engine.hpp"
#include "dstomo/wavefield.hpp"

namespace dstomo {

enum class Estimator { DST, DWT };
std::string_view to_string(Estimator e);

// How the gauge constant psi~ = sum psi is obtained. Either it is known
// (simulation oracle) or it is fixed from the data by requiring the
// reconstructed density to sum to one.
struct PsiTildeMode {
  std::optional<double> known;

  static PsiTildeMode oracle(double psi_tilde) { return {psi_tilde}; }
  static PsiTildeMode normalized() { return {}; }
};

// Bit flags in ReconstructionResult::empty_bases: a basis whose sampled
// counts were all zero at that cell. Its probabilities are taken as 0.
inline constexpr std::uint8_t kEmptyDiagonal = 1u << 0;
inline constexpr std::uint8_t kEmptyComputational = 1u << 1;
inline constexpr std::uint8_t kEmptyCircular = 1u << 2;

struct ReconstructionResult {
  GridSpec grid;
  std::vector<double> re_map;
  std::vector<double> im_map;
  std::vector<double> density_map;  // re^2 + im^2
  std::vector<double> phase_map;    // atan2(im, re), in (-pi, pi]
  std::vector<std::uint8_t> empty_bases;
  double psi_tilde = 0.0;
  Estimator mode = Estimator::DST;

  TransverseWavefunction field() const;
};

struct QualityReport {
  double r_square = 0.0;
  double fidelity = 0.0;
  double rmse_re = 0.0;
  double rmse_im = 0.0;
};

// Exact inversion of the strong-coupling readout,
//
//   psi~ Re psi = N (P+ - P-) / (2 sin t) + N (1 - cos t) P1 / sin^2 t
//   psi~ Im psi = N (PL - PR) / (2 sin t)
//
// which for t = pi/2 is (N/2)(P+ + 2 P1 - P-) and (N/2)(PL - PR).
//
// Records with counts use count / budget as probabilities, so the noiseless
// and sampled paths share the same arithmetic. Records must cover every
// cell of `grid` exactly once. Throws ValidationError on missing, duplicate
// or out-of-range cells and on theta outside (0, pi/2]; NumericalError on
// non-finite inputs or a non-positive psi~.
ReconstructionResult reconstruct_dst(
    const GridSpec& grid, const std::vector<ReadoutRecord>& records,
    PsiTildeMode psi_tilde_mode = PsiTildeMode::normalized(),
    double theta = kPi / 2.0);

// First-order (weak-value) inversion: psi~ Re psi = N (P+ - P-) / (2 theta),
// psi~ Im psi = N (PL - PR) / (2 theta). Biased for finite theta.
ReconstructionResult reconstruct_dwt(
    const GridSpec& grid, const std::vector<ReadoutRecord>& records,
    double theta, PsiTildeMode psi_tilde_mode = PsiTildeMode::normalized());

// r_square: 1 - SS_res / SS_tot between reconstructed and ideal densities
// (ideal normalized first). fidelity: |<ideal|rec>|^2 / (|ideal|^2 |rec|^2).
// rmse_*: against the ideal field in the psi~-real gauge. Throws
// ValidationError on a grid mismatch.
QualityReport score(const ReconstructionResult& rec,
                    const TransverseWavefunction& ideal);

// Density-only R^2, exposed for shuffled-map baselines.
double r_square(std::span<const double> measured,
                std::span<const double> ideal);

}  // namespace dstomo

#endif  // DSTOMO_RECONSTRUCT_HPP_
