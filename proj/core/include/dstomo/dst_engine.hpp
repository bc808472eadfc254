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

#ifndef DSTOMO_DST_ENGINE_HPP_
#define DSTOMO_DST_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dstomo/numeric.hpp"
#include "dstomo/wavefield.hpp"

namespace dstomo {

// Polarization pointer over {|0>, |1>}, with |0> = (|H> + |V>)/sqrt2 and
// |1> = (|H> - |V>)/sqrt2. Post-selected states are left unnormalized: their
// squared norm is the post-selection probability.
struct PointerState {
  Complex a0;
  Complex a1;

  double norm_squared() const { return std::norm(a0) + std::norm(a1); }
};

// Readout projectors. |+-> = (|0> +- |1>)/sqrt2, |L> = (|0> + i|1>)/sqrt2,
// |R> = (|0> - i|1>)/sqrt2.
enum class Projector : std::uint8_t { P0, P1, Plus, Minus, Left, Right };
inline constexpr std::size_t kProjectorCount = 6;
inline constexpr std::array<Projector, kProjectorCount> kAllProjectors = {
    Projector::P0,   Projector::P1,   Projector::Plus,
    Projector::Minus, Projector::Left, Projector::Right};

// The three analyzer settings. Each resolves one pair of projectors.
enum class Basis : std::uint8_t { Diagonal, Computational, Circular };
inline constexpr std::array<Basis, 3> kAllBases = {
    Basis::Diagonal, Basis::Computational, Basis::Circular};

std::array<Projector, 2> projectors_of(Basis b);
std::string_view to_string(Projector p);

// Ket |pi> of a projector in the {|0>, |1>} basis.
PointerState projector_vector(Projector p);

template <typename T>
struct ProjectorMap {
  std::array<T, kProjectorCount> values{};

  T& operator[](Projector p) { return values[static_cast<std::size_t>(p)]; }
  const T& operator[](Projector p) const {
    return values[static_cast<std::size_t>(p)];
  }
  friend bool operator==(const ProjectorMap&, const ProjectorMap&) = default;
};

using ProjectorProbs = ProjectorMap<double>;
using ProjectorCounts = ProjectorMap<std::uint64_t>;

enum class CouplingMode { StrongExact, WeakFirstOrder };

// Coupling exp(-i theta |x,y><x,y| (x) sigma_y) at the probed cell. `mode`
// only labels how the readout will be inverted; the simulated pointer is
// always exact.
struct CouplingConfig {
  double theta = kPi / 2.0;
  CouplingMode mode = CouplingMode::StrongExact;

  // Accepts 0 <= theta <= pi/2. theta == 0 is the identity coupling: valid
  // physics, but the readout carries no information about the cell.
  void validate() const;
};

struct ReadoutRecord {
  CellIndex cell;
  ProjectorProbs probs;
  std::optional<ProjectorCounts> counts;
  std::uint64_t photons_per_setting = 0;  // 0 = noiseless
};

// Zero-momentum post-selection prepared once per field: the gauge-fixed
// amplitudes and the real, positive amplitude sum psi~. Building it costs
// O(N); each pointer() call is O(1).
class PostSelection {
 public:
  // Throws NumericalError if the field has (numerically) no zero-momentum
  // component: |psi~|^2 / N < kMinPostSelectionProbability.
  explicit PostSelection(const TransverseWavefunction& f);

  // Post-selected pointer for the coupling applied at `cell`. Throws
  // ValidationError if the cell is outside the grid or cfg is invalid.
  PointerState pointer(CellIndex cell, const CouplingConfig& cfg) const;

  double psi_tilde() const { return psi_tilde_; }
  const TransverseWavefunction& gauge_fixed_field() const { return field_; }

 private:
  TransverseWavefunction field_;
  double psi_tilde_ = 0.0;
  double inv_sqrt_n_ = 0.0;
};

// Post-selection probability |<p0|psi>|^2 below which a field is rejected.
inline constexpr double kMinPostSelectionProbability = 1e-12;

// Couples the pointer to `cell` with strength cfg.theta, projects the system
// on the zero transverse momentum state sum|x,y>/sqrt(N) and returns the
// unnormalized pointer, in the gauge where psi~ is real and positive:
//
//   |phi> = [psi~ |0> + psi(cell) ((cos theta - 1)|0> + sin theta |1>)] / sqrt(N)
PointerState couple_and_postselect(const TransverseWavefunction& f,
                                   CellIndex cell, const CouplingConfig& cfg);

// Same exact pointer, labelled for first-order (weak-value) inversion.
PointerState dwt_pointer(const TransverseWavefunction& f, CellIndex cell,
                         double theta);

// |<pi|phi>|^2 for all six projectors.
ProjectorProbs readout_probs(const PointerState& p);

// Independent 64-bit stream seed for one (seed, cell) pair.
std::uint64_t cell_stream_seed(std::uint64_t seed, CellIndex cell);

// Photon counts for one cell. For every basis: N ~ Poisson(budget * w),
// w = sum of the basis pair's probabilities, then a binomial split between
// the two projectors. Deterministic in `stream_seed`.
ProjectorCounts sample_counts(const ProjectorProbs& probs,
                              std::uint64_t photons_per_setting,
                              std::uint64_t stream_seed);

struct ScanOptions {
  // 0 picks std::thread::hardware_concurrency(). Results never depend on it.
  unsigned workers = 0;
};

// One record per cell in row-major order. photons_per_setting == 0 gives
// noiseless records with no counts; otherwise each cell samples from
// cell_stream_seed(seed, cell).
std::vector<ReadoutRecord> scan(const TransverseWavefunction& f,
                                const CouplingConfig& cfg,
                                std::uint64_t photons_per_setting,
                                std::uint64_t seed,
                                const ScanOptions& options = {});

}  // namespace dstomo

#endif  // DSTOMO_DST_ENGINE_HPP_
