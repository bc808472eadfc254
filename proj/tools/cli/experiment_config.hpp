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

#ifndef DSTOMO_TOOLS_CLI_EXPERIMENT_CONFIG_HPP_
#define DSTOMO_TOOLS_CLI_EXPERIMENT_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dstomo/dst_engine.hpp"
#include "dstomo/grid.hpp"
#include "dstomo/holography.hpp"
#include "dstomo/pgm.hpp"
#include "dstomo/reconstruct.hpp"
#include "dstomo/wavefield.hpp"

namespace dstomo::cli {

enum class ModeName { Gaussian, LG };

// Everything a run depends on. Keys in the text form are the long flag
// names without the leading dashes.
struct ExperimentConfig {
  std::size_t nx = 64;
  std::size_t ny = 64;
  double pitch_um = 125.0;

  ModeName mode = ModeName::Gaussian;
  int l = 0;
  int radial = 0;
  std::optional<double> waist_um;
  std::optional<double> tilt_x;  // rad / m
  std::optional<double> tilt_y;

  std::optional<double> theta;
  Estimator estimator = Estimator::DST;
  std::uint64_t photons = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  double lambda_nm = 808.0;
  std::optional<double> distance_mm;
  KernelKind kernel = KernelKind::FresnelParaxial;
  int pad_factor = 2;
  double mask_threshold = 0.1;
  ObjectKind object_kind = ObjectKind::Amplitude;

  std::string out = ".";

  // Sets one key from its text value. Throws ValidationError for an unknown
  // key or an unparsable value.
  void set(std::string_view key, std::string_view value);

  // Flat "key = value" lines; unset optional keys are omitted.
  std::string serialize() const;
  // Accepts '#' comments and blank lines; rejects unknown and repeated keys.
  static ExperimentConfig parse(std::string_view text);

  // Cross-field checks that must hold before any computation starts.
  void validate() const;

  GridSpec grid() const;
  ModeSpec mode_spec() const;
  // theta if set, otherwise pi/2.
  double coupling_theta() const;
  CouplingConfig coupling() const;
  // Throws ValidationError when distance-mm is not set.
  PropagationSpec propagation() const;
  ObjectOptions object_options() const;
};

const std::vector<std::string_view>& config_keys();

ExperimentConfig load_config(const std::string& path);

}  // namespace dstomo::cli

#endif  // DSTOMO_TOOLS_CLI_EXPERIMENT_CONFIG_HPP_
