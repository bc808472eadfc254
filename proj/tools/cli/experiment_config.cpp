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

#include "cli/experiment_config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <system_error>
#include <type_traits>

#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"
#include "dstomo/numeric.hpp"

namespace dstomo::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw_validation("invalid value '" + std::string(value) + "' for " +
                   std::string(key));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  const auto [end, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    bad_value(key, value);
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(v)) bad_value(key, value);
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string_view mode_name(ModeName m) {
  return m == ModeName::Gaussian ? "gaussian" : "lg";
}

std::string_view estimator_name(Estimator e) {
  return e == Estimator::DST ? "dst" : "dwt";
}

std::string_view object_kind_name(ObjectKind k) {
  return k == ObjectKind::Amplitude ? "amplitude" : "phase";
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "nx",          "ny",          "pitch-um",       "mode",
      "l",           "radial",      "waist-um",       "tilt-x",
      "tilt-y",      "theta",       "estimator",      "photons",
      "seed",        "threads",     "lambda-nm",      "distance-mm",
      "kernel",      "pad-factor",  "mask-threshold", "object-kind",
      "out"};
  return keys;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "nx") {
    nx = parse_number<std::size_t>(key, value);
  } else if (key == "ny") {
    ny = parse_number<std::size_t>(key, value);
  } else if (key == "pitch-um") {
    pitch_um = parse_number<double>(key, value);
  } else if (key == "mode") {
    if (value == "gaussian") {
      mode = ModeName::Gaussian;
    } else if (value == "lg") {
      mode = ModeName::LG;
    } else {
      bad_value(key, value);
    }
  } else if (key == "l") {
    l = parse_number<int>(key, value);
  } else if (key == "radial") {
    radial = parse_number<int>(key, value);
  } else if (key == "waist-um") {
    waist_um = parse_number<double>(key, value);
  } else if (key == "tilt-x") {
    tilt_x = parse_number<double>(key, value);
  } else if (key == "tilt-y") {
    tilt_y = parse_number<double>(key, value);
  } else if (key == "theta") {
    theta = parse_number<double>(key, value);
  } else if (key == "estimator") {
    if (value == "dst") {
      estimator = Estimator::DST;
    } else if (value == "dwt") {
      estimator = Estimator::DWT;
    } else {
      bad_value(key, value);
    }
  } else if (key == "photons") {
    photons = parse_number<std::uint64_t>(key, value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    threads = parse_number<unsigned>(key, value);
  } else if (key == "lambda-nm") {
    lambda_nm = parse_number<double>(key, value);
  } else if (key == "distance-mm") {
    distance_mm = parse_number<double>(key, value);
  } else if (key == "kernel") {
    if (value == "fresnel") {
      kernel = KernelKind::FresnelParaxial;
    } else if (value == "feynman") {
      kernel = KernelKind::FeynmanExact;
    } else {
      bad_value(key, value);
    }
  } else if (key == "pad-factor") {
    pad_factor = parse_number<int>(key, value);
  } else if (key == "mask-threshold") {
    mask_threshold = parse_number<double>(key, value);
  } else if (key == "object-kind") {
    if (value == "amplitude") {
      object_kind = ObjectKind::Amplitude;
    } else if (value == "phase") {
      object_kind = ObjectKind::Phase;
    } else {
      bad_value(key, value);
    }
  } else if (key == "out") {
    // '#' would be read back as a comment.
    if (value.empty() || value.find_first_of("#\n") != std::string_view::npos) {
      bad_value(key, value);
    }
    out = std::string(value);
  } else {
    throw_validation("unknown config key '" + std::string(key) + "'");
  }
}

std::string ExperimentConfig::serialize() const {
  std::string s;
  auto line = [&s](std::string_view k, std::string_view v) {
    s.append(k).append(" = ").append(v).append("\n");
  };
  auto opt = [&line](std::string_view k, const std::optional<double>& v) {
    if (v) line(k, format_double(*v));
  };
  line("nx", std::to_string(nx));
  line("ny", std::to_string(ny));
  line("pitch-um", format_double(pitch_um));
  line("mode", mode_name(mode));
  line("l", std::to_string(l));
  line("radial", std::to_string(radial));
  opt("waist-um", waist_um);
  opt("tilt-x", tilt_x);
  opt("tilt-y", tilt_y);
  opt("theta", theta);
  line("estimator", estimator_name(estimator));
  line("photons", std::to_string(photons));
  line("seed", std::to_string(seed));
  line("threads", std::to_string(threads));
  line("lambda-nm", format_double(lambda_nm));
  opt("distance-mm", distance_mm);
  line("kernel", kernel == KernelKind::FeynmanExact ? "feynman" : "fresnel");
  line("pad-factor", std::to_string(pad_factor));
  line("mask-threshold", format_double(mask_threshold));
  line("object-kind", object_kind_name(object_kind));
  line("out", out);
  return s;
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw_validation("config line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.emplace(key).second) {
      throw_validation("config key '" + std::string(key) + "' repeated");
    }
    cfg.set(key, line.substr(eq + 1));
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  grid().validate();
  if (mode == ModeName::Gaussian && (l != 0 || radial != 0)) {
    throw_validation("--l and --radial need --mode lg");
  }
  if (radial < 0) throw_validation("radial index must be >= 0");
  if (waist_um && !(*waist_um > 0.0)) throw_validation("waist must be positive");
  if (estimator == Estimator::DWT && !theta) {
    throw_validation("--estimator dwt needs an explicit --theta");
  }
  if (theta && !(*theta >= 0.0 && *theta <= kPi / 2.0)) {
    throw_validation("theta must lie in [0, pi/2]");
  }
  if (!(lambda_nm > 0.0)) throw_validation("wavelength must be positive");
  if (distance_mm && !(*distance_mm > 0.0)) {
    throw_validation("distance must be positive");
  }
  if (pad_factor < 2) throw_validation("pad factor must be at least 2");
  if (!(mask_threshold >= 0.0 && mask_threshold <= 1.0)) {
    throw_validation("mask threshold must lie in [0, 1]");
  }
}

GridSpec ExperimentConfig::grid() const {
  return {nx, ny, pitch_um * 1e-6};
}

ModeSpec ExperimentConfig::mode_spec() const {
  ModeSpec s;
  s.kind = mode == ModeName::Gaussian ? ModeKind::Gaussian
                                      : ModeKind::LaguerreGaussian;
  s.oam = l;
  s.radial = radial;
  if (waist_um) s.waist = *waist_um * 1e-6;
  if (tilt_x || tilt_y) {
    s.tilt_x = tilt_x.value_or(0.0);
    s.tilt_y = tilt_y.value_or(0.0);
  } else if (mode == ModeName::LG && l != 0) {
    // A centred vortex has no zero-momentum component to post-select on.
    s.tilt_x = best_postselection_tilt(l, s.waist.value_or(default_waist(grid())));
  }
  return s;
}

double ExperimentConfig::coupling_theta() const {
  return theta.value_or(kPi / 2.0);
}

CouplingConfig ExperimentConfig::coupling() const {
  return {coupling_theta(), estimator == Estimator::DST
                                ? CouplingMode::StrongExact
                                : CouplingMode::WeakFirstOrder};
}

PropagationSpec ExperimentConfig::propagation() const {
  if (!distance_mm) throw_validation("--distance-mm is required here");
  PropagationSpec s;
  s.wavelength = lambda_nm * 1e-9;
  s.distance = *distance_mm * 1e-3;
  s.kernel = kernel;
  s.pad_factor = pad_factor;
  s.validate();
  return s;
}

ObjectOptions ExperimentConfig::object_options() const {
  ObjectOptions o;
  o.mask_threshold = mask_threshold;
  return o;
}

ExperimentConfig load_config(const std::string& path) {
  return ExperimentConfig::parse(read_file(path));
}

}  // namespace dstomo::cli
