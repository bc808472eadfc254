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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "cli/commands.hpp"
#include "cli/experiment_config.hpp"
#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"

namespace dstomo::cli {
namespace {

namespace fs = std::filesystem;

TEST(ExperimentConfig, DefaultsRoundTrip) {
  const ExperimentConfig cfg;
  const std::string text = cfg.serialize();
  EXPECT_EQ(ExperimentConfig::parse(text).serialize(), text);
  EXPECT_EQ(text.find("theta"), std::string::npos);
  EXPECT_NE(text.find("lambda-nm = 808\n"), std::string::npos);
}

TEST(ExperimentConfig, EveryKeyRoundTrips) {
  ExperimentConfig cfg;
  cfg.set("nx", "48");
  cfg.set("ny", "40");
  cfg.set("pitch-um", "62.5");
  cfg.set("mode", "lg");
  cfg.set("l", "-2");
  cfg.set("radial", "1");
  cfg.set("waist-um", "0.1");
  cfg.set("tilt-x", "1234.5678901234567");
  cfg.set("tilt-y", "-3e-7");
  cfg.set("theta", "0.05");
  cfg.set("estimator", "dwt");
  cfg.set("photons", "1000000");
  cfg.set("seed", "18446744073709551615");
  cfg.set("threads", "3");
  cfg.set("lambda-nm", "632.8");
  cfg.set("distance-mm", "2500");
  cfg.set("kernel", "feynman");
  cfg.set("pad-factor", "4");
  cfg.set("mask-threshold", "0.25");
  cfg.set("object-kind", "phase");
  cfg.set("out", "runs/a b");
  const std::string text = cfg.serialize();
  for (std::string_view key : config_keys()) {
    EXPECT_NE(text.find(std::string(key) + " = "), std::string::npos) << key;
  }
  const ExperimentConfig back = ExperimentConfig::parse(text);
  EXPECT_EQ(back.serialize(), text);
  EXPECT_EQ(back.seed, 18446744073709551615ull);
  EXPECT_EQ(*back.tilt_x, 1234.5678901234567);
  EXPECT_EQ(back.out, "runs/a b");
  EXPECT_NO_THROW(back.validate());
}

TEST(ExperimentConfig, CommentsAndBlankLines) {
  const auto cfg = ExperimentConfig::parse(
      "# experiment\n\n  nx = 32   # cells\nny=16\r\n\t photons = 10 \n");
  EXPECT_EQ(cfg.nx, 32u);
  EXPECT_EQ(cfg.ny, 16u);
  EXPECT_EQ(cfg.photons, 10u);
}

TEST(ExperimentConfig, RejectsBadText) {
  EXPECT_THROW(ExperimentConfig::parse("flavour = 1\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("nx = 8\nnx = 9\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("nx 8\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("nx = 8x\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("nx = -8\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("pitch-um = nan\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("mode = hermite\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("kernel = angular\n"), ValidationError);
  EXPECT_THROW(ExperimentConfig::parse("estimator = \n"), ValidationError);
  ExperimentConfig cfg;
  EXPECT_THROW(cfg.set("out", "a#b"), ValidationError);
}

TEST(ExperimentConfig, CrossFieldValidation) {
  ExperimentConfig cfg;
  cfg.estimator = Estimator::DWT;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.theta = 0.05;
  EXPECT_NO_THROW(cfg.validate());
  cfg.theta = 2.0;
  EXPECT_THROW(cfg.validate(), ValidationError);

  ExperimentConfig g;
  g.l = 1;
  EXPECT_THROW(g.validate(), ValidationError);
  g.mode = ModeName::LG;
  EXPECT_NO_THROW(g.validate());

  ExperimentConfig p;
  p.pad_factor = 1;
  EXPECT_THROW(p.validate(), ValidationError);
  ExperimentConfig d;
  EXPECT_THROW(d.propagation(), ValidationError);
  d.distance_mm = 2500;
  EXPECT_NEAR(d.propagation().distance, 2.5, 1e-15);
  EXPECT_NEAR(d.propagation().wavelength, 808e-9, 1e-21);
}

TEST(ExperimentConfig, LgGetsPostSelectionTiltUnlessGiven) {
  ExperimentConfig cfg;
  cfg.mode = ModeName::LG;
  cfg.l = 1;
  const double w = default_waist(cfg.grid());
  EXPECT_DOUBLE_EQ(cfg.mode_spec().tilt_x, best_postselection_tilt(1, w));
  cfg.tilt_y = 10.0;
  EXPECT_EQ(cfg.mode_spec().tilt_x, 0.0);
  EXPECT_EQ(cfg.mode_spec().tilt_y, 10.0);
  cfg.l = 0;
  cfg.tilt_y.reset();
  EXPECT_EQ(cfg.mode_spec().tilt_x, 0.0);
}

TEST(ExperimentConfig, FlagsOverrideFile) {
  const fs::path dir =
      fs::temp_directory_path() / ("dstomo_cfg_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  write_file_atomic(dir / "in.cfg",
                    "nx = 8\nny = 8\nseed = 5\nout = " + dir.string() + "\n");
  const std::string cfg_path = (dir / "in.cfg").string();
  const char* argv[] = {"dstomo", "prepare", "--config", cfg_path.c_str(),
                        "--ny", "12"};
  std::ostringstream out, err;
  ASSERT_EQ(run(6, argv, out, err), kExitOk) << err.str();
  const auto written = ExperimentConfig::parse(read_file(dir / "config.txt"));
  EXPECT_EQ(written.nx, 8u);
  EXPECT_EQ(written.ny, 12u);
  EXPECT_EQ(written.seed, 5u);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace dstomo::cli
