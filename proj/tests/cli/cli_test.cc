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
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "dstomo/file_io.hpp"
#include "dstomo/pgm.hpp"
#include "dstomo/records_csv.hpp"
#include "dstomo/wfgrid_io.hpp"
#include "shapes.hpp"

namespace dstomo {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("dstomo_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path at(const std::string& name) const { return dir_ / name; }

  Outcome run(const std::vector<std::string>& args) const {
    std::string cmd = "'" DSTOMO_CLI_PATH "'";
    for (const std::string& a : args) cmd += " '" + a + "'";
    const fs::path o = dir_ / ".stdout", e = dir_ / ".stderr";
    cmd += " >'" + o.string() + "' 2>'" + e.string() + "'";
    Outcome r;
    const int status = std::system(cmd.c_str());
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(o);
    r.err = read_file(e);
    return r;
  }

  Outcome run_ok(const std::vector<std::string>& args) const {
    Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return r;
  }

  nlohmann::json json(const std::string& name) const {
    return nlohmann::json::parse(read_file(at(name)));
  }

  fs::path dir_;
};

TEST_F(CliTest, PrepareGaussianIsRealNonNegative) {
  run_ok({"prepare", "--mode", "gaussian", "--nx", "32", "--ny", "32",
          "--out", at("g").string()});
  const auto f = load_wfgrid(at("g/field.wfg"));
  EXPECT_EQ(f.grid().nx, 32u);
  for (const Complex& a : f.amps()) {
    EXPECT_GE(a.real(), 0.0);
    EXPECT_EQ(a.imag(), 0.0);
  }
}

TEST_F(CliTest, PrepareLgHasDarkCentre) {
  run_ok({"prepare", "--mode", "lg", "--l", "1", "--nx", "32", "--ny", "32",
          "--out", at("lg").string()});
  const auto f = load_wfgrid(at("lg/field.wfg"));
  EXPECT_LT(std::abs(f.at(f.grid().center())), 1e-15);
}

TEST_F(CliTest, PrepareIsByteIdentical) {
  for (const char* d : {"a", "b"}) {
    run_ok({"prepare", "--mode", "lg", "--l", "2", "--out", at(d).string()});
  }
  EXPECT_EQ(read_file(at("a/field.wfg")), read_file(at("b/field.wfg")));
}

TEST_F(CliTest, MeasureNoiselessEnumeratesEveryCell) {
  run_ok({"measure", "--nx", "64", "--ny", "64", "--photons", "0",
          "--out", at("m").string()});
  const std::string csv = read_file(at("m/records.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4097);
  for (const ReadoutRecord& r : decode_records_csv(csv)) {
    EXPECT_FALSE(r.counts.has_value());
  }
  // Last eight columns of a noiseless row: six empty counts and budget 0.
  const std::string first_row = csv.substr(csv.find('\n') + 1);
  EXPECT_NE(first_row.find(",,,,,,0\n"), std::string::npos);
}

TEST_F(CliTest, MeasureIsDeterministicInSeed) {
  for (const char* d : {"a", "b"}) {
    run_ok({"measure", "--nx", "16", "--ny", "16", "--photons", "1000",
            "--seed", "7", "--out", at(d).string()});
  }
  run_ok({"measure", "--nx", "16", "--ny", "16", "--photons", "1000",
          "--seed", "8", "--out", at("c").string()});
  EXPECT_EQ(read_file(at("a/records.csv")), read_file(at("b/records.csv")));
  EXPECT_NE(read_file(at("a/records.csv")), read_file(at("c/records.csv")));
}

TEST_F(CliTest, ThreadCountDoesNotChangeOutput) {
  for (const char* t : {"1", "3"}) {
    run_ok({"measure", "--nx", "16", "--ny", "16", "--photons", "500",
            "--seed", "2", "--threads", t, "--out", at(std::string("t") + t).string()});
  }
  EXPECT_EQ(read_file(at("t1/records.csv")), read_file(at("t3/records.csv")));
}

TEST_F(CliTest, NoiselessReconstructionIsExact) {
  const std::string out = at("r").string();
  run_ok({"prepare", "--nx", "32", "--ny", "32", "--out", out});
  run_ok({"measure", "--field", out + "/field.wfg", "--out", out});
  const Outcome r = run_ok({"reconstruct", "--config", out + "/config.txt",
                            "--records", out + "/records.csv",
                            "--ideal", out + "/field.wfg"});
  const auto report = json("r/report.json");
  EXPECT_GE(report["fidelity"].get<double>(), 1.0 - 1e-10);
  EXPECT_NEAR(report["r_square"].get<double>(), 1.0, 1e-10);
  EXPECT_EQ(report["mode"], "DST");
  EXPECT_GT(report["psi_tilde"].get<double>(), 0.0);
  EXPECT_EQ(nlohmann::json::parse(r.out), report);

  // One block of 32 lines per grid row, blank-line separated.
  const std::string dat = read_file(at("r/density.dat"));
  EXPECT_EQ(std::count(dat.begin(), dat.end(), '\n'), 1 + 32 * 33);
  EXPECT_TRUE(fs::exists(at("r/phase.dat")));
  EXPECT_TRUE(fs::exists(at("r/reconstruction.wfg")));

  const std::string first = read_file(at("r/report.json"));
  run_ok({"reconstruct", "--config", out + "/config.txt", "--records",
          out + "/records.csv", "--ideal", out + "/field.wfg"});
  EXPECT_EQ(read_file(at("r/report.json")), first);
}

TEST_F(CliTest, ShotNoiseReportMeetsFloorsOnSmallGrid) {
  // 16x16 cells: the per-cell DST noise scales as sqrt(N / B), so the
  // desk-scale floors are reachable at B = 1e6 here (not at 64x64).
  struct Case {
    std::vector<std::string> mode;
    double floor;
  };
  for (const Case& c : {Case{{"--mode", "gaussian"}, 0.95},
                        Case{{"--mode", "lg", "--l", "1"}, 0.90}}) {
    const std::string out = at("n").string();
    std::vector<std::string> args = {"prepare", "--nx", "16", "--ny", "16", "--out", out};
    args.insert(args.end(), c.mode.begin(), c.mode.end());
    run_ok(args);
    run_ok({"measure", "--field", out + "/field.wfg", "--photons", "1000000",
            "--seed", "3", "--out", out});
    run_ok({"reconstruct", "--config", out + "/config.txt", "--records",
            out + "/records.csv", "--ideal", out + "/field.wfg"});
    EXPECT_GE(json("n/report.json")["r_square"].get<double>(), c.floor);
  }
}

TEST_F(CliTest, ScoreCommand) {
  const std::string out = at("s").string();
  run_ok({"prepare", "--nx", "16", "--ny", "16", "--out", out});
  const Outcome r = run_ok({"score", "--field", out + "/field.wfg", "--ideal",
                            out + "/field.wfg", "--out", out});
  const auto report = json("s/score.json");
  EXPECT_NEAR(report["r_square"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(report["fidelity"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, DwtWithoutThetaFailsBeforeWork) {
  const Outcome r = run({"measure", "--estimator", "dwt", "--out", at("x").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("theta"), std::string::npos);
  EXPECT_FALSE(fs::exists(at("x")));
  const Outcome ok = run({"measure", "--estimator", "dwt", "--theta", "0.05",
                          "--nx", "8", "--ny", "8", "--out", at("y").string()});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"measure", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"prepare", "--nx", "0", "--out", at("z").string()}).code, 2);
  EXPECT_EQ(run({"prepare", "--mode", "gaussian", "--l", "1"}).code, 2);
  write_file_atomic(at("bad.cfg"), "nx = 8\nflavour = strange\n");
  EXPECT_EQ(run({"prepare", "--config", at("bad.cfg").string()}).code, 2);
  EXPECT_EQ(run({"reconstruct", "--records", at("missing.csv").string(),
                 "--out", at("q").string()}).code, 4);
  // A centred vortex has nothing to post-select on.
  EXPECT_EQ(run({"measure", "--mode", "lg", "--l", "1", "--tilt-x", "0",
                 "--nx", "16", "--ny", "16", "--out", at("v").string()}).code, 3);
  // 64 cells of 125 um need at least 2.44 m for an unaliased chirp.
  run_ok({"prepare", "--out", at("h").string()});
  EXPECT_EQ(run({"holo", "forward", "--field", at("h/field.wfg").string(),
                 "--distance-mm", "1000", "--out", at("h").string()}).code, 3);
  EXPECT_EQ(run({"holo", "forward", "--field", at("h/field.wfg").string(),
                 "--out", at("h").string()}).code, 2);
  EXPECT_EQ(run({"holo", "inverse", "--field", at("h/field.wfg").string(),
                 "--kernel", "feynman", "--distance-mm", "5000",
                 "--out", at("h").string()}).code, 2);
}

TEST_F(CliTest, HoloRoundTripIsReported) {
  const std::string out = at("h").string();
  run_ok({"prepare", "--nx", "128", "--ny", "128", "--out", out});
  run_ok({"holo", "forward", "--field", out + "/field.wfg", "--distance-mm",
          "5000", "--out", out});
  run_ok({"holo", "inverse", "--field", out + "/propagated.wfg", "--reference",
          out + "/field.wfg", "--distance-mm", "5000", "--out", out});
  EXPECT_LT(json("h/holo_inverse.json")["round_trip_error"].get<double>(), 1e-2);
}

TEST_F(CliTest, HoloNullObject) {
  const std::string out = at("o").string();
  run_ok({"prepare", "--waist-um", "1600", "--out", out});
  run_ok({"holo", "forward", "--field", out + "/field.wfg", "--distance-mm",
          "2500", "--out", out});
  run_ok({"holo", "object", "--measured", out + "/propagated.wfg", "--input",
          out + "/field.wfg", "--distance-mm", "2500", "--out", out});
  const auto report = json("o/holo_object.json");
  EXPECT_LT(report["max_abs_t_minus_1"].get<double>(), 0.05);
  EXPECT_GT(report["valid_cells"].get<int>(), 100);
}

TEST_F(CliTest, LetterMaskThroughNoiselessDst) {
  const GridSpec g{64, 64, 125e-6};
  const auto mask = shapes::letter_f(g);
  GrayImage img;
  img.width = g.nx;
  img.height = g.ny;
  for (std::size_t row = 0; row < g.ny; ++row) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      img.pixels.push_back(mask[(g.ny - 1 - row) * g.nx + ix] ? 255 : 0);
    }
  }
  save_pgm(at("letter.pgm"), img);

  const std::string out = at("e").string();
  const std::string pgm = at("letter.pgm").string();
  run_ok({"prepare", "--waist-um", "1600", "--out", out});
  run_ok({"holo", "forward", "--field", out + "/field.wfg", "--object-pgm", pgm,
          "--distance-mm", "2500", "--out", out});
  run_ok({"measure", "--field", out + "/propagated.wfg", "--out", out});
  run_ok({"reconstruct", "--config", out + "/config.txt", "--records",
          out + "/records.csv", "--out", out});
  run_ok({"holo", "object", "--measured", out + "/reconstruction.wfg", "--input",
          out + "/field.wfg", "--object-pgm", pgm, "--distance-mm", "2500",
          "--out", out});
  EXPECT_GE(json("e/holo_object.json")["correlation"].get<double>(), 0.9);
}

}  // namespace
}  // namespace dstomo
