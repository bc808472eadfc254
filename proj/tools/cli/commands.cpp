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

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli/experiment_config.hpp"
#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"
#include "dstomo/records_csv.hpp"
#include "dstomo/wfgrid_io.hpp"

namespace dstomo::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Invocation {
  std::string config_path;
  std::string field;
  std::string records;
  std::string ideal;
  std::string reference;
  std::string measured;
  std::string input;
  std::string object_pgm;
  std::map<std::string, std::string, std::less<>> flags;
};

struct Context {
  ExperimentConfig cfg;
  const Invocation& inv;
  std::ostream& out;

  fs::path path(std::string_view name) const { return fs::path(cfg.out) / name; }
};

std::string num(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_json(const fs::path& p, const Json& j) {
  write_file_atomic(p, j.dump(2) + "\n");
}

Json nullable(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// gnuplot-friendly "x_um y_um value" rows, one blank line per grid row.
void write_dat(const fs::path& p, const GridSpec& g,
               const std::vector<double>& values) {
  std::string s = "# x_um y_um value\n";
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      s += num(g.x(ix) * 1e6) + " " + num(g.y(iy) * 1e6) + " " +
           num(values[iy * g.nx + ix]) + "\n";
    }
    s += "\n";
  }
  write_file_atomic(p, s);
}

void write_config(const Context& ctx) {
  write_file_atomic(ctx.path("config.txt"), ctx.cfg.serialize());
}

Json grid_json(const GridSpec& g) {
  return {{"nx", g.nx}, {"ny", g.ny}, {"pitch_um", g.pitch * 1e6}};
}

ReconstructionResult as_result(const TransverseWavefunction& f) {
  ReconstructionResult r;
  r.grid = f.grid();
  const std::size_t n = f.size();
  r.re_map.resize(n);
  r.im_map.resize(n);
  r.density_map.resize(n);
  r.phase_map.resize(n);
  r.empty_bases.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.re_map[i] = f[i].real();
    r.im_map[i] = f[i].imag();
    r.density_map[i] = std::norm(f[i]);
    const double ph = std::arg(f[i]);
    r.phase_map[i] = ph <= -kPi ? kPi : ph;
  }
  return r;
}

TransverseWavefunction require_field(const std::string& path,
                                     std::string_view flag) {
  if (path.empty()) throw_validation(std::string(flag) + " is required");
  return load_wfgrid(path);
}

void require_same_grid(const GridSpec& a, const GridSpec& b,
                       std::string_view what) {
  if (!same_geometry(a, b)) {
    throw_validation(std::string(what) + " grids do not match");
  }
}

std::vector<Complex> load_object(const std::string& path, const GridSpec& g,
                                 ObjectKind kind) {
  const GrayImage img = load_pgm(path);
  if (img.width != g.nx || img.height != g.ny) {
    throw_validation("object image is " + std::to_string(img.width) + "x" +
                     std::to_string(img.height) + ", grid is " +
                     std::to_string(g.nx) + "x" + std::to_string(g.ny));
  }
  return transmission_from_image(img, kind);
}

void cmd_prepare(Context& ctx) {
  const auto field = make_mode(ctx.cfg.mode_spec(), ctx.cfg.grid());
  save_wfgrid(ctx.path("field.wfg"), field);
  write_config(ctx);
  ctx.out << "field " << ctx.path("field.wfg").string() << "\n";
}

void cmd_measure(Context& ctx) {
  const auto field = ctx.inv.field.empty()
                         ? make_mode(ctx.cfg.mode_spec(), ctx.cfg.grid())
                         : load_wfgrid(ctx.inv.field);
  // The field file carries its own geometry; record it for reconstruct.
  ctx.cfg.nx = field.grid().nx;
  ctx.cfg.ny = field.grid().ny;
  ctx.cfg.pitch_um = field.grid().pitch * 1e6;
  const auto records = scan(field, ctx.cfg.coupling(), ctx.cfg.photons,
                            ctx.cfg.seed, {ctx.cfg.threads});
  save_records_csv(ctx.path("records.csv"), records);
  write_config(ctx);
  ctx.out << "records " << ctx.path("records.csv").string() << " ("
          << records.size() << " cells)\n";
}

void cmd_reconstruct(Context& ctx) {
  if (ctx.inv.records.empty()) throw_validation("--records is required");
  const GridSpec g = ctx.cfg.grid();
  std::optional<TransverseWavefunction> ideal;
  if (!ctx.inv.ideal.empty()) {
    ideal = load_wfgrid(ctx.inv.ideal);
    require_same_grid(ideal->grid(), g, "ideal and configured");
  }
  const auto records = load_records_csv(ctx.inv.records);
  const ReconstructionResult rec =
      ctx.cfg.estimator == Estimator::DST
          ? reconstruct_dst(g, records, PsiTildeMode::normalized(),
                            ctx.cfg.coupling_theta())
          : reconstruct_dwt(g, records, *ctx.cfg.theta);

  std::optional<double> r2, fid;
  if (ideal) {
    const QualityReport q = score(rec, *ideal);
    r2 = q.r_square;
    fid = q.fidelity;
  }
  std::size_t flagged = 0;
  for (std::uint8_t e : rec.empty_bases) flagged += e != 0;
  const std::uint64_t budget = records.empty() ? 0 : records.front().photons_per_setting;

  Json report;
  report["psi_tilde"] = rec.psi_tilde;
  report["mode"] = std::string(to_string(rec.mode));
  report["r_square"] = nullable(r2);
  report["fidelity"] = nullable(fid);
  report["theta"] = ctx.cfg.coupling_theta();
  report["photons_per_setting"] = budget;
  report["cells_with_empty_basis"] = flagged;
  report["grid"] = grid_json(g);

  save_wfgrid(ctx.path("reconstruction.wfg"), rec.field());
  write_json(ctx.path("report.json"), report);
  write_dat(ctx.path("density.dat"), g, rec.density_map);
  write_dat(ctx.path("phase.dat"), g, rec.phase_map);
  ctx.out << report.dump() << "\n";
}

void cmd_score(Context& ctx) {
  const auto field = require_field(ctx.inv.field, "--field");
  const auto ideal = require_field(ctx.inv.ideal, "--ideal");
  require_same_grid(field.grid(), ideal.grid(), "field and ideal");
  const QualityReport q = score(as_result(field), ideal);
  const Json report = {{"r_square", q.r_square},
                       {"fidelity", q.fidelity},
                       {"rmse_re", q.rmse_re},
                       {"rmse_im", q.rmse_im}};
  write_json(ctx.path("score.json"), report);
  ctx.out << report.dump() << "\n";
}

void cmd_holo_forward(Context& ctx) {
  const PropagationSpec spec = ctx.cfg.propagation();
  auto field = require_field(ctx.inv.field, "--field");
  if (!ctx.inv.object_pgm.empty()) {
    const auto t = load_object(ctx.inv.object_pgm, field.grid(), ctx.cfg.object_kind);
    std::vector<Complex> amps(field.amps().begin(), field.amps().end());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= t[i];
    field = TransverseWavefunction(field.grid(), std::move(amps));
  }
  const auto out = propagate_forward(field, spec);
  save_wfgrid(ctx.path("propagated.wfg"), out);
  const Json report = {{"kernel", std::string(to_string(spec.kernel))},
                       {"distance_m", spec.distance},
                       {"power_in", field.norm_squared()},
                       {"power_out", out.norm_squared()},
                       {"paraxial_ok", paraxial_ok(field.grid(), spec)}};
  write_json(ctx.path("holo_forward.json"), report);
  ctx.out << report.dump() << "\n";
}

void cmd_holo_inverse(Context& ctx) {
  const PropagationSpec spec = ctx.cfg.propagation();
  const auto field = require_field(ctx.inv.field, "--field");
  std::optional<TransverseWavefunction> reference;
  if (!ctx.inv.reference.empty()) {
    reference = load_wfgrid(ctx.inv.reference);
    require_same_grid(reference->grid(), field.grid(), "field and reference");
  }
  const auto back = propagate_inverse(field, spec);
  save_wfgrid(ctx.path("backpropagated.wfg"), back);
  Json report = {{"distance_m", spec.distance}, {"round_trip_error", nullptr}};
  if (reference) report["round_trip_error"] = relative_l2(back, *reference);
  write_json(ctx.path("holo_inverse.json"), report);
  ctx.out << report.dump() << "\n";
}

void cmd_holo_object(Context& ctx) {
  const PropagationSpec spec = ctx.cfg.propagation();
  const auto measured = require_field(ctx.inv.measured, "--measured");
  const auto input = require_field(ctx.inv.input, "--input");
  require_same_grid(measured.grid(), input.grid(), "measured and input");
  std::optional<std::vector<Complex>> truth;
  if (!ctx.inv.object_pgm.empty()) {
    truth = load_object(ctx.inv.object_pgm, input.grid(), ctx.cfg.object_kind);
  }

  const auto obj = reconstruct_object(measured, input, spec, ctx.cfg.object_options());
  const GridSpec& g = obj.grid;
  std::vector<double> mag(obj.transmission.size()), ph(obj.transmission.size());
  double worst_unity = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    mag[i] = std::abs(obj.transmission[i]);
    ph[i] = std::arg(obj.transmission[i]);
    if (obj.valid[i]) {
      worst_unity = std::max(worst_unity, std::abs(obj.transmission[i] - 1.0));
    }
  }

  Json report;
  report["valid_cells"] = obj.valid_count;
  report["max_abs_t_minus_1"] = worst_unity;
  report["correlation"] = nullptr;
  if (truth) {
    std::vector<double> ref(truth->size()), got(truth->size());
    const bool amplitude = ctx.cfg.object_kind == ObjectKind::Amplitude;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ref[i] = amplitude ? std::abs((*truth)[i]) : std::arg((*truth)[i]);
      got[i] = amplitude ? mag[i] : ph[i];
    }
    report["correlation"] = masked_correlation(got, ref, obj.valid);
  }

  save_wfgrid(ctx.path("transmission.wfg"),
              TransverseWavefunction(g, obj.transmission));
  write_dat(ctx.path("transmission_abs.dat"), g, mag);
  write_dat(ctx.path("transmission_phase.dat"), g, ph);
  write_json(ctx.path("holo_object.json"), report);
  ctx.out << report.dump() << "\n";
}

struct Leaf {
  CLI::App* app;
  std::function<void(Context&)> action;
  std::vector<std::pair<std::string, CLI::Option*>> shared;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Direct strong tomography of transverse photon wavefunctions"};
  app.require_subcommand(1);
  Invocation inv;
  std::vector<Leaf> leaves;

  auto leaf = [&](CLI::App* parent, std::string name, std::string help,
                  std::function<void(Context&)> action) -> CLI::App* {
    CLI::App* sub = parent->add_subcommand(std::move(name), std::move(help));
    sub->add_option("--config", inv.config_path, "key = value config file");
    Leaf l{sub, std::move(action), {}};
    for (std::string_view key : config_keys()) {
      const std::string k(key);
      l.shared.emplace_back(k, sub->add_option("--" + k, inv.flags[k]));
    }
    leaves.push_back(std::move(l));
    return sub;
  };

  leaf(&app, "prepare", "generate a mode and write field.wfg", cmd_prepare);

  leaf(&app, "measure", "scan a field, write records.csv", cmd_measure)
      ->add_option("--field", inv.field, "WFGRID input (default: generate)");

  CLI::App* rec = leaf(&app, "reconstruct", "records.csv -> field and report",
                       cmd_reconstruct);
  rec->add_option("--records", inv.records, "records CSV");
  rec->add_option("--ideal", inv.ideal, "ideal WFGRID for scoring");

  CLI::App* sc = leaf(&app, "score", "compare a field with an ideal", cmd_score);
  sc->add_option("--field", inv.field, "measured WFGRID");
  sc->add_option("--ideal", inv.ideal, "ideal WFGRID");

  CLI::App* holo = app.add_subcommand("holo", "digital holography");
  holo->require_subcommand(1);
  CLI::App* fwd = leaf(holo, "forward", "propagate to the detection plane",
                       cmd_holo_forward);
  fwd->add_option("--field", inv.field, "object-plane WFGRID");
  fwd->add_option("--object-pgm", inv.object_pgm, "object applied before propagation");
  CLI::App* back = leaf(holo, "inverse", "back-propagate to the object plane",
                        cmd_holo_inverse);
  back->add_option("--field", inv.field, "detection-plane WFGRID");
  back->add_option("--reference", inv.reference, "expected result, for the error");
  CLI::App* obj = leaf(holo, "object", "recover the object transmission",
                       cmd_holo_object);
  obj->add_option("--measured", inv.measured, "detection-plane WFGRID");
  obj->add_option("--input", inv.input, "known illumination WFGRID");
  obj->add_option("--object-pgm", inv.object_pgm, "ground-truth object, for scoring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    for (const Leaf& l : leaves) {
      if (!l.app->parsed()) continue;
      Context ctx{inv.config_path.empty() ? ExperimentConfig{}
                                          : load_config(inv.config_path),
                  inv, out};
      for (const auto& [key, opt] : l.shared) {
        if (opt->count() > 0) ctx.cfg.set(key, inv.flags.at(key));
      }
      ctx.cfg.validate();
      std::error_code ec;
      fs::create_directories(ctx.cfg.out, ec);
      if (ec) throw_io("cannot create output directory " + ctx.cfg.out);
      l.action(ctx);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

}  // namespace dstomo::cli
