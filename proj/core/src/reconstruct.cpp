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

#include "dstomo/reconstruct.hpp"

#include <cmath>
#include <string>

#include "dstomo/errors.hpp"
#include "dstomo/numeric.hpp"

namespace dstomo {
namespace {

// Per-cell probabilities the inversion consumes, after resolving counts.
struct CellReadout {
  ProjectorProbs probs;
  std::uint8_t empty = 0;
};

CellReadout effective_readout(const ReadoutRecord& r) {
  CellReadout out;
  if (!r.counts || r.photons_per_setting == 0) {
    out.probs = r.probs;
  } else {
    const double budget = static_cast<double>(r.photons_per_setting);
    std::uint8_t bit = 1;
    for (Basis b : kAllBases) {
      const auto [first, second] = projectors_of(b);
      const std::uint64_t total = (*r.counts)[first] + (*r.counts)[second];
      if (total == 0) out.empty |= bit;
      // (n / total) * (total / budget): frequency times sampled weight.
      out.probs[first] = static_cast<double>((*r.counts)[first]) / budget;
      out.probs[second] = static_cast<double>((*r.counts)[second]) / budget;
      bit <<= 1;
    }
  }
  for (double p : out.probs.values) {
    if (!std::isfinite(p)) throw_numerical("non-finite readout probability");
  }
  return out;
}

// Orders records by cell and checks the grid is covered exactly once.
std::vector<const ReadoutRecord*> index_records(
    const GridSpec& grid, const std::vector<ReadoutRecord>& records) {
  grid.validate();
  std::vector<const ReadoutRecord*> by_cell(grid.cell_count(), nullptr);
  for (const ReadoutRecord& r : records) {
    if (!grid.contains(r.cell)) {
      throw_validation("record for cell (" + std::to_string(r.cell.ix) + ", " +
                       std::to_string(r.cell.iy) + ") lies outside the grid");
    }
    const std::size_t i = grid.index(r.cell);
    if (by_cell[i] != nullptr) {
      throw_validation("duplicate record for cell (" +
                       std::to_string(r.cell.ix) + ", " +
                       std::to_string(r.cell.iy) + ")");
    }
    by_cell[i] = &r;
  }
  for (std::size_t i = 0; i < by_cell.size(); ++i) {
    if (by_cell[i] == nullptr) {
      const CellIndex c = grid.cell(i);
      throw_validation("missing record for cell (" + std::to_string(c.ix) +
                       ", " + std::to_string(c.iy) + ")");
    }
  }
  return by_cell;
}

// `raw` maps hold psi~ Re psi and psi~ Im psi.
ReconstructionResult finish(const GridSpec& grid, std::vector<double> raw_re,
                            std::vector<double> raw_im,
                            std::vector<std::uint8_t> empty,
                            PsiTildeMode mode, Estimator estimator) {
  double psi_tilde = 0.0;
  if (mode.known) {
    psi_tilde = *mode.known;
  } else {
    std::vector<double> sq(raw_re.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
      sq[i] = raw_re[i] * raw_re[i] + raw_im[i] * raw_im[i];
    }
    psi_tilde = std::sqrt(pairwise_sum(sq));
  }
  if (!std::isfinite(psi_tilde) || !(psi_tilde > 0.0)) {
    throw_numerical("psi~ estimate is not positive");
  }

  ReconstructionResult out;
  out.grid = grid;
  out.psi_tilde = psi_tilde;
  out.mode = estimator;
  out.empty_bases = std::move(empty);
  out.re_map = std::move(raw_re);
  out.im_map = std::move(raw_im);
  const std::size_t n = out.re_map.size();
  out.density_map.resize(n);
  out.phase_map.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.re_map[i] /= psi_tilde;
    out.im_map[i] /= psi_tilde;
    out.density_map[i] =
        out.re_map[i] * out.re_map[i] + out.im_map[i] * out.im_map[i];
    const double ph = std::atan2(out.im_map[i], out.re_map[i]);
    out.phase_map[i] = ph <= -kPi ? kPi : ph;
  }
  return out;
}

template <typename Invert>
ReconstructionResult reconstruct_with(const GridSpec& grid,
                                      const std::vector<ReadoutRecord>& records,
                                      PsiTildeMode mode, Estimator estimator,
                                      Invert invert) {
  const auto by_cell = index_records(grid, records);
  const double n = static_cast<double>(grid.cell_count());
  std::vector<double> re(by_cell.size()), im(by_cell.size());
  std::vector<std::uint8_t> empty(by_cell.size());
  for (std::size_t i = 0; i < by_cell.size(); ++i) {
    const CellReadout cell = effective_readout(*by_cell[i]);
    empty[i] = cell.empty;
    invert(cell.probs, n, re[i], im[i]);
  }
  return finish(grid, std::move(re), std::move(im), std::move(empty), mode,
                estimator);
}

void check_theta(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > kPi / 2.0) {
    throw_validation("reconstruction needs 0 < theta <= pi/2");
  }
}

}  // namespace

std::string_view to_string(Estimator e) {
  return e == Estimator::DST ? "DST" : "DWT";
}

TransverseWavefunction ReconstructionResult::field() const {
  std::vector<Complex> amps(re_map.size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = {re_map[i], im_map[i]};
  return {grid, std::move(amps)};
}

ReconstructionResult reconstruct_dst(const GridSpec& grid,
                                     const std::vector<ReadoutRecord>& records,
                                     PsiTildeMode psi_tilde_mode,
                                     double theta) {
  check_theta(theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return reconstruct_with(
      grid, records, psi_tilde_mode, Estimator::DST,
      [s, c](const ProjectorProbs& p, double n, double& re, double& im) {
        re = n * (p[Projector::Plus] - p[Projector::Minus]) / (2.0 * s) +
             n * (1.0 - c) * p[Projector::P1] / (s * s);
        im = n * (p[Projector::Left] - p[Projector::Right]) / (2.0 * s);
      });
}

ReconstructionResult reconstruct_dwt(const GridSpec& grid,
                                     const std::vector<ReadoutRecord>& records,
                                     double theta,
                                     PsiTildeMode psi_tilde_mode) {
  check_theta(theta);
  return reconstruct_with(
      grid, records, psi_tilde_mode, Estimator::DWT,
      [theta](const ProjectorProbs& p, double n, double& re, double& im) {
        re = n * (p[Projector::Plus] - p[Projector::Minus]) / (2.0 * theta);
        im = n * (p[Projector::Left] - p[Projector::Right]) / (2.0 * theta);
      });
}

double r_square(std::span<const double> measured,
                std::span<const double> ideal) {
  if (measured.size() != ideal.size() || ideal.empty()) {
    throw_validation("r_square needs two maps of equal, non-zero size");
  }
  const double mean = pairwise_sum(ideal) / static_cast<double>(ideal.size());
  std::vector<double> res(ideal.size()), tot(ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    res[i] = (measured[i] - ideal[i]) * (measured[i] - ideal[i]);
    tot[i] = (ideal[i] - mean) * (ideal[i] - mean);
  }
  const double ss_tot = pairwise_sum(tot);
  if (!(ss_tot > 0.0)) throw_numerical("ideal density is constant");
  return 1.0 - pairwise_sum(res) / ss_tot;
}

QualityReport score(const ReconstructionResult& rec,
                    const TransverseWavefunction& ideal_in) {
  if (!same_geometry(rec.grid, ideal_in.grid())) {
    throw_validation("reconstruction and ideal field are on different grids");
  }
  const TransverseWavefunction ideal = gauge_fixed(normalize(ideal_in));
  const std::size_t n = ideal.size();

  std::vector<double> ideal_density(n);
  std::vector<Complex> overlap(n);
  std::vector<double> rec_norm(n), d_re(n), d_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex r(rec.re_map[i], rec.im_map[i]);
    ideal_density[i] = std::norm(ideal[i]);
    overlap[i] = std::conj(ideal[i]) * r;
    rec_norm[i] = std::norm(r);
    d_re[i] = (rec.re_map[i] - ideal[i].real()) *
              (rec.re_map[i] - ideal[i].real());
    d_im[i] = (rec.im_map[i] - ideal[i].imag()) *
              (rec.im_map[i] - ideal[i].imag());
  }

  QualityReport q;
  q.r_square = r_square(rec.density_map, ideal_density);
  const double rn = pairwise_sum(rec_norm);
  q.fidelity = rn > 0.0 ? std::norm(pairwise_sum(overlap)) / rn : 0.0;
  q.rmse_re = std::sqrt(pairwise_sum(d_re) / static_cast<double>(n));
  q.rmse_im = std::sqrt(pairwise_sum(d_im) / static_cast<double>(n));
  return q;
}

}  // namespace dstomo
