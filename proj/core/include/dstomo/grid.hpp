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

#ifndef DSTOMO_GRID_HPP_
#define DSTOMO_GRID_HPP_

#include <cstddef>
#include <functional>

namespace dstomo {

// Scan position on the grid. ix runs along +x (right), iy along +y (up).
struct CellIndex {
  std::size_t ix = 0;
  std::size_t iy = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Uniform sampling of the transverse plane. One cell is one scan step of the
// coupling block, `pitch` meters wide.
//
// The optical axis sits on cell (nx/2, ny/2) (integer division), so even-sized
// grids carry one extra column/row on the negative side, as with FFT-centred
// layouts. This puts a sample exactly on the axis for every grid size.
struct GridSpec {
  std::size_t nx = 64;
  std::size_t ny = 64;
  double pitch = 125e-6;

  // Throws ValidationError unless nx >= 2, ny >= 2 and pitch is finite and > 0.
  void validate() const;

  std::size_t cell_count() const { return nx * ny; }
  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * nx + ix; }
  std::size_t index(CellIndex c) const { return index(c.ix, c.iy); }
  CellIndex cell(std::size_t flat) const { return {flat % nx, flat / nx}; }
  bool contains(CellIndex c) const { return c.ix < nx && c.iy < ny; }

  CellIndex center() const { return {nx / 2, ny / 2}; }
  double x(std::size_t ix) const;
  double y(std::size_t iy) const;

  // Largest side of the scanned area in meters.
  double extent() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// True when the two grids share dimensions and their pitch agrees to 1e-12
// relative.
bool same_geometry(const GridSpec& a, const GridSpec& b);

}  // namespace dstomo

#endif  // DSTOMO_GRID_HPP_
