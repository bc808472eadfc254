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

#ifndef DSTOMO_TESTS_SUPPORT_SHAPES_HPP_
#define DSTOMO_TESTS_SUPPORT_SHAPES_HPP_

#include <cstdint>
#include <vector>

#include "dstomo/grid.hpp"

namespace dstomo::shapes {

// Block letter "F" occupying the central half of the grid, as a 0/1 mask in
// the grid's row-major layout (iy grows along +y, so the bar sits on top).
inline std::vector<std::uint8_t> letter_f(const GridSpec& g) {
  std::vector<std::uint8_t> m(g.cell_count(), 0);
  const double w = static_cast<double>(g.nx) / 2.0;
  const double h = static_cast<double>(g.ny) / 2.0;
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      // Local coordinates in [0, 1) across the letter box.
      const double u = (static_cast<double>(ix) - (g.nx - w) / 2.0) / w;
      const double v = (static_cast<double>(iy) - (g.ny - h) / 2.0) / h;
      if (u < 0.0 || u >= 1.0 || v < 0.0 || v >= 1.0) continue;
      const bool stem = u < 0.3;
      const bool top = v >= 0.75;
      const bool middle = v >= 0.4 && v < 0.6 && u < 0.75;
      if (stem || top || middle) m[iy * g.nx + ix] = 1;
    }
  }
  return m;
}

}  // namespace dstomo::shapes

#endif  // DSTOMO_TESTS_SUPPORT_SHAPES_HPP_
