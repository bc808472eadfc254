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

#include "dstomo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dstomo/errors.hpp"

namespace dstomo {

void GridSpec::validate() const {
  if (nx < 2 || ny < 2) {
    throw_validation("grid must be at least 2x2, got " + std::to_string(nx) +
                     "x" + std::to_string(ny));
  }
  if (!std::isfinite(pitch) || pitch <= 0.0) {
    throw_validation("grid pitch must be finite and positive");
  }
}

double GridSpec::x(std::size_t ix) const {
  return (static_cast<double>(ix) - static_cast<double>(nx / 2)) * pitch;
}

double GridSpec::y(std::size_t iy) const {
  return (static_cast<double>(iy) - static_cast<double>(ny / 2)) * pitch;
}

double GridSpec::extent() const {
  return static_cast<double>(std::max(nx, ny)) * pitch;
}

bool same_geometry(const GridSpec& a, const GridSpec& b) {
  if (a.nx != b.nx || a.ny != b.ny) return false;
  return std::abs(a.pitch - b.pitch) <=
         1e-12 * std::max(std::abs(a.pitch), std::abs(b.pitch));
}

}  // namespace dstomo
