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

#ifndef DSTOMO_WFGRID_IO_HPP_
#define DSTOMO_WFGRID_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "dstomo/wavefield.hpp"

namespace dstomo {

// WFGRID container, little-endian throughout:
//
//   offset  size        content
//   0       4           ASCII "WFG1"
//   4       4           u32 nx
//   8       4           u32 ny
//   12      8           f64 pitch (meters)
//   20      16 * nx*ny  (f64 re, f64 im) per cell, y outer, x inner
inline constexpr std::string_view kWfgridMagic = "WFG1";
inline constexpr std::size_t kWfgridHeaderSize = 20;

std::string encode_wfgrid(const TransverseWavefunction& f);

// Throws IoError on a wrong magic, a truncated or oversized payload, and
// ValidationError on an invalid grid or non-finite amplitudes.
TransverseWavefunction decode_wfgrid(std::string_view bytes);

void save_wfgrid(const std::filesystem::path& path,
                 const TransverseWavefunction& f);
TransverseWavefunction load_wfgrid(const std::filesystem::path& path);

}  // namespace dstomo

#endif  // DSTOMO_WFGRID_IO_HPP_
