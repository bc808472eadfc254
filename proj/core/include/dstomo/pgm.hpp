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

#ifndef DSTOMO_PGM_HPP_
#define DSTOMO_PGM_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dstomo/wavefield.hpp"

namespace dstomo {

// 8-bit binary grayscale image (PGM "P5"). Rows top to bottom.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 255;
  std::vector<std::uint8_t> pixels;
};

// Throws IoError on anything but P5 with maxval <= 255.
GrayImage decode_pgm(std::string_view bytes);
std::string encode_pgm(const GrayImage& img);
GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);

enum class ObjectKind { Amplitude, Phase };

// Transmission map on a grid of the image's size. Amplitude: t = v / maxval.
// Phase: t = exp(2 pi i v / (maxval + 1)). The top image row lands on the
// largest y, so the object appears upright in the grid's y-up frame.
std::vector<Complex> transmission_from_image(const GrayImage& img,
                                             ObjectKind kind);

}  // namespace dstomo

#endif  // DSTOMO_PGM_HPP_
