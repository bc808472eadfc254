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

#include "dstomo/pgm.hpp"

#include <cctype>

#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"
#include "dstomo/numeric.hpp"

namespace dstomo {
namespace {

// Header tokens are separated by whitespace; '#' starts a comment line.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view b) : bytes_(b) {}

  std::size_t number() {
    skip();
    std::size_t v = 0;
    bool any = false;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (v > (1u << 24)) throw_io("PGM header value too large");
      ++pos_;
      any = true;
    }
    if (!any) throw_io("malformed PGM header");
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw_io("malformed PGM header");
    }
    return pos_ + 1;
  }

  std::size_t pos_ = 2;

 private:
  void skip() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::string_view bytes_;
};

}  // namespace

GrayImage decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes.substr(0, 2) != "P5") {
    throw_io("not a binary PGM (P5) image");
  }
  HeaderReader h(bytes);
  GrayImage img;
  img.width = h.number();
  img.height = h.number();
  const std::size_t maxval = h.number();
  if (img.width == 0 || img.height == 0) throw_io("PGM has zero size");
  if (maxval == 0 || maxval > 255) throw_io("only 8-bit PGM is supported");
  img.maxval = static_cast<unsigned>(maxval);
  const std::size_t start = h.raster_start();
  const std::size_t n = img.width * img.height;
  if (bytes.size() < start + n) throw_io("PGM raster truncated");
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                    bytes.begin() + static_cast<std::ptrdiff_t>(start + n));
  return img;
}

std::string encode_pgm(const GrayImage& img) {
  if (img.pixels.size() != img.width * img.height) {
    throw_validation("image buffer does not match its size");
  }
  std::string out = "P5\n" + std::to_string(img.width) + " " +
                    std::to_string(img.height) + "\n" +
                    std::to_string(img.maxval) + "\n";
  out.append(img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
  return decode_pgm(read_file(path));
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
  write_file_atomic(path, encode_pgm(img));
}

std::vector<Complex> transmission_from_image(const GrayImage& img,
                                             ObjectKind kind) {
  std::vector<Complex> t(img.width * img.height);
  for (std::size_t row = 0; row < img.height; ++row) {
    const std::size_t iy = img.height - 1 - row;
    for (std::size_t ix = 0; ix < img.width; ++ix) {
      const double v = img.pixels[row * img.width + ix];
      t[iy * img.width + ix] =
          kind == ObjectKind::Amplitude
              ? Complex(v / img.maxval, 0.0)
              : std::polar(1.0, 2.0 * kPi * v / (img.maxval + 1.0));
    }
  }
  return t;
}

}  // namespace dstomo
