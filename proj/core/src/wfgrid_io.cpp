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

#include "dstomo/wfgrid_io.hpp"

#include <bit>
#include <cstdint>
#include <limits>

#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"

namespace dstomo {
namespace {

template <typename U>
void put_le(std::string& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
}

template <typename U>
U get_le(std::string_view in, std::size_t offset) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    v |= static_cast<U>(static_cast<unsigned char>(in[offset + i])) << (8 * i);
  }
  return v;
}

void put_f64(std::string& out, double d) {
  put_le(out, std::bit_cast<std::uint64_t>(d));
}

double get_f64(std::string_view in, std::size_t offset) {
  return std::bit_cast<double>(get_le<std::uint64_t>(in, offset));
}

}  // namespace

std::string encode_wfgrid(const TransverseWavefunction& f) {
  const GridSpec& g = f.grid();
  if (g.nx > std::numeric_limits<std::uint32_t>::max() ||
      g.ny > std::numeric_limits<std::uint32_t>::max()) {
    throw_validation("grid too large for WFGRID");
  }
  std::string out;
  out.reserve(kWfgridHeaderSize + 16 * f.size());
  out.append(kWfgridMagic);
  put_le(out, static_cast<std::uint32_t>(g.nx));
  put_le(out, static_cast<std::uint32_t>(g.ny));
  put_f64(out, g.pitch);
  for (const Complex& a : f.amps()) {
    put_f64(out, a.real());
    put_f64(out, a.imag());
  }
  return out;
}

TransverseWavefunction decode_wfgrid(std::string_view bytes) {
  if (bytes.size() < kWfgridHeaderSize) throw_io("WFGRID header truncated");
  if (bytes.substr(0, 4) != kWfgridMagic) throw_io("not a WFGRID file");
  GridSpec g;
  g.nx = get_le<std::uint32_t>(bytes, 4);
  g.ny = get_le<std::uint32_t>(bytes, 8);
  g.pitch = get_f64(bytes, 12);
  const std::size_t cells = g.nx * g.ny;
  const std::size_t expected = kWfgridHeaderSize + 16 * cells;
  if (bytes.size() < expected) throw_io("WFGRID payload truncated");
  if (bytes.size() > expected) throw_io("WFGRID has trailing bytes");
  std::vector<Complex> amps(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const std::size_t off = kWfgridHeaderSize + 16 * i;
    amps[i] = {get_f64(bytes, off), get_f64(bytes, off + 8)};
  }
  return {g, std::move(amps)};
}

void save_wfgrid(const std::filesystem::path& path,
                 const TransverseWavefunction& f) {
  write_file_atomic(path, encode_wfgrid(f));
}

TransverseWavefunction load_wfgrid(const std::filesystem::path& path) {
  return decode_wfgrid(read_file(path));
}

}  // namespace dstomo
