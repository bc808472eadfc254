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

#include "dstomo/records_csv.hpp"

#include <charconv>
#include <cstdio>

#include "dstomo/errors.hpp"
#include "dstomo/file_io.hpp"

namespace dstomo {
namespace {

// Column order of the probability and count blocks.
constexpr std::array<Projector, kProjectorCount> kColumnOrder = {
    Projector::Plus, Projector::Minus, Projector::P0,
    Projector::P1,   Projector::Left,  Projector::Right};

constexpr std::size_t kColumns = 15;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T v{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw_io("records CSV line " + std::to_string(line_no) +
             ": cannot parse '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string encode_records_csv(const std::vector<ReadoutRecord>& records) {
  std::string out(kRecordsCsvHeader);
  out.push_back('\n');
  char buf[64];
  for (const ReadoutRecord& r : records) {
    out += std::to_string(r.cell.ix);
    out.push_back(',');
    out += std::to_string(r.cell.iy);
    for (Projector p : kColumnOrder) {
      std::snprintf(buf, sizeof buf, ",%.17g", r.probs[p]);
      out += buf;
    }
    for (Projector p : kColumnOrder) {
      out.push_back(',');
      if (r.counts) out += std::to_string((*r.counts)[p]);
    }
    out.push_back(',');
    out += std::to_string(r.photons_per_setting);
    out.push_back('\n');
  }
  return out;
}

std::vector<ReadoutRecord> decode_records_csv(std::string_view text) {
  std::vector<ReadoutRecord> records;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kRecordsCsvHeader) throw_io("records CSV: unexpected header");
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != kColumns) {
      throw_io("records CSV line " + std::to_string(line_no) + ": expected " +
               std::to_string(kColumns) + " columns");
    }
    ReadoutRecord r;
    r.cell.ix = parse_number<std::size_t>(fields[0], line_no);
    r.cell.iy = parse_number<std::size_t>(fields[1], line_no);
    for (std::size_t k = 0; k < kProjectorCount; ++k) {
      r.probs[kColumnOrder[k]] = parse_number<double>(fields[2 + k], line_no);
    }
    std::size_t empty = 0;
    for (std::size_t k = 0; k < kProjectorCount; ++k) {
      if (fields[8 + k].empty()) ++empty;
    }
    if (empty != 0 && empty != kProjectorCount) {
      throw_io("records CSV line " + std::to_string(line_no) +
               ": count columns must be all present or all empty");
    }
    if (empty == 0) {
      ProjectorCounts c;
      for (std::size_t k = 0; k < kProjectorCount; ++k) {
        c[kColumnOrder[k]] =
            parse_number<std::uint64_t>(fields[8 + k], line_no);
      }
      r.counts = c;
    }
    r.photons_per_setting = parse_number<std::uint64_t>(fields[14], line_no);
    records.push_back(r);
  }
  if (!header_seen) throw_io("records CSV is empty");
  return records;
}

void save_records_csv(const std::filesystem::path& path,
                      const std::vector<ReadoutRecord>& records) {
  write_file_atomic(path, encode_records_csv(records));
}

std::vector<ReadoutRecord> load_records_csv(
    const std::filesystem::path& path) {
  return decode_records_csv(read_file(path));
}

}  // namespace dstomo
