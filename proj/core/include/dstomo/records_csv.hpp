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

#ifndef DSTOMO_RECORDS_CSV_HPP_
#define DSTOMO_RECORDS_CSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dstomo/dst_engine.hpp"

namespace dstomo {

inline constexpr std::string_view kRecordsCsvHeader =
    "ix,iy,w_plus,w_minus,w_0,w_1,w_L,w_R,"
    "n_plus,n_minus,n_0,n_1,n_L,n_R,budget";

// One header line, then one line per record. Probabilities use 17
// significant digits (exact round trip); count columns are empty for
// noiseless records.
std::string encode_records_csv(const std::vector<ReadoutRecord>& records);

// Throws IoError on a wrong header or malformed row.
std::vector<ReadoutRecord> decode_records_csv(std::string_view text);

void save_records_csv(const std::filesystem::path& path,
                      const std::vector<ReadoutRecord>& records);
std::vector<ReadoutRecord> load_records_csv(const std::filesystem::path& path);

}  // namespace dstomo

#endif  // DSTOMO_RECORDS_CSV_HPP_
