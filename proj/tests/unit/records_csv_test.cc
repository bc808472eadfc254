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

#include <gtest/gtest.h>

#include "dstomo/errors.hpp"
#include "dstomo/records_csv.hpp"

namespace dstomo {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

TEST(RecordsCsv, HeaderAndNoiselessRows) {
  const auto records = scan(make_smooth_random({3, 2, 1e-4}, 1), {}, 0, 0);
  const auto text = encode_records_csv(records);
  const auto ls = lines(text);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0],
            "ix,iy,w_plus,w_minus,w_0,w_1,w_L,w_R,n_plus,n_minus,n_0,n_1,n_L,"
            "n_R,budget");
  EXPECT_EQ(ls[1].substr(0, 4), "0,0,");
  EXPECT_NE(ls[1].find(",,,,,,0"), std::string::npos);
  EXPECT_EQ(ls[2].substr(0, 4), "1,0,");
}

TEST(RecordsCsv, RoundTripIsExact) {
  for (std::uint64_t budget : {0ull, 1000ull, 1000000ull}) {
    const auto records =
        scan(make_smooth_random({7, 5, 1e-4}, budget), {}, budget, 17);
    const auto back = decode_records_csv(encode_records_csv(records));
    ASSERT_EQ(back.size(), records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      EXPECT_EQ(back[i].cell, records[i].cell);
      EXPECT_EQ(back[i].probs, records[i].probs);
      EXPECT_EQ(back[i].counts, records[i].counts);
      EXPECT_EQ(back[i].photons_per_setting, records[i].photons_per_setting);
    }
  }
}

TEST(RecordsCsv, RejectsMalformedInput) {
  EXPECT_THROW(decode_records_csv(""), IoError);
  EXPECT_THROW(decode_records_csv("ix,iy\n0,0\n"), IoError);
  const std::string header(kRecordsCsvHeader);
  EXPECT_THROW(decode_records_csv(header + "\n0,0,1,2\n"), IoError);
  EXPECT_THROW(decode_records_csv(header + "\n0,0,a,0,0,0,0,0,,,,,,,0\n"),
               IoError);
  // Partially filled count block.
  EXPECT_THROW(decode_records_csv(header + "\n0,0,0,0,0,0,0,0,1,,,,,,5\n"),
               IoError);
  EXPECT_NO_THROW(decode_records_csv(header + "\r\n0,0,0,0,0,0,0,0,,,,,,,0\r\n"));
}

}  // namespace
}  // namespace dstomo
