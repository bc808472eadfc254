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

#include "dstomo/numeric.hpp"

#include <cstddef>

namespace dstomo {
namespace {

constexpr std::size_t kLeafSize = 16;

template <typename T>
T pairwise(std::span<const T> v) {
  if (v.size() <= kLeafSize) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise(values);
}

std::complex<double> pairwise_sum(
    std::span<const std::complex<double>> values) {
  return pairwise(values);
}

}  // namespace dstomo
