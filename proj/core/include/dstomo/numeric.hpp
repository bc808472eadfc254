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

#ifndef DSTOMO_NUMERIC_HPP_
#define DSTOMO_NUMERIC_HPP_

#include <complex>
#include <span>

namespace dstomo {

// Pairwise (cascade) summation. The result depends only on the input order,
// never on thread count, and the rounding error grows as O(log n).
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

constexpr double kPi = 3.14159265358979323846;

}  // namespace dstomo

#endif  // DSTOMO_NUMERIC_HPP_
