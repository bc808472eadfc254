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

#ifndef DSTOMO_FFT2D_HPP_
#define DSTOMO_FFT2D_HPP_

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace dstomo {

// Unnormalized 2D complex DFT of a fixed nx-by-ny row-major array, backed by
// FFTW. Plans are made once at construction; execute() may be called from
// several threads at once.
class Fft2d {
 public:
  Fft2d(std::size_t nx, std::size_t ny);
  ~Fft2d();
  Fft2d(Fft2d&&) noexcept;
  Fft2d& operator=(Fft2d&&) noexcept;
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  std::size_t nx() const;
  std::size_t ny() const;

  // In place. `data.size()` must equal nx * ny.
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dstomo

#endif  // DSTOMO_FFT2D_HPP_
