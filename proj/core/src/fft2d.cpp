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

#include "dstomo/fft2d.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "dstomo/errors.hpp"

namespace dstomo {
namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (ptr == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* ptr;
};

}  // namespace

struct Fft2d::Impl {
  std::size_t nx;
  std::size_t ny;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  Impl(std::size_t nx_, std::size_t ny_) : nx(nx_), ny(ny_) {
    FftwBuffer scratch(nx * ny);
    std::lock_guard lock(planner_mutex());
    // FFTW takes the slow (row) dimension first.
    fwd = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx),
                           scratch.ptr, scratch.ptr, FFTW_FORWARD,
                           FFTW_ESTIMATE);
    inv = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx),
                           scratch.ptr, scratch.ptr, FFTW_BACKWARD,
                           FFTW_ESTIMATE);
    if (fwd == nullptr || inv == nullptr) {
      destroy();
      throw_numerical("FFTW could not create a plan");
    }
  }
  ~Impl() { destroy(); }

  void destroy() {
    std::lock_guard lock(planner_mutex());
    if (fwd != nullptr) fftw_destroy_plan(fwd);
    if (inv != nullptr) fftw_destroy_plan(inv);
    fwd = inv = nullptr;
  }

  void run(fftw_plan plan, std::span<std::complex<double>> data) const {
    if (data.size() != nx * ny) throw_validation("FFT size mismatch");
    // Plans were made for an fftw_malloc'd buffer; copy through one so the
    // alignment assumption holds for arbitrary caller storage.
    FftwBuffer buf(data.size());
    auto* as_complex = reinterpret_cast<std::complex<double>*>(buf.ptr);
    std::copy(data.begin(), data.end(), as_complex);
    fftw_execute_dft(plan, buf.ptr, buf.ptr);
    std::copy(as_complex, as_complex + data.size(), data.begin());
  }
};

Fft2d::Fft2d(std::size_t nx, std::size_t ny)
    : impl_(std::make_unique<Impl>(nx, ny)) {}
Fft2d::~Fft2d() = default;
Fft2d::Fft2d(Fft2d&&) noexcept = default;
Fft2d& Fft2d::operator=(Fft2d&&) noexcept = default;

std::size_t Fft2d::nx() const { return impl_->nx; }
std::size_t Fft2d::ny() const { return impl_->ny; }

void Fft2d::forward(std::span<std::complex<double>> data) const {
  impl_->run(impl_->fwd, data);
}

void Fft2d::inverse(std::span<std::complex<double>> data) const {
  impl_->run(impl_->inv, data);
}

}  // namespace dstomo
