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

// Test-only reference implementations. Nothing here shares code with the
// closed forms in dstomo/dst_engine.hpp: the joint system-pointer state is
// built explicitly and the coupling unitary comes from a dense matrix
// exponential.

#ifndef DSTOMO_TESTS_SUPPORT_ORACLES_HPP_
#define DSTOMO_TESTS_SUPPORT_ORACLES_HPP_

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <vector>

namespace dstomo::oracle {

using C = std::complex<double>;

struct Pointer {
  C a0;
  C a1;
};

// Full 2N-dimensional simulation: |psi> (x) |0>, U = expm(-i theta
// |c><c| (x) sigma_y), then <p0| (x) 1 with |p0> = sum_j |j> / sqrt(N). The
// result is rotated so that sum psi is real and positive.
inline Pointer joint_state_pointer(const std::vector<C>& psi, std::size_t cell,
                                   double theta) {
  const auto n = static_cast<Eigen::Index>(psi.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  const auto c = static_cast<Eigen::Index>(cell);
  // sigma_y = [[0, -i], [i, 0]] on the pointer of cell c.
  h(2 * c, 2 * c + 1) = C(0.0, -theta);
  h(2 * c + 1, 2 * c) = C(0.0, theta);
  const Eigen::MatrixXcd u = (C(0.0, -1.0) * h).exp();

  Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) joint(2 * j) = psi[static_cast<std::size_t>(j)];
  const Eigen::VectorXcd out = u * joint;

  C sum = 0.0;
  for (const C& v : psi) sum += v;
  const C gauge = std::conj(sum) / std::abs(sum);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  Pointer p{0.0, 0.0};
  for (Eigen::Index j = 0; j < n; ++j) {
    p.a0 += out(2 * j) * norm;
    p.a1 += out(2 * j + 1) * norm;
  }
  p.a0 *= gauge;
  p.a1 *= gauge;
  return p;
}

// |<v|phi>|^2 with v given as a ket.
inline double project(const Pointer& phi, C v0, C v1) {
  return std::norm(std::conj(v0) * phi.a0 + std::conj(v1) * phi.a1);
}

// Paraxial propagation of exp(-r^2 / w0^2) over distance z by the
// complex-beam-parameter formula, including the exp(i k z) carrier:
//   u = (-i zR / (z - i zR)) exp(i k r^2 / (2 (z - i zR))) exp(i k z).
inline C gaussian_beam(double r2, double w0, double wavelength, double z) {
  const double pi = 3.14159265358979323846;
  const double k = 2.0 * pi / wavelength;
  const double zr = pi * w0 * w0 / wavelength;
  const C q(z, -zr);
  return C(0.0, -zr) / q * std::exp(C(0.0, k * r2 / 2.0) / q) *
         std::polar(1.0, k * z);
}

}  // namespace dstomo::oracle

#endif  // DSTOMO_TESTS_SUPPORT_ORACLES_HPP_
