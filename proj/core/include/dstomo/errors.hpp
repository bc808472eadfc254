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

#ifndef DSTOMO_ERRORS_HPP_
#define DSTOMO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dstomo {

// Base class for every error raised by the library. The CLI maps the three
// concrete kinds onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments, malformed configuration, contract violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inputs the physics cannot handle: zero post-selection amplitude, aliased
// propagation kernels, empty reconstruction masks.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// File system and format errors.
class IoError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_validation(const std::string& what);
[[noreturn]] void throw_numerical(const std::string& what);
[[noreturn]] void throw_io(const std::string& what);

}  // namespace dstomo

#endif  // DSTOMO_ERRORS_HPP_
