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

#include "dstomo/errors.hpp"

namespace dstomo {

void throw_validation(const std::string& what) { throw ValidationError(what); }
void throw_numerical(const std::string& what) { throw NumericalError(what); }
void throw_io(const std::string& what) { throw IoError(what); }

}  // namespace dstomo
