// Copyright 2026 The Elotope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ELOTOPE_ERRORS_HPP
#define ELOTOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elotope {

/// Raised when an input violates a documented invariant (shape, symmetry,
/// probability range, connectivity, ...). The message names the invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an iterative solve needed by a larger computation fails.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace elotope

#endif  // ELOTOPE_ERRORS_HPP
