// Copyright 2026 The suncs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUNCS_ERRORS_HPP
#define SUNCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace suncs {

/// Thrown when a requested object would exceed the configured size budget
/// (dense dimensions, commutant systems, scan lengths).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an adaptive quadrature cannot reach the requested tolerance.
/// Carries the error estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace suncs

#endif  // SUNCS_ERRORS_HPP
