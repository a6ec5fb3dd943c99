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

// Exact 64-bit combinatorics with explicit overflow signalling, and
// log-gamma fallbacks for the parameter ranges where 64 bits run out.

#ifndef SUNCS_INTMATH_HPP
#define SUNCS_INTMATH_HPP

#include <cstdint>

namespace suncs {

/// n! as an exact signed 64-bit integer. Throws std::overflow_error for
/// n > 20 and std::invalid_argument for n < 0.
std::int64_t checked_factorial(int n);

/// Binomial coefficient C(n, k), exact. Intermediate products are held in
/// 128 bits so any representable result is computed without wraparound;
/// throws std::overflow_error when the result itself exceeds 64 bits.
std::int64_t checked_binomial(int n, int k);

/// Rising product a!/b! = (b+1)(b+2)...(a) for a >= b >= 0, exact.
/// Throws std::overflow_error when the product exceeds 64 bits.
std::int64_t checked_factorial_ratio(int a, int b);

/// ln(n!) in double precision, valid for any n >= 0.
double log_factorial(int n);

/// ln C(n, k); returns -inf when the coefficient is zero (k < 0 or k > n).
double log_binomial(int n, int k);

/// a!/b! as a double, exact 64-bit path when it fits, exp(lgamma) beyond.
double factorial_ratio(int a, int b);

}  // namespace suncs

#endif  // SUNCS_INTMATH_HPP
