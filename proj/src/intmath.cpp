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

#include "suncs/intmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace suncs {

namespace {

constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();

}  // namespace

std::int64_t checked_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  if (n > 20) throw std::overflow_error("factorial(" + std::to_string(n) + ") exceeds 64 bits");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t checked_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; the running value after step i is C(n-k+i, i),
  // an integer, so the division below is exact.
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i);
    r /= static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(kMaxI64)) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t checked_factorial_ratio(int a, int b) {
  if (b < 0 || a < b) throw std::invalid_argument("factorial ratio requires a >= b >= 0");
  unsigned __int128 r = 1;
  for (int i = b + 1; i <= a; ++i) {
    r *= static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(kMaxI64)) {
      throw std::overflow_error("factorial ratio " + std::to_string(a) + "!/" +
                                std::to_string(b) + "! exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log factorial of negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double factorial_ratio(int a, int b) {
  if (b < 0 || a < b) throw std::invalid_argument("factorial ratio requires a >= b >= 0");
  unsigned __int128 r = 1;
  for (int i = b + 1; i <= a; ++i) {
    r *= static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(kMaxI64)) {
      return std::exp(log_factorial(a) - log_factorial(b));
    }
  }
  return static_cast<double>(static_cast<std::int64_t>(r));
}

}  // namespace suncs
