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

#include "suncs/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace suncs {

namespace {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_double() {
  // 53 mantissa bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::complex<double> RngStream::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index) {
  std::uint64_t state = root ^ fnv1a(label);
  std::uint64_t h = splitmix64(state);
  state = h ^ index;
  return splitmix64(state);
}

RngStream derived_stream(std::uint64_t root, std::string_view label, std::uint64_t index) {
  return RngStream(derive_seed(root, label, index));
}

Eigen::VectorXcd random_complex_gaussian(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("random vector needs n >= 1");
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_complex_gaussian();
  return v;
}

Eigen::VectorXcd random_unit_vector(int n, RngStream& rng) {
  Eigen::VectorXcd v = random_complex_gaussian(n, rng);
  double nrm = v.norm();
  while (nrm < 1e-12) {  // astronomically unlikely; regenerate rather than divide by ~0
    v = random_complex_gaussian(n, rng);
    nrm = v.norm();
  }
  return v / nrm;
}

}  // namespace suncs
