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

// Deterministic random streams. A single 64-bit root seed spawns
// independent sub-streams keyed by (root, purpose label, index), so Monte
// Carlo sample i sees the same draws no matter how work is scheduled, and
// the whole run is reproducible from the seed recorded in reports.
//
// The generator is a self-contained SplitMix64 with a Box-Muller normal
// layer: bit-identical output on every platform and standard library.

#ifndef SUNCS_RNG_HPP
#define SUNCS_RNG_HPP

#include <complex>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

namespace suncs {

/// One deterministic stream of uniforms / Gaussians.
class RngStream {
 public:
  explicit RngStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double next_double();

  /// Standard normal via Box-Muller (pairs cached).
  double next_gaussian();

  /// Complex with independent standard-normal real and imaginary parts.
  std::complex<double> next_complex_gaussian();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Stable hash of (root, label, index) used to key sub-streams.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index);

/// Sub-stream for one purpose/index pair under a root seed.
RngStream derived_stream(std::uint64_t root, std::string_view label, std::uint64_t index = 0);

/// Complex vector with i.i.d. standard-normal entries.
Eigen::VectorXcd random_complex_gaussian(int n, RngStream& rng);

/// Haar-uniform point on the unit sphere of C^n (normalized Gaussian).
Eigen::VectorXcd random_unit_vector(int n, RngStream& rng);

}  // namespace suncs

#endif  // SUNCS_RNG_HPP
