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

#ifndef SUNCS_HERMITIAN_HPP
#define SUNCS_HERMITIAN_HPP

#include <Eigen/Dense>

#include "suncs/fock.hpp"

namespace suncs {

// Validation tolerances for operator flags.
inline constexpr double kHermitianTol = 1e-11;  // max |A - A^H|
inline constexpr double kPsdTol = 1e-10;        // min eigenvalue floor
inline constexpr double kUnitTraceTol = 1e-10;  // |Tr - 1|

/// Dense complex operator tagged with its SymmetricSpace, with validated
/// hermitian/psd/unit-trace flags. Construct through the named factories;
/// each validates exactly what its flag claims and throws
/// std::invalid_argument otherwise.
class HermitianOperator {
 public:
  /// Hermitian within kHermitianTol; no positivity or trace claim.
  static HermitianOperator hermitian(SymmetricSpace space, Eigen::MatrixXcd entries);

  /// Hermitian and positive semi-definite (min eigenvalue >= -kPsdTol).
  static HermitianOperator positive(SymmetricSpace space, Eigen::MatrixXcd entries);

  /// Hermitian, PSD and unit trace: a density matrix.
  static HermitianOperator density(SymmetricSpace space, Eigen::MatrixXcd entries);

  /// |psi><psi|; flags follow from psi being normalized or not.
  static HermitianOperator projector(const StateVector& psi);

  const SymmetricSpace& space() const { return space_; }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  double trace() const { return entries_.trace().real(); }

  bool is_hermitian() const { return hermitian_; }
  bool is_psd() const { return psd_; }
  bool is_unit_trace() const { return unit_trace_; }

  HermitianOperator scaled(double factor) const;

  /// Used by channel maps, which preserve positivity structurally and do
  /// not need to re-diagonalize the output.
  static HermitianOperator with_flags(SymmetricSpace space, Eigen::MatrixXcd entries,
                                      bool hermitian, bool psd, bool unit_trace);

 private:
  HermitianOperator(SymmetricSpace space, Eigen::MatrixXcd entries, bool h, bool p, bool t)
      : space_(std::move(space)), entries_(std::move(entries)), hermitian_(h), psd_(p),
        unit_trace_(t) {}

  SymmetricSpace space_;
  Eigen::MatrixXcd entries_;
  bool hermitian_;
  bool psd_;
  bool unit_trace_;
};

/// Identity/dim on the given space (the maximally mixed state).
HermitianOperator maximally_mixed(const SymmetricSpace& space);

/// Hilbert-Schmidt-ensemble random density matrix: G G^H / Tr(G G^H) with
/// G a square complex Gaussian.
HermitianOperator random_density(const SymmetricSpace& space, RngStream& rng);

}  // namespace suncs

#endif  // SUNCS_HERMITIAN_HPP
