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

#include "suncs/hermitian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace suncs {

namespace {

void check_shape(const SymmetricSpace& space, const Eigen::MatrixXcd& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw std::invalid_argument("operator shape does not match space dimension");
  }
  if (!m.allFinite()) throw std::invalid_argument("operator entries must be finite");
}

void check_hermitian(const Eigen::MatrixXcd& m) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol) {
    throw std::invalid_argument("matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
}

void check_psd(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -kPsdTol) {
    throw std::invalid_argument("matrix is not PSD (min eigenvalue " + std::to_string(min_ev) +
                                ")");
  }
}

}  // namespace

HermitianOperator HermitianOperator::hermitian(SymmetricSpace space, Eigen::MatrixXcd entries) {
  check_shape(space, entries);
  check_hermitian(entries);
  return HermitianOperator(std::move(space), std::move(entries), true, false, false);
}

HermitianOperator HermitianOperator::positive(SymmetricSpace space, Eigen::MatrixXcd entries) {
  check_shape(space, entries);
  check_hermitian(entries);
  check_psd(entries);
  return HermitianOperator(std::move(space), std::move(entries), true, true, false);
}

HermitianOperator HermitianOperator::density(SymmetricSpace space, Eigen::MatrixXcd entries) {
  check_shape(space, entries);
  check_hermitian(entries);
  check_psd(entries);
  const double tr = entries.trace().real();
  if (std::abs(tr - 1.0) > kUnitTraceTol) {
    throw std::invalid_argument("density matrix trace " + std::to_string(tr) + " is not 1");
  }
  return HermitianOperator(std::move(space), std::move(entries), true, true, true);
}

HermitianOperator HermitianOperator::projector(const StateVector& psi) {
  Eigen::MatrixXcd p = psi.coeffs() * psi.coeffs().adjoint();
  const bool unit = psi.is_normalized();
  return HermitianOperator(psi.space(), std::move(p), true, true, unit);
}

HermitianOperator HermitianOperator::scaled(double factor) const {
  return HermitianOperator(space_, factor * entries_, hermitian_, psd_ && factor >= 0.0, false);
}

HermitianOperator HermitianOperator::with_flags(SymmetricSpace space, Eigen::MatrixXcd entries,
                                                bool hermitian, bool psd, bool unit_trace) {
  check_shape(space, entries);
  return HermitianOperator(std::move(space), std::move(entries), hermitian, psd, unit_trace);
}

HermitianOperator maximally_mixed(const SymmetricSpace& space) {
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Identity(space.dim(), space.dim()) / static_cast<double>(space.dim());
  return HermitianOperator::with_flags(space, std::move(m), true, true, true);
}

HermitianOperator random_density(const SymmetricSpace& space, RngStream& rng) {
  const int d = space.dim();
  Eigen::MatrixXcd g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = rng.next_complex_gaussian();
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Hermitise exactly; G G^H is PSD by construction.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return HermitianOperator::with_flags(space, std::move(rho), true, true, true);
}

}  // namespace suncs
