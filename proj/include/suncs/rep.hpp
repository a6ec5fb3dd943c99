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

// The action of U(N) group elements on the symmetric spaces H_M, the gl(N)
// weight generators E_ij = a_i* a_j, and a numerical irreducibility check
// through the dimension of the commutant.
//
// Determinant-1 is deliberately not enforced on group elements: a global
// phase acts trivially on every quantity computed from the representation,
// so U(N) inputs are accepted.

#ifndef SUNCS_REP_HPP
#define SUNCS_REP_HPP

#include <Eigen/Dense>

#include "suncs/fock.hpp"

namespace suncs {

/// An N x N matrix, optionally certified unitary (||U^H U - I||_max <= 1e-10).
struct GroupElement {
  Eigen::MatrixXcd matrix;
  bool unitary = false;
};

inline constexpr double kUnitaryTol = 1e-10;

/// Validates unitarity and returns the certified element.
GroupElement unitary_element(Eigen::MatrixXcd u);

/// Haar-ish random unitary: QR of a complex Ginibre matrix with the
/// standard phase fix on R's diagonal.
GroupElement random_unitary(int n, RngStream& rng);

/// pi(U) on H_M: U acting identically on each of the M tensor factors.
/// Built column by column: |n> is a normalized creation chain on the
/// vacuum level, and each a_i* is substituted by a*(U e_i).
Eigen::MatrixXcd symmetric_power(const SymmetricSpace& space, const GroupElement& u);

/// Matrix of E_ij = a_i* a_j on H_M. E_ii is diagonal with entry n_i.
/// Mode indices are 0-based.
Eigen::MatrixXcd weight_generator(const SymmetricSpace& space, int i, int j);

/// Default budget for the commutant solve; the Gram system is dim^2 x dim^2.
inline constexpr int kDefaultMaxCommutantDim = 48;

/// dim { A : A E_ij = E_ij A for all i,j }, computed as the null-space
/// dimension of the stacked commutator system. Singular values below
/// 1e-8 x (largest) count as zero. Returns 1 exactly when the
/// representation is irreducible.
int commutant_dimension(const SymmetricSpace& space, int max_dim = kDefaultMaxCommutantDim);

}  // namespace suncs

#endif  // SUNCS_REP_HPP
