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

// Occupation-number bases of the totally symmetric spaces H_M of N bosonic
// modes, ladder-operator algebra on them, and coherent (highest-weight)
// state vectors.
//
// Conventions fixed here and relied on everywhere else:
//  * Basis order is descending lexicographic on the occupation counts, so
//    (M,0,...,0) has index 0 and (0,...,0,M) comes last.
//  * a*(w) = sum_i w_i a_i*  and  a(w) = sum_i conj(w_i) a_i, which makes
//    <coherent(u), coherent(v)> = <u,v>^M hold literally.

#ifndef SUNCS_FOCK_HPP
#define SUNCS_FOCK_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "suncs/errors.hpp"
#include "suncs/rng.hpp"

namespace suncs {

/// Default size budget for dense constructions: dim(H) may not exceed this
/// unless the caller raises the guard explicitly.
inline constexpr int kDefaultMaxDim = 20000;

/// dim H_M = C(M+N-1, N-1), exact integer arithmetic; throws
/// std::overflow_error past 64 bits, std::invalid_argument for N <= 0 or M < 0.
std::int64_t dimension(int n_modes, int level);

/// ln dim H_M, valid far beyond the 64-bit range.
double log_dimension(int n_modes, int level);

/// Per-mode quanta counts (n_1,...,n_N), all >= 0, summing to the level M.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<int> counts);

  int modes() const { return static_cast<int>(counts_.size()); }
  int level() const { return level_; }
  int operator[](int mode) const { return counts_[static_cast<size_t>(mode)]; }
  const std::vector<int>& counts() const { return counts_; }

  bool operator==(const Occupation& o) const { return counts_ == o.counts_; }

  /// Canonical order: descending lexicographic on counts.
  bool precedes(const Occupation& o) const { return counts_ > o.counts_; }

 private:
  std::vector<int> counts_;
  int level_ = 0;
};

/// The catalog of one symmetric space H_M: ordered basis, index lookup,
/// dimension. Copies share one immutable payload and are cheap.
class SymmetricSpace {
 public:
  SymmetricSpace(int n_modes, int level, int max_dim = kDefaultMaxDim);

  int n_modes() const { return data_->n_modes; }
  int level() const { return data_->level; }
  int dim() const { return static_cast<int>(data_->basis.size()); }

  const Occupation& occupation(int index) const { return data_->basis[static_cast<size_t>(index)]; }
  const std::vector<Occupation>& basis() const { return data_->basis; }

  /// Index of an occupation in the canonical order; throws if it does not
  /// belong to this space.
  int index_of(const Occupation& occ) const;

  /// No-throw lookup by raw counts (handy for shifted-occupation scans).
  std::optional<int> find(const std::vector<int>& counts) const;

  /// Same (N, M) means same space; payloads are deterministic.
  bool operator==(const SymmetricSpace& o) const {
    return n_modes() == o.n_modes() && level() == o.level();
  }

 private:
  struct VectorIntHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  struct Data {
    int n_modes;
    int level;
    std::vector<Occupation> basis;
    std::unordered_map<std::vector<int>, int, VectorIntHash> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Enumerates the canonical basis of H_M. First element (M,0,...,0), last
/// (0,...,0,M). Throws ResourceError when dim exceeds max_dim.
SymmetricSpace enumerate_basis(int n_modes, int level, int max_dim = kDefaultMaxDim);

/// Complex coefficient vector over a SymmetricSpace basis.
class StateVector {
 public:
  StateVector(SymmetricSpace space, Eigen::VectorXcd coeffs);

  const SymmetricSpace& space() const { return space_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  std::complex<double> coeff(int index) const { return coeffs_[index]; }

  double norm() const { return coeffs_.norm(); }
  bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }

  /// Unit-norm copy; throws on (near-)zero vectors.
  StateVector normalized() const;

 private:
  SymmetricSpace space_;
  Eigen::VectorXcd coeffs_;
};

/// |psi><psi| ... <x|psi> inner products use the physics convention:
/// conjugate-linear in the first argument, i.e. <x,y> = x.dot(y) in Eigen.
std::complex<double> inner(const StateVector& x, const StateVector& y);

/// The normalized highest-weight vector tensor^M u expanded in the
/// occupation basis: coefficient at n is sqrt(M!/prod n_i!) prod u_i^{n_i}.
/// u must be unit within 1e-12 (no silent renormalization).
StateVector coherent_vector(const SymmetricSpace& space, const Eigen::VectorXcd& u);

enum class LadderKind { kCreate, kAnnihilate };

/// Single-mode ladder action: a_i*|n> = sqrt(n_i+1)|n+e_i> on H_{M+1},
/// a_i|n> = sqrt(n_i)|n-e_i> on H_{M-1}. Annihilating level 0 is an error.
StateVector apply_ladder(LadderKind kind, int mode, const StateVector& state,
                         int max_dim = kDefaultMaxDim);

/// Vector-direction ladder: a*(w) = sum_i w_i a_i*, a(w) = sum_i conj(w_i) a_i.
StateVector apply_ladder(LadderKind kind, const Eigen::VectorXcd& direction,
                         const StateVector& state, int max_dim = kDefaultMaxDim);

/// Dense matrix of the single-mode ladder operator out of `domain`
/// (creation: dim(M+1) x dim(M); annihilation: dim(M-1) x dim(M)).
Eigen::MatrixXcd ladder_matrix(LadderKind kind, int mode, const SymmetricSpace& domain,
                               int max_dim = kDefaultMaxDim);

/// Dense matrix of the vector-direction ladder operator out of `domain`.
Eigen::MatrixXcd ladder_matrix(LadderKind kind, const Eigen::VectorXcd& direction,
                               const SymmetricSpace& domain, int max_dim = kDefaultMaxDim);

/// State with i.i.d. complex-Gaussian coefficients, normalized.
StateVector random_state(const SymmetricSpace& space, RngStream& rng);

}  // namespace suncs

#endif  // SUNCS_FOCK_HPP
