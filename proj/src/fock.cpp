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

#include "suncs/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "suncs/intmath.hpp"

namespace suncs {

std::int64_t dimension(int n_modes, int level) {
  if (n_modes < 1) throw std::invalid_argument("dimension: need n_modes >= 1");
  if (level < 0) throw std::invalid_argument("dimension: need level >= 0");
  return checked_binomial(level + n_modes - 1, n_modes - 1);
}

double log_dimension(int n_modes, int level) {
  if (n_modes < 1) throw std::invalid_argument("log_dimension: need n_modes >= 1");
  if (level < 0) throw std::invalid_argument("log_dimension: need level >= 0");
  return log_binomial(level + n_modes - 1, n_modes - 1);
}

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("occupation counts must be >= 0");
    level_ += c;
  }
}

std::size_t SymmetricSpace::VectorIntHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b9ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Descending-lexicographic enumeration: pick the first mode's count from
// high to low, recurse on the rest.
void enumerate_rec(int modes_left, int quanta_left, std::vector<int>& current,
                   std::vector<Occupation>& out) {
  if (modes_left == 1) {
    current.push_back(quanta_left);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int c = quanta_left; c >= 0; --c) {
    current.push_back(c);
    enumerate_rec(modes_left - 1, quanta_left - c, current, out);
    current.pop_back();
  }
}

}  // namespace

SymmetricSpace::SymmetricSpace(int n_modes, int level, int max_dim) {
  const std::int64_t d = dimension(n_modes, level);
  if (d > max_dim) {
    throw ResourceError("symmetric space dim " + std::to_string(d) + " exceeds budget " +
                        std::to_string(max_dim));
  }
  auto data = std::make_shared<Data>();
  data->n_modes = n_modes;
  data->level = level;
  data->basis.reserve(static_cast<size_t>(d));
  std::vector<int> scratch;
  scratch.reserve(static_cast<size_t>(n_modes));
  enumerate_rec(n_modes, level, scratch, data->basis);
  data->index.reserve(data->basis.size());
  for (size_t i = 0; i < data->basis.size(); ++i) {
    data->index.emplace(data->basis[i].counts(), static_cast<int>(i));
  }
  data_ = std::move(data);
}

int SymmetricSpace::index_of(const Occupation& occ) const {
  auto it = data_->index.find(occ.counts());
  if (it == data_->index.end()) {
    throw std::invalid_argument("occupation does not belong to this space");
  }
  return it->second;
}

std::optional<int> SymmetricSpace::find(const std::vector<int>& counts) const {
  auto it = data_->index.find(counts);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

SymmetricSpace enumerate_basis(int n_modes, int level, int max_dim) {
  return SymmetricSpace(n_modes, level, max_dim);
}

StateVector::StateVector(SymmetricSpace space, Eigen::VectorXcd coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space_.dim()) {
    throw std::invalid_argument("coefficient length does not match space dimension");
  }
  if (!coeffs_.allFinite()) throw std::invalid_argument("state coefficients must be finite");
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n < 1e-300) throw std::invalid_argument("cannot normalize a zero vector");
  return StateVector(space_, coeffs_ / n);
}

std::complex<double> inner(const StateVector& x, const StateVector& y) {
  if (!(x.space() == y.space())) throw std::invalid_argument("inner product across spaces");
  return x.coeffs().dot(y.coeffs());
}

StateVector coherent_vector(const SymmetricSpace& space, const Eigen::VectorXcd& u) {
  const int n = space.n_modes();
  const int m = space.level();
  if (u.size() != n) throw std::invalid_argument("coherent direction has wrong length");
  if (std::abs(u.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("coherent direction must be unit norm within 1e-12");
  }
  const double log_m_fact = log_factorial(m);
  Eigen::VectorXcd c(space.dim());
  for (int idx = 0; idx < space.dim(); ++idx) {
    const Occupation& occ = space.occupation(idx);
    double log_multinomial = log_m_fact;
    std::complex<double> mono = 1.0;
    for (int i = 0; i < n; ++i) {
      const int ni = occ[i];
      log_multinomial -= log_factorial(ni);
      for (int t = 0; t < ni; ++t) mono *= u[i];
    }
    c[idx] = std::exp(0.5 * log_multinomial) * mono;
  }
  return StateVector(space, std::move(c));
}

namespace {

// Shared kernel: apply sum_i w_i a_i^(*) with explicit per-mode weights.
// For annihilation the caller passes conj(w).
StateVector apply_weighted_ladder(LadderKind kind, const Eigen::VectorXcd& weights,
                                  const StateVector& state, int max_dim) {
  const SymmetricSpace& src = state.space();
  const int n = src.n_modes();
  const int m = src.level();
  if (weights.size() != n) throw std::invalid_argument("ladder direction has wrong length");
  if (kind == LadderKind::kAnnihilate && m < 1) {
    throw std::invalid_argument("cannot annihilate the vacuum level");
  }
  const int target_level = (kind == LadderKind::kCreate) ? m + 1 : m - 1;
  SymmetricSpace dst(n, target_level, max_dim);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dst.dim());
  std::vector<int> shifted;
  for (int idx = 0; idx < src.dim(); ++idx) {
    const std::complex<double> amp = state.coeff(idx);
    if (amp == std::complex<double>(0.0, 0.0)) continue;
    const Occupation& occ = src.occupation(idx);
    for (int i = 0; i < n; ++i) {
      if (weights[i] == std::complex<double>(0.0, 0.0)) continue;
      if (kind == LadderKind::kAnnihilate && occ[i] == 0) continue;
      shifted = occ.counts();
      double factor;
      if (kind == LadderKind::kCreate) {
        factor = std::sqrt(static_cast<double>(occ[i] + 1));
        shifted[static_cast<size_t>(i)] += 1;
      } else {
        factor = std::sqrt(static_cast<double>(occ[i]));
        shifted[static_cast<size_t>(i)] -= 1;
      }
      out[*dst.find(shifted)] += weights[i] * factor * amp;
    }
  }
  return StateVector(std::move(dst), std::move(out));
}

}  // namespace

StateVector apply_ladder(LadderKind kind, int mode, const StateVector& state, int max_dim) {
  const int n = state.space().n_modes();
  if (mode < 0 || mode >= n) throw std::invalid_argument("ladder mode index out of range");
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
  w[mode] = 1.0;
  return apply_weighted_ladder(kind, w, state, max_dim);
}

StateVector apply_ladder(LadderKind kind, const Eigen::VectorXcd& direction,
                         const StateVector& state, int max_dim) {
  // a*(w) carries the coefficients w_i; a(w) carries conj(w_i).
  if (kind == LadderKind::kCreate) {
    return apply_weighted_ladder(kind, direction, state, max_dim);
  }
  return apply_weighted_ladder(kind, direction.conjugate(), state, max_dim);
}

namespace {

Eigen::MatrixXcd ladder_matrix_impl(LadderKind kind, const Eigen::VectorXcd& weights,
                                    const SymmetricSpace& domain, int max_dim) {
  const int m = domain.level();
  if (kind == LadderKind::kAnnihilate && m < 1) {
    throw std::invalid_argument("cannot annihilate the vacuum level");
  }
  const int target_level = (kind == LadderKind::kCreate) ? m + 1 : m - 1;
  SymmetricSpace dst(domain.n_modes(), target_level, max_dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dst.dim(), domain.dim());
  std::vector<int> shifted;
  for (int col = 0; col < domain.dim(); ++col) {
    const Occupation& occ = domain.occupation(col);
    for (int i = 0; i < domain.n_modes(); ++i) {
      if (weights[i] == std::complex<double>(0.0, 0.0)) continue;
      if (kind == LadderKind::kAnnihilate && occ[i] == 0) continue;
      shifted = occ.counts();
      double factor;
      if (kind == LadderKind::kCreate) {
        factor = std::sqrt(static_cast<double>(occ[i] + 1));
        shifted[static_cast<size_t>(i)] += 1;
      } else {
        factor = std::sqrt(static_cast<double>(occ[i]));
        shifted[static_cast<size_t>(i)] -= 1;
      }
      out(*dst.find(shifted), col) += weights[i] * factor;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd ladder_matrix(LadderKind kind, int mode, const SymmetricSpace& domain,
                               int max_dim) {
  if (mode < 0 || mode >= domain.n_modes()) {
    throw std::invalid_argument("ladder mode index out of range");
  }
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(domain.n_modes());
  w[mode] = 1.0;
  return ladder_matrix_impl(kind, w, domain, max_dim);
}

Eigen::MatrixXcd ladder_matrix(LadderKind kind, const Eigen::VectorXcd& direction,
                               const SymmetricSpace& domain, int max_dim) {
  if (direction.size() != domain.n_modes()) {
    throw std::invalid_argument("ladder direction has wrong length");
  }
  if (kind == LadderKind::kCreate) {
    return ladder_matrix_impl(kind, direction, domain, max_dim);
  }
  return ladder_matrix_impl(kind, direction.conjugate(), domain, max_dim);
}

StateVector random_state(const SymmetricSpace& space, RngStream& rng) {
  return StateVector(space, random_unit_vector(space.dim(), rng));
}

}  // namespace suncs
