// Copyright 2026 The Elotope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Combinatorial Hodge operators on the complete comparison graph.
//
// A skew-symmetric m x m matrix splits orthogonally into a gradient part
// (a strongly transitive additive comparison matrix, STACM, whose entries
// satisfy A_ij + A_jk + A_ki = 0) and a cyclic part with zero row means.
// The inner product throughout is <A, B> = sum_ij A_ij B_ij and norms are
// Frobenius.

#ifndef ELOTOPE_HODGE_HPP
#define ELOTOPE_HODGE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "elotope/errors.hpp"

namespace elotope {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kSkewTolerance = 1e-12;
inline constexpr double kSumZeroTolerance = 1e-9;

namespace detail {

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& x, const char* what) {
  if (!x.allFinite()) throw ValidationError(std::string(what) + ": entries must be finite");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw ValidationError(std::string(what) + ": matrix must be square and non-empty");
}

}  // namespace detail

/// A finite matrix with A == -A^T (checked to kSkewTolerance on construction).
class SkewMatrix {
 public:
  SkewMatrix() = default;

  explicit SkewMatrix(Matrix entries, double tol = kSkewTolerance) : entries_(std::move(entries)) {
    detail::require_square(entries_, "skew matrix");
    detail::require_finite(entries_, "skew matrix");
    const double err = (entries_ + entries_.transpose()).cwiseAbs().maxCoeff();
    if (err > tol)
      throw ValidationError("skew matrix: entries[i][j] != -entries[j][i] (max deviation " +
                            std::to_string(err) + ")");
  }

  static SkewMatrix zero(Index m) { return SkewMatrix(Matrix::Zero(m, m)); }

  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }
  double operator()(Index i, Index j) const { return entries_(i, j); }

  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
    return SkewMatrix(a.entries_ + b.entries_);
  }
  friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) {
    return SkewMatrix(a.entries_ - b.entries_);
  }
  friend SkewMatrix operator*(double s, const SkewMatrix& a) { return SkewMatrix(s * a.entries_); }

 private:
  Matrix entries_;
};

/// Ratings normalised to the sum-zero subspace.
class RatingVector {
 public:
  RatingVector() = default;

  explicit RatingVector(Vector values, double tol = kSumZeroTolerance) : values_(std::move(values)) {
    if (values_.size() < 1) throw ValidationError("rating vector: dimension must be positive");
    detail::require_finite(values_, "rating vector");
    if (std::abs(values_.sum()) > tol)
      throw ValidationError("rating vector: values must sum to zero (sum = " +
                            std::to_string(values_.sum()) + ")");
  }

  /// Subtracts the mean, so any finite vector is accepted.
  static RatingVector centered(const Vector& values) {
    detail::require_finite(values, "rating vector");
    return RatingVector(values.array() - values.mean());
  }

  static RatingVector zero(Index m) { return RatingVector(Vector::Zero(m)); }

  Index dim() const noexcept { return values_.size(); }
  const Vector& values() const noexcept { return values_; }
  double operator[](Index i) const { return values_(i); }

 private:
  Vector values_;
};

/// grad(v)_ij = v_i - v_j.
template <typename Derived>
SkewMatrix grad(const Eigen::MatrixBase<Derived>& v) {
  const Vector x = v;
  const Index m = x.size();
  return SkewMatrix(x.replicate(1, m) - x.transpose().replicate(m, 1));
}

/// Row means: div(A) = (A 1) / m.
template <typename Derived>
Vector div(const Eigen::MatrixBase<Derived>& a) {
  return a.rowwise().mean();
}

inline Vector div(const SkewMatrix& a) { return div(a.matrix()); }

/// rot(A)_ij = (1/m) sum_k (A_ij + A_jk + A_ki); the projector onto cyclic matrices.
inline SkewMatrix rot(const SkewMatrix& a) {
  const Index m = a.dim();
  const Matrix& x = a.matrix();
  Matrix out(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      double s = 0.0;
      for (Index k = 0; k < m; ++k) s += x(i, j) + x(j, k) + x(k, i);
      out(i, j) = s / static_cast<double>(m);
    }
  }
  // Summation order differs between (i,j) and (j,i); restore exact skewness.
  return SkewMatrix(0.5 * (out - out.transpose()));
}

/// Elementwise inner product sum_ij A_ij B_ij.
template <typename DA, typename DB>
double inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.cwiseProduct(b).sum();
}

template <typename Derived>
double frobenius_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

inline double frobenius_norm(const SkewMatrix& a) { return a.matrix().norm(); }

struct HodgeParts {
  SkewMatrix transitive;  // grad(div(A)), a STACM
  SkewMatrix cyclic;      // A - grad(div(A))
};

inline HodgeParts hodge_decompose(const SkewMatrix& a) {
  SkewMatrix transitive = grad(div(a));
  SkewMatrix cyclic(a.matrix() - transitive.matrix());
  return {std::move(transitive), std::move(cyclic)};
}

/// True when the cyclic component has Frobenius norm at most `tol`.
inline bool is_stacm(const SkewMatrix& a, double tol = 1e-9) {
  return frobenius_norm(hodge_decompose(a).cyclic) <= tol;
}

}  // namespace elotope

#endif  // ELOTOPE_HODGE_HPP
