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

// Final Elo scores.
//
// A final score is a sum-zero root of the stability residual
//
//   F(r) = div(Q . link(grad r)) - div(Q . P),
//
// i.e. a rating vector whose expected one-step change is zero. F is the
// gradient of the weighted cross-entropy
//
//   Phi(r) = (1/m) sum_{i<j} Q_ij [Lambda(r_i - r_j) - P_ij (r_i - r_j)],
//
// with Lambda' = link, and its Jacobian is L(r)/m, where L(r) is the graph
// Laplacian with edge weights Q_ij link'(r_i - r_j). Newton steps are taken
// in the sum-zero subspace by bordering L with the constraint sum(delta) = 0
// and globalised with a backtracking line search on Phi.

#ifndef ELOTOPE_SOLVER_HPP
#define ELOTOPE_SOLVER_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elotope/errors.hpp"
#include "elotope/game.hpp"
#include "elotope/graph.hpp"
#include "elotope/hodge.hpp"
#include "elotope/random.hpp"

namespace elotope {

enum class SolveMethod { newton, damped_fixed_point, tree_closed_form };

inline std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::newton: return "newton";
    case SolveMethod::damped_fixed_point: return "damped_fixed_point";
    case SolveMethod::tree_closed_form: return "tree_closed_form";
  }
  return "unknown";
}

struct SolveOptions {
  double tol = 1e-10;  // on the max-norm of the residual
  int max_iter = 100;
  int fallback_max_iter = 100000;
  double max_step = 10.0;  // cap on the max-norm of one Newton step
};

struct SolveReport {
  RatingVector solution;
  double residual_norm = 0.0;
  int iterations = 0;
  SolveMethod method = SolveMethod::newton;
  bool converged = false;
};

namespace detail {

inline void require_same_dim(const PayoffMatrix& p, const SelectionMatrix& q) {
  if (p.dim() != q.dim())
    throw ValidationError("dimension mismatch: payoff is " + std::to_string(p.dim()) +
                          " players but selection is " + std::to_string(q.dim()));
}

inline double merit(const Vector& r, const Matrix& p, const Matrix& q, const SigmoidLink& link) {
  const Index m = r.size();
  double total = 0.0;
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      if (q(i, j) != 0.0) {
        const double x = r(i) - r(j);
        total += q(i, j) * (link.integral(x) - p(i, j) * x);
      }
  return total / static_cast<double>(m);
}

inline Vector residual(const Vector& r, const Matrix& p, const Matrix& q, const SigmoidLink& link) {
  const Index m = r.size();
  Vector f = Vector::Zero(m);
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      if (q(i, j) != 0.0) {
        const double term = q(i, j) * (link.value(r(i) - r(j)) - p(i, j));
        f(i) += term;
        f(j) -= term;
      }
  return f / static_cast<double>(m);
}

/// (1/m) L(r).
inline Matrix jacobian(const Vector& r, const Matrix& q, const SigmoidLink& link) {
  const Index m = r.size();
  Matrix jac = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      if (q(i, j) != 0.0) {
        const double w = q(i, j) * link.derivative(r(i) - r(j));
        jac(i, j) -= w;
        jac(j, i) -= w;
        jac(i, i) += w;
        jac(j, j) += w;
      }
  return jac / static_cast<double>(m);
}

/// Solves J delta = -f subject to sum(delta) = 0.
inline Vector constrained_newton_step(const Matrix& jac, const Vector& f) {
  const Index m = jac.rows();
  double scale = jac.diagonal().cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) scale = 1.0;
  Matrix bordered = Matrix::Zero(m + 1, m + 1);
  bordered.topLeftCorner(m, m) = jac;
  bordered.block(0, m, m, 1).setConstant(scale);
  bordered.block(m, 0, 1, m).setConstant(scale);
  Vector rhs = Vector::Zero(m + 1);
  rhs.head(m) = -f;
  const Vector sol = bordered.colPivHouseholderQr().solve(rhs);
  return sol.head(m);
}

inline void recenter(Vector& r) { r.array() -= r.mean(); }

}  // namespace detail

/// div(Q . link(grad r)) - div(Q . P). Final scores are its sum-zero roots.
inline Vector stability_residual(const Vector& ratings, const PayoffMatrix& payoff,
                                 const SelectionMatrix& selection,
                                 const SigmoidLink& link = SigmoidLink::logistic()) {
  detail::require_same_dim(payoff, selection);
  if (ratings.size() != payoff.dim())
    throw ValidationError("stability_residual: rating vector has the wrong dimension");
  return detail::residual(ratings, payoff.matrix(), selection.matrix(), link);
}

inline Vector stability_residual(const RatingVector& ratings, const PayoffMatrix& payoff,
                                 const SelectionMatrix& selection,
                                 const SigmoidLink& link = SigmoidLink::logistic()) {
  return stability_residual(ratings.values(), payoff, selection, link);
}

/// Unique sum-zero final score for a connected selection matrix. `start`
/// (recentred before use) defaults to the origin.
inline SolveReport solve_final_score(const PayoffMatrix& payoff, const SelectionMatrix& selection,
                                     const SigmoidLink& link = SigmoidLink::logistic(),
                                     const SolveOptions& opts = {},
                                     const std::optional<Vector>& start = std::nullopt) {
  detail::require_same_dim(payoff, selection);
  if (!(opts.tol > 0.0)) throw ValidationError("solve_final_score: tolerance must be positive");
  const Index m = payoff.dim();
  if (m == 1) return {RatingVector::zero(1), 0.0, 0, SolveMethod::newton, true};

  const Matrix& p = payoff.matrix();
  const Matrix& q = selection.matrix();
  Vector r = start ? *start : Vector::Zero(m);
  if (r.size() != m) throw ValidationError("solve_final_score: start has the wrong dimension");
  detail::recenter(r);

  Vector f = detail::residual(r, p, q, link);
  double phi = detail::merit(r, p, q, link);
  int iter = 0;
  bool polished = false;

  while (iter < opts.max_iter) {
    const double fnorm = f.lpNorm<Eigen::Infinity>();
    if (fnorm == 0.0) break;
    if (fnorm <= opts.tol) {
      // One extra step after meeting the tolerance; Newton is quadratic here.
      if (polished) break;
      polished = true;
    }

    Vector delta = detail::constrained_newton_step(detail::jacobian(r, q, link), f);
    if (!delta.allFinite()) break;
    const double dmax = delta.lpNorm<Eigen::Infinity>();
    if (dmax > opts.max_step) delta *= opts.max_step / dmax;
    const double slope = f.dot(delta);  // directional derivative of Phi

    bool accepted = false;
    for (double alpha = 1.0; alpha > 1e-16; alpha *= 0.5) {
      Vector trial = r + alpha * delta;
      detail::recenter(trial);
      const double trial_phi = detail::merit(trial, p, q, link);
      Vector trial_f = detail::residual(trial, p, q, link);
      const bool armijo = trial_phi <= phi + 1e-4 * alpha * slope;
      // Once Phi differences drop below rounding, compare residuals instead.
      const bool rounding_regime = std::abs(alpha * slope) <= 1e-13 * (1.0 + std::abs(phi));
      const bool residual_drop = trial_f.lpNorm<Eigen::Infinity>() < fnorm;
      if (armijo || (rounding_regime && residual_drop)) {
        r = std::move(trial);
        f = std::move(trial_f);
        phi = trial_phi;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    ++iter;
  }

  double fnorm = f.lpNorm<Eigen::Infinity>();
  if (fnorm <= opts.tol)
    return {RatingVector::centered(r), fnorm, iter, SolveMethod::newton, true};

  // Newton stalled: damped fixed-point iteration r <- r - step * F(r).
  double step = 1.0;
  int fallback_iter = 0;
  while (fallback_iter < opts.fallback_max_iter && fnorm > opts.tol) {
    Vector trial = r - step * f;
    detail::recenter(trial);
    const Vector trial_f = detail::residual(trial, p, q, link);
    const double trial_norm = trial_f.lpNorm<Eigen::Infinity>();
    ++fallback_iter;
    if (trial_norm > fnorm) {
      step *= 0.5;
      if (step < 1e-300) break;
      continue;
    }
    r = std::move(trial);
    f = trial_f;
    fnorm = trial_norm;
  }
  return {RatingVector::centered(r), fnorm, iter + fallback_iter, SolveMethod::damped_fixed_point,
          fnorm <= opts.tol};
}

inline SolveReport solve_final_score(const PayoffMatrix& payoff, const SelectionMatrix& selection,
                                     const SigmoidLink& link, double tol, int max_iter) {
  SolveOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  return solve_final_score(payoff, selection, link, opts);
}

/// Closed-form final score for a spanning-tree selection matrix: every tree
/// edge satisfies r_i - r_j = link^{-1}(P_ij) exactly, so each rating is the
/// signed sum of advantages along its path from `root`. Recentred to mean zero.
inline RatingVector tree_final_score(const PayoffMatrix& payoff, const EdgeList& edges,
                                     const SigmoidLink& link = SigmoidLink::logistic(),
                                     std::size_t root = 0) {
  const auto m = static_cast<std::size_t>(payoff.dim());
  validate_spanning_tree(edges, m);
  if (root >= m) throw ValidationError("tree_final_score: root out of range");
  std::vector<std::vector<std::size_t>> adjacent(m);
  for (const auto& [a, b] : edges) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  Vector r = Vector::Zero(static_cast<Index>(m));
  std::vector<bool> seen(m, false);
  std::queue<std::size_t> frontier;
  frontier.push(root);
  seen[root] = true;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (auto v : adjacent[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      r(v) = r(u) - link.inverse(payoff(u, v));
      frontier.push(v);
    }
  }
  return RatingVector::centered(r);
}

/// Where an Elotope point came from: a spanning tree with equal edge
/// weights, or a random connected selection matrix regenerated from `seed`.
struct ElotopeSource {
  enum class Kind { tree, random_q };
  Kind kind = Kind::tree;
  EdgeList edges;
  std::uint64_t seed = 0;

  std::string describe() const {
    return kind == Kind::tree ? "tree:" + describe_edges(edges)
                              : "random_q:" + std::to_string(seed);
  }
};

struct ElotopeSample {
  std::vector<RatingVector> points;
  std::vector<ElotopeSource> sources;
};

/// Random connected selection matrix: a uniform spanning tree plus each
/// remaining pair with probability 1/2, weights uniform in [0.1, 1],
/// normalised to total 2.
inline SelectionMatrix random_connected_selection(std::size_t m, std::uint64_t seed) {
  if (m < 2) throw ValidationError("random_connected_selection: need at least two players");
  Rng rng(seed);
  Matrix q = Matrix::Zero(static_cast<Index>(m), static_cast<Index>(m));
  for (const auto& [a, b] : random_spanning_tree(m, rng)) q(a, b) = q(b, a) = rng.uniform(0.1, 1.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (q(i, j) == 0.0 && rng.bernoulli(0.5)) q(i, j) = q(j, i) = rng.uniform(0.1, 1.0);
  q *= 2.0 / q.sum();
  return SelectionMatrix(std::move(q));
}

/// Samples final scores over many selection matrices. All spanning trees are
/// used when there are at most `tree_budget` of them, otherwise
/// `tree_budget` uniform random trees. Each sample's generator is derived
/// from (seed, stream, index) so the result does not depend on order.
inline ElotopeSample sample_elotope(const PayoffMatrix& payoff,
                                    const SigmoidLink& link = SigmoidLink::logistic(),
                                    std::uint64_t tree_budget = 16, std::uint64_t random_q_budget = 16,
                                    std::uint64_t seed = 0, const SolveOptions& opts = {}) {
  const auto m = static_cast<std::size_t>(payoff.dim());
  ElotopeSample sample;
  auto add = [&](RatingVector point, ElotopeSource source) {
    sample.points.push_back(std::move(point));
    sample.sources.push_back(std::move(source));
  };

  if (tree_budget > 0) {
    const auto total = spanning_tree_count(m);
    if (total && *total <= tree_budget) {
      for (auto& tree : enumerate_spanning_trees(m)) {
        RatingVector point = tree_final_score(payoff, tree, link);
        add(std::move(point), {ElotopeSource::Kind::tree, std::move(tree), 0});
      }
    } else {
      const std::uint64_t stream = derive_seed(seed, 0);
      for (std::uint64_t k = 0; k < tree_budget; ++k) {
        Rng rng(derive_seed(stream, k));
        EdgeList tree = random_spanning_tree(m, rng);
        RatingVector point = tree_final_score(payoff, tree, link);
        add(std::move(point), {ElotopeSource::Kind::tree, std::move(tree), 0});
      }
    }
  }

  if (m >= 2) {
    const std::uint64_t stream = derive_seed(seed, 1);
    for (std::uint64_t k = 0; k < random_q_budget; ++k) {
      const std::uint64_t sub = derive_seed(stream, k);
      const SolveReport report =
          solve_final_score(payoff, random_connected_selection(m, sub), link, opts);
      if (!report.converged)
        throw ConvergenceError("sample_elotope: solver did not converge for random_q:" +
                                 std::to_string(sub));
      add(report.solution, {ElotopeSource::Kind::random_q, {}, sub});
    }
  }
  return sample;
}

}  // namespace elotope

#endif  // ELOTOPE_SOLVER_HPP
