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

// Game description: who beats whom (payoff and advantage matrices), who
// meets whom (selection matrix), the sigmoid link between ratings and win
// probabilities, and estimation of a payoff matrix from observed games.

#ifndef ELOTOPE_GAME_HPP
#define ELOTOPE_GAME_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "elotope/errors.hpp"
#include "elotope/graph.hpp"
#include "elotope/hodge.hpp"

namespace elotope {

/// Win probabilities closer than this to 0 or 1 have no usable advantage.
inline constexpr double kPayoffMargin = 1e-6;
inline constexpr double kSelectionTolerance = 1e-12;

/// Strictly increasing link from rating differences to win probabilities.
/// `integral` is an antiderivative of `value`; the solver uses it as a
/// merit function.
struct SigmoidLink {
  std::string name;
  double (*value)(double);
  double (*inverse)(double);
  double (*derivative)(double);
  double (*integral)(double);

  static SigmoidLink logistic() {
    return {"logistic",
            [](double x) {
              if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
              const double e = std::exp(x);
              return e / (1.0 + e);
            },
            [](double p) { return std::log(p) - std::log1p(-p); },
            [](double x) {
              const double e = std::exp(-std::abs(x));
              return e / ((1.0 + e) * (1.0 + e));
            },
            [](double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }};
  }
};

/// P_ij = probability that player i beats player j. No draws: P_ij + P_ji = 1.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;

  explicit PayoffMatrix(Matrix probs) : probs_(std::move(probs)) {
    detail::require_square(probs_, "payoff matrix");
    detail::require_finite(probs_, "payoff matrix");
    const Index m = probs_.rows();
    for (Index i = 0; i < m; ++i) {
      if (std::abs(probs_(i, i) - 0.5) > kSkewTolerance)
        throw ValidationError("payoff matrix: diagonal entry " + std::to_string(i) + " must be 0.5");
      probs_(i, i) = 0.5;
      for (Index j = 0; j < m; ++j) {
        if (i == j) continue;
        const double p = probs_(i, j);
        if (!(p > 0.0 && p < 1.0))
          throw ValidationError("payoff matrix: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") must lie strictly inside (0,1)");
        if (std::abs(p + probs_(j, i) - 1.0) > kSkewTolerance)
          throw ValidationError("payoff matrix: P[i][j] + P[j][i] != 1 at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      }
    }
  }

  static PayoffMatrix even(Index m) { return PayoffMatrix(Matrix::Constant(m, m, 0.5)); }

  /// Two-player game in which player 0 beats player 1 with probability p.
  static PayoffMatrix two_player(double p) {
    Matrix probs(2, 2);
    probs << 0.5, p, 1.0 - p, 0.5;
    return PayoffMatrix(std::move(probs));
  }

  Index dim() const noexcept { return probs_.rows(); }
  const Matrix& matrix() const noexcept { return probs_; }
  double operator()(Index i, Index j) const { return probs_(i, j); }

 private:
  Matrix probs_;
};

/// A = link^{-1}(P), skew-symmetric.
class AdvantageMatrix {
 public:
  AdvantageMatrix() = default;
  explicit AdvantageMatrix(SkewMatrix skew) : skew_(std::move(skew)) {}
  explicit AdvantageMatrix(Matrix entries) : skew_(std::move(entries)) {}

  Index dim() const noexcept { return skew_.dim(); }
  const SkewMatrix& skew() const noexcept { return skew_; }
  const Matrix& matrix() const noexcept { return skew_.matrix(); }
  double operator()(Index i, Index j) const { return skew_(i, j); }

 private:
  SkewMatrix skew_;
};

/// Q_ij = weight of the unordered pairing {i,j}, stored symmetrically so the
/// entries total 2. The pairing graph must be connected. A single player is
/// accepted with the 1x1 zero matrix.
class SelectionMatrix {
 public:
  SelectionMatrix() = default;

  explicit SelectionMatrix(Matrix weights) : weights_(std::move(weights)) {
    detail::require_square(weights_, "selection matrix");
    detail::require_finite(weights_, "selection matrix");
    const Index m = weights_.rows();
    for (Index i = 0; i < m; ++i) {
      if (weights_(i, i) != 0.0)
        throw ValidationError("selection matrix: diagonal entry " + std::to_string(i) + " must be 0");
      for (Index j = 0; j < m; ++j) {
        if (weights_(i, j) < 0.0)
          throw ValidationError("selection matrix: entries must be nonnegative");
        if (std::abs(weights_(i, j) - weights_(j, i)) > kSelectionTolerance)
          throw ValidationError("selection matrix: not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
    }
    if (m == 1) return;
    if (std::abs(weights_.sum() - 2.0) > kSelectionTolerance)
      throw ValidationError("selection matrix: entries must sum to 2 (sum = " +
                            std::to_string(weights_.sum()) + ")");
    if (count_components(weights_) != 1)
      throw ValidationError("selection matrix: pairing graph is not connected");
  }

  Index dim() const noexcept { return weights_.rows(); }
  const Matrix& matrix() const noexcept { return weights_; }
  double operator()(Index i, Index j) const { return weights_(i, j); }

 private:
  Matrix weights_;
};

/// One observed game between player_i and player_j.
struct MatchRecord {
  std::size_t player_i = 0;
  std::size_t player_j = 0;
  std::size_t winner = 0;
  std::uint64_t sequence = 0;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

inline void validate_record(const MatchRecord& r, std::size_t m) {
  if (r.player_i >= m || r.player_j >= m)
    throw ValidationError("match " + std::to_string(r.sequence) + ": player index out of range");
  if (r.player_i == r.player_j)
    throw ValidationError("match " + std::to_string(r.sequence) + ": a player cannot play itself");
  if (r.winner != r.player_i && r.winner != r.player_j)
    throw ValidationError("match " + std::to_string(r.sequence) + ": winner must be one of the players");
}

inline AdvantageMatrix advantage_from_payoff(const PayoffMatrix& payoff,
                                             const SigmoidLink& link = SigmoidLink::logistic()) {
  const Index m = payoff.dim();
  Matrix a = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (i == j) continue;
      const double p = payoff(i, j);
      if (p < kPayoffMargin || p > 1.0 - kPayoffMargin)
        throw ValidationError("advantage: payoff entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is too close to 0 or 1; smooth the estimate");
      a(i, j) = link.inverse(p);
    }
  }
  return AdvantageMatrix(SkewMatrix(std::move(a)));
}

inline PayoffMatrix payoff_from_advantage(const AdvantageMatrix& advantage,
                                          const SigmoidLink& link = SigmoidLink::logistic()) {
  const Index m = advantage.dim();
  Matrix p = Matrix::Constant(m, m, 0.5);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      p(i, j) = link.value(advantage(i, j));
      p(j, i) = link.value(advantage(j, i));
    }
  }
  return PayoffMatrix(std::move(p));
}

/// Smoothed win frequencies: (wins_ij + s) / (games_ij + 2 s). Every
/// unordered pair must have been observed at least once.
inline PayoffMatrix estimate_payoff(std::span<const MatchRecord> records, std::size_t m,
                                    double smoothing = 0.5) {
  if (!(smoothing > 0.0) || !std::isfinite(smoothing))
    throw ValidationError("estimate_payoff: smoothing must be positive");
  if (m < 1) throw ValidationError("estimate_payoff: need at least one player");
  Eigen::MatrixXd wins = Eigen::MatrixXd::Zero(m, m);
  for (const auto& r : records) {
    validate_record(r, m);
    const std::size_t loser = r.winner == r.player_i ? r.player_j : r.player_i;
    wins(r.winner, loser) += 1.0;
  }
  std::string missing;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (wins(i, j) + wins(j, i) == 0.0)
        missing += (missing.empty() ? "" : ", ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!missing.empty())
    throw ValidationError("estimate_payoff: no games observed for pairs " + missing);

  Matrix p = Matrix::Constant(m, m, 0.5);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double games = wins(i, j) + wins(j, i);
      p(i, j) = (wins(i, j) + smoothing) / (games + 2.0 * smoothing);
      p(j, i) = 1.0 - p(i, j);
    }
  }
  return PayoffMatrix(std::move(p));
}

inline SelectionMatrix uniform_selection(std::size_t m) {
  if (m < 2) throw ValidationError("uniform_selection: need at least two players");
  const double w = 1.0 / static_cast<double>(m * (m - 1) / 2);
  Matrix q = Matrix::Constant(m, m, w);
  q.diagonal().setZero();
  return SelectionMatrix(std::move(q));
}

/// Equal weight 1/(m-1) on every edge of a spanning tree.
inline SelectionMatrix tree_selection(const EdgeList& edges, std::size_t m) {
  validate_spanning_tree(edges, m);
  Matrix q = Matrix::Zero(m, m);
  if (m < 2) return SelectionMatrix(std::move(q));
  const double w = 1.0 / static_cast<double>(m - 1);
  for (const auto& [a, b] : edges) q(a, b) = q(b, a) = w;
  return SelectionMatrix(std::move(q));
}

}  // namespace elotope

#endif  // ELOTOPE_GAME_HPP
