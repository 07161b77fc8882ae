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

// Rock-Paper-Scissors laboratory: three players with mixed strategies whose
// purity is controlled by a parameter t in [0, 1). Two families are
// provided. In the Rock-Scissors family players 1 and 3 drift towards pure
// Rock and pure Scissors while player 2 stays at (1/2, 0, 1/2); the game is
// predominantly transitive. In the Rock-Paper-Scissors family player i
// drifts from the uniform strategy towards the i-th pure strategy and the
// game becomes strongly cyclic.
//
// Ground truth comes from the closed form P = B^T M B, where column i of B
// is player i's strategy distribution and M is the base game below.
// Simulated games draw strategies and break draws with a fair coin.

#ifndef ELOTOPE_RPS_LAB_HPP
#define ELOTOPE_RPS_LAB_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "elotope/errors.hpp"
#include "elotope/game.hpp"
#include "elotope/intransitivity.hpp"
#include "elotope/random.hpp"

namespace elotope::rps {

enum Strategy : Index { rock = 0, paper = 1, scissors = 2 };

/// Row strategy's probability of beating the column strategy, draws as 1/2.
inline Matrix base_game() {
  Matrix m(3, 3);
  m << 0.5, 0.0, 1.0,
       1.0, 0.5, 0.0,
       0.0, 1.0, 0.5;
  return m;
}

/// 3 x m column-stochastic matrix; column i is player i's distribution over
/// (rock, paper, scissors).
class StrategyProfile {
 public:
  StrategyProfile() = default;

  explicit StrategyProfile(Matrix columns) : columns_(std::move(columns)) {
    if (columns_.rows() != 3 || columns_.cols() < 1)
      throw ValidationError("strategy profile: expected 3 rows and at least one player");
    detail::require_finite(columns_, "strategy profile");
    if (columns_.minCoeff() < 0.0 || columns_.maxCoeff() > 1.0)
      throw ValidationError("strategy profile: probabilities must lie in [0,1]");
    for (Index i = 0; i < columns_.cols(); ++i)
      if (std::abs(columns_.col(i).sum() - 1.0) > 1e-12)
        throw ValidationError("strategy profile: column " + std::to_string(i) + " must sum to 1");
  }

  Index players() const noexcept { return columns_.cols(); }
  const Matrix& matrix() const noexcept { return columns_; }
  double operator()(Strategy s, Index player) const { return columns_(s, player); }

 private:
  Matrix columns_;
};

enum class Family { rock_scissors, rock_paper_scissors };

inline std::string_view to_string(Family f) {
  return f == Family::rock_scissors ? "rs" : "rps";
}

inline Family parse_family(std::string_view name) {
  if (name == "rs") return Family::rock_scissors;
  if (name == "rps") return Family::rock_paper_scissors;
  throw ValidationError("unknown family '" + std::string(name) + "' (expected rs or rps)");
}

inline void require_family_parameter(double t) {
  if (!(t >= 0.0 && t < 1.0))
    throw ValidationError("family parameter t must lie in [0,1), got " + std::to_string(t));
}

/// Player 1 plays Rock with probability (1+t)/2, player 2 with 1/2 and
/// player 3 with (1-t)/2; Scissors takes the rest, Paper is never played.
inline StrategyProfile rs_family(double t) {
  require_family_parameter(t);
  Matrix even(3, 3), opposed(3, 3);
  even << 0.5, 0.5, 0.5,
          0.0, 0.0, 0.0,
          0.5, 0.5, 0.5;
  opposed << 1.0, 0.5, 0.0,
             0.0, 0.0, 0.0,
             0.0, 0.5, 1.0;
  return StrategyProfile((1.0 - t) * even + t * opposed);
}

/// Column i = (1-t) * uniform + t * e_i.
inline StrategyProfile rps_family(double t) {
  require_family_parameter(t);
  return StrategyProfile((1.0 - t) * Matrix::Constant(3, 3, 1.0 / 3.0) + t * Matrix::Identity(3, 3));
}

inline StrategyProfile family_profile(Family family, double t) {
  return family == Family::rock_scissors ? rs_family(t) : rps_family(t);
}

struct FamilyPoint {
  Family family = Family::rock_scissors;
  double t = 0.0;
  StrategyProfile profile;
};

inline FamilyPoint make_family_point(Family family, double t) {
  return {family, t, family_profile(family, t)};
}

/// True when `point.profile` is what its family formula gives at `point.t`.
inline bool is_consistent(const FamilyPoint& point) {
  return (point.profile.matrix() - family_profile(point.family, point.t).matrix())
             .cwiseAbs()
             .maxCoeff() <= 1e-12;
}

/// B^T M B without any clean-up.
inline Matrix raw_payoff(const StrategyProfile& profile) {
  return profile.matrix().transpose() * base_game() * profile.matrix();
}

/// B^T M B with the diagonal pinned to 1/2 and the lower triangle set to
/// 1 - upper so P_ij + P_ji = 1 holds exactly.
inline PayoffMatrix ground_truth_payoff(const StrategyProfile& profile) {
  Matrix p = raw_payoff(profile);
  for (Index i = 0; i < p.rows(); ++i) {
    p(i, i) = 0.5;
    for (Index j = i + 1; j < p.cols(); ++j) p(j, i) = 1.0 - p(i, j);
  }
  return PayoffMatrix(std::move(p));
}

inline AdvantageMatrix ground_truth_advantage(const StrategyProfile& profile,
                                              const SigmoidLink& link = SigmoidLink::logistic()) {
  return advantage_from_payoff(ground_truth_payoff(profile), link);
}

inline Strategy sample_strategy(const StrategyProfile& profile, Index player, Rng& rng) {
  const double u = rng.uniform();
  if (u < profile(rock, player)) return rock;
  if (u < profile(rock, player) + profile(paper, player)) return paper;
  return scissors;
}

/// `games_per_pair` games for every unordered pair, pairs in lexicographic
/// order. Draws are settled by a fair coin.
inline std::vector<MatchRecord> simulate_matches(const StrategyProfile& profile,
                                                 std::uint64_t games_per_pair, std::uint64_t seed) {
  if (games_per_pair < 1) throw ValidationError("simulate_matches: games_per_pair must be at least 1");
  const Matrix game = base_game();
  const auto m = static_cast<std::size_t>(profile.players());
  Rng rng(seed);
  std::vector<MatchRecord> records;
  records.reserve(m * (m - 1) / 2 * games_per_pair);
  std::uint64_t sequence = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::uint64_t g = 0; g < games_per_pair; ++g) {
        const Strategy si = sample_strategy(profile, static_cast<Index>(i), rng);
        const Strategy sj = sample_strategy(profile, static_cast<Index>(j), rng);
        const double outcome = game(si, sj);
        const bool i_wins = outcome == 0.5 ? rng.bernoulli(0.5) : outcome == 1.0;
        records.push_back({i, j, i_wins ? i : j, sequence++});
      }
    }
  }
  return records;
}

struct ExperimentRow {
  Family family = Family::rock_scissors;
  double t = 0.0;
  std::uint64_t games_per_pair = 0;
  std::uint64_t trial = 0;
  double i_truth = 1.0;
  double i_hat = 1.0;
};

struct TruthRow {
  Family family = Family::rock_scissors;
  double t = 0.0;
  double i_truth = 1.0;
};

inline double truth_measure(Family family, double t, const SigmoidLink& link = SigmoidLink::logistic()) {
  return measure_intransitivity(ground_truth_advantage(family_profile(family, t), link)).measure;
}

/// Ground-truth intransitivity along a grid of t values, sorted by t.
inline std::vector<TruthRow> truth_curve(Family family, std::vector<double> t_values,
                                         const SigmoidLink& link = SigmoidLink::logistic()) {
  std::sort(t_values.begin(), t_values.end());
  std::vector<TruthRow> rows;
  rows.reserve(t_values.size());
  for (double t : t_values) rows.push_back({family, t, truth_measure(family, t, link)});
  return rows;
}

/// For every (t, n, trial): ground-truth I and the empirical estimate from n
/// simulated games per pair. Rows are sorted by (t, n, trial); each trial's
/// generator is derived from (seed, family, t index, n index, trial).
inline std::vector<ExperimentRow> run_experiment(Family family, std::vector<double> t_values,
                                                 std::vector<std::uint64_t> games_schedule,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 double smoothing = 0.5,
                                                 const SigmoidLink& link = SigmoidLink::logistic()) {
  if (t_values.empty()) throw ValidationError("run_experiment: t grid is empty");
  if (games_schedule.empty()) throw ValidationError("run_experiment: games schedule is empty");
  if (trials < 1) throw ValidationError("run_experiment: need at least one trial");
  std::sort(t_values.begin(), t_values.end());
  std::sort(games_schedule.begin(), games_schedule.end());

  const std::uint64_t family_seed = derive_seed(seed, static_cast<std::uint64_t>(family));
  std::vector<ExperimentRow> rows;
  rows.reserve(t_values.size() * games_schedule.size() * trials);
  for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
    const double t = t_values[ti];
    const StrategyProfile profile = family_profile(family, t);
    const double truth = measure_intransitivity(ground_truth_advantage(profile, link)).measure;
    const auto m = static_cast<std::size_t>(profile.players());
    for (std::size_t ni = 0; ni < games_schedule.size(); ++ni) {
      for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(derive_seed(derive_seed(family_seed, ti), ni), trial);
        const auto records = simulate_matches(profile, games_schedule[ni], trial_seed);
        const double estimate = measure_from_records(records, m, smoothing, link).measure;
        rows.push_back({family, t, games_schedule[ni], trial, truth, estimate});
      }
    }
  }
  return rows;
}

}  // namespace elotope::rps

#endif  // ELOTOPE_RPS_LAB_HPP
