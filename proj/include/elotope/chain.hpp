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

// The Elo rating Markov chain.
//
// Each step draws an unordered pair {i,j} with probability Q_ij (the upper
// triangle of Q is a probability mass function), draws the winner from
// P_ij, and moves a single shared delta = gain * (S - link(r_i - r_j)) from
// one rating to the other. Ratings start at the origin and the sum of
// ratings is conserved up to rounding.

#ifndef ELOTOPE_CHAIN_HPP
#define ELOTOPE_CHAIN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "elotope/errors.hpp"
#include "elotope/game.hpp"
#include "elotope/hodge.hpp"
#include "elotope/random.hpp"

namespace elotope {

class ChainConfig {
 public:
  ChainConfig(PayoffMatrix payoff, SelectionMatrix selection, double gain,
              SigmoidLink link = SigmoidLink::logistic(), std::uint64_t seed = 0)
      : payoff_(std::move(payoff)),
        selection_(std::move(selection)),
        gain_(gain),
        link_(std::move(link)),
        seed_(seed) {
    if (payoff_.dim() != selection_.dim())
      throw ValidationError("chain config: payoff is " + std::to_string(payoff_.dim()) +
                            " players but selection is " + std::to_string(selection_.dim()));
    if (!(gain_ > 0.0) || !std::isfinite(gain_))
      throw ValidationError("chain config: gain must be positive and finite");
    const Index m = payoff_.dim();
    double total = 0.0;
    for (Index i = 0; i < m; ++i) {
      for (Index j = i + 1; j < m; ++j) {
        if (selection_(i, j) <= 0.0) continue;
        total += selection_(i, j);
        pairs_.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        cumulative_.push_back(total);
      }
    }
  }

  const PayoffMatrix& payoff() const noexcept { return payoff_; }
  const SelectionMatrix& selection() const noexcept { return selection_; }
  double gain() const noexcept { return gain_; }
  const SigmoidLink& link() const noexcept { return link_; }
  std::uint64_t seed() const noexcept { return seed_; }
  Index dim() const noexcept { return payoff_.dim(); }

  /// Inverse-CDF draw over the pairs with positive weight.
  Edge sample_pair(Rng& rng) const {
    if (pairs_.empty()) throw ValidationError("chain config: a single player has no games to play");
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto k = std::min<std::size_t>(it - cumulative_.begin(), pairs_.size() - 1);
    return pairs_[k];
  }

 private:
  PayoffMatrix payoff_;
  SelectionMatrix selection_;
  double gain_;
  SigmoidLink link_;
  std::uint64_t seed_;
  std::vector<Edge> pairs_;
  std::vector<double> cumulative_;
};

struct ChainState {
  std::uint64_t step = 0;
  Vector ratings;
};

struct StepResult {
  ChainState state;
  MatchRecord match;
};

struct Trajectory {
  std::uint64_t stride = 1;
  std::vector<ChainState> states;
  std::vector<MatchRecord> matches;
};

inline ChainState init_chain(const ChainConfig& config) {
  return {0, Vector::Zero(config.dim())};
}

/// Applies the Elo update for a decided game in place.
inline void apply_outcome(Vector& ratings, std::size_t i, std::size_t j, std::size_t winner,
                          double gain, const SigmoidLink& link) {
  const double score = winner == i ? 1.0 : 0.0;
  const double delta = gain * (score - link.value(ratings(i) - ratings(j)));
  ratings(i) += delta;
  ratings(j) -= delta;
}

inline StepResult step_chain(const ChainState& state, const ChainConfig& config, Rng& rng) {
  const auto [i, j] = config.sample_pair(rng);
  const std::size_t winner = rng.bernoulli(config.payoff()(i, j)) ? i : j;
  StepResult out{{state.step + 1, state.ratings}, {i, j, winner, state.step}};
  apply_outcome(out.state.ratings, i, j, winner, config.gain(), config.link());
  return out;
}

/// E[r' | r] = r + gain * sum_j Q_ij (P_ij - link(r_i - r_j)).
inline Vector expected_step(const Vector& ratings, const ChainConfig& config) {
  const Index m = config.dim();
  const Matrix& q = config.selection().matrix();
  const Matrix& p = config.payoff().matrix();
  Vector out = ratings;
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      if (q(i, j) == 0.0) continue;
      const double drift =
          config.gain() * q(i, j) * (p(i, j) - config.link().value(ratings(i) - ratings(j)));
      out(i) += drift;
      out(j) -= drift;
    }
  }
  return out;
}

/// Runs `steps` transitions from the origin, recording the state at step 0
/// and at every multiple of `record_stride`.
inline Trajectory run_chain(const ChainConfig& config, std::uint64_t steps,
                            std::uint64_t record_stride = 1) {
  if (record_stride < 1) throw ValidationError("run_chain: stride must be at least 1");
  Rng rng(config.seed());
  Trajectory traj;
  traj.stride = record_stride;
  traj.matches.reserve(steps);
  traj.states.reserve(steps / record_stride + 1);
  ChainState state = init_chain(config);
  traj.states.push_back(state);
  for (std::uint64_t t = 0; t < steps; ++t) {
    auto [next, match] = step_chain(state, config, rng);
    state = std::move(next);
    traj.matches.push_back(match);
    if (state.step % record_stride == 0) traj.states.push_back(state);
  }
  return traj;
}

}  // namespace elotope

#endif  // ELOTOPE_CHAIN_HPP
