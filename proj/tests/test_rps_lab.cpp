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

#include <gtest/gtest.h>

#include <cmath>

#include "elotope/rps_lab.hpp"
#include "generators.hpp"

namespace elotope::rps {
namespace {

std::vector<double> grid(double start, double step, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(std::round((start + k * step) * 1e12) / 1e12);
  return out;
}

// Expected win probability by enumerating the nine strategy pairs.
double enumerate_payoff(const StrategyProfile& b, Index i, Index j) {
  const Matrix game = base_game();
  double total = 0.0;
  for (Index s = 0; s < 3; ++s)
    for (Index u = 0; u < 3; ++u) total += b.matrix()(s, i) * b.matrix()(u, j) * game(s, u);
  return total;
}

TEST(BaseGameTest, ComplementaryOutcomes) {
  EXPECT_EQ(base_game() + base_game().transpose(), Matrix::Ones(3, 3));
  EXPECT_EQ(base_game()(rock, scissors), 1.0);
  EXPECT_EQ(base_game()(paper, rock), 1.0);
  EXPECT_EQ(base_game()(scissors, paper), 1.0);
}

TEST(FamilyTest, RockScissorsCases) {
  for (Index i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(rs_family(0)(rock, i), 0.5);
    EXPECT_DOUBLE_EQ(rs_family(0)(paper, i), 0.0);
    EXPECT_DOUBLE_EQ(rs_family(0)(scissors, i), 0.5);
  }
  EXPECT_DOUBLE_EQ(rs_family(0.5)(rock, 0), 0.75);
  EXPECT_DOUBLE_EQ(rs_family(0.5)(rock, 1), 0.5);
  EXPECT_DOUBLE_EQ(rs_family(0.5)(rock, 2), 0.25);
  EXPECT_DOUBLE_EQ(rs_family(0.8)(rock, 0), 0.9);
  EXPECT_NEAR(rs_family(0.8)(rock, 2), 0.1, 1e-15);
  EXPECT_THROW(rs_family(1.0), ValidationError);
  EXPECT_THROW(rs_family(-0.1), ValidationError);
}

TEST(FamilyTest, RockPaperScissorsCases) {
  for (Index i = 0; i < 3; ++i)
    for (Index s = 0; s < 3; ++s) EXPECT_DOUBLE_EQ(rps_family(0).matrix()(s, i), 1.0 / 3.0);
  EXPECT_NEAR(rps_family(0.5)(rock, 0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(rps_family(0.5)(paper, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(rps_family(0.85)(rock, 0), 0.9, 1e-15);
  EXPECT_NEAR(rps_family(0.85)(scissors, 2), 0.9, 1e-15);
  EXPECT_NEAR(rps_family(0.85)(paper, 0), 0.05, 1e-15);
  EXPECT_THROW(rps_family(1.0), ValidationError);
}

TEST(FamilyTest, PointsRegenerate) {
  auto point = make_family_point(Family::rock_paper_scissors, 0.3);
  EXPECT_TRUE(is_consistent(point));
  point.t = 0.4;
  EXPECT_FALSE(is_consistent(point));
  EXPECT_EQ(parse_family("rs"), Family::rock_scissors);
  EXPECT_THROW(parse_family("rpsls"), ValidationError);
}

TEST(StrategyProfileTest, Validation) {
  EXPECT_THROW(StrategyProfile(Matrix::Constant(3, 2, 0.5)), ValidationError);
  EXPECT_THROW(StrategyProfile(Matrix::Constant(2, 2, 0.5)), ValidationError);
  Matrix neg(3, 1);
  neg << 1.2, -0.2, 0.0;
  EXPECT_THROW(StrategyProfile{neg}, ValidationError);
}

TEST(GroundTruthTest, ClosedFormMatchesEnumeration) {
  for (double t : grid(0, 0.1, 10)) {
    for (const auto& profile : {rs_family(t), rps_family(t)}) {
      const Matrix raw = raw_payoff(profile);
      EXPECT_LE((raw + raw.transpose() - Matrix::Ones(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
      const PayoffMatrix p = ground_truth_payoff(profile);
      for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 3; ++j) {
          if (i != j) {
            EXPECT_NEAR(p(i, j), enumerate_payoff(profile, i, j), 1e-15);
          }
        }
      }
    }
  }
}

TEST(GroundTruthTest, UniformProfilesAreNeutral) {
  EXPECT_LE(ground_truth_advantage(rps_family(0)).matrix().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE(ground_truth_advantage(rs_family(0)).matrix().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT(measure_intransitivity(ground_truth_advantage(rps_family(0.5))).measure, 1.0);
}

TEST(GroundTruthTest, PureProfilesHaveNoAdvantage) {
  Matrix pure = Matrix::Identity(3, 3);
  EXPECT_THROW(ground_truth_advantage(StrategyProfile(pure)), ValidationError);
}

TEST(GroundTruthTest, RockScissorsCurve) {
  const auto curve = truth_curve(Family::rock_scissors, grid(0, 0.05, 20));
  EXPECT_EQ(curve.front().i_truth, 1.0);
  std::size_t argmin = 1;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    EXPECT_LT(curve[k].i_truth, 1.0) << curve[k].t;
    if (curve[k].i_truth < curve[argmin].i_truth) argmin = k;
    EXPECT_FALSE(is_stacm(ground_truth_advantage(rs_family(curve[k].t)).skew()));
  }
  EXPECT_GE(curve[argmin].t, 0.8);
  EXPECT_LE(curve[argmin].t, 0.95);
}

TEST(GroundTruthTest, RockPaperScissorsCurve) {
  const auto curve = truth_curve(Family::rock_paper_scissors, grid(0, 0.05, 20));
  EXPECT_EQ(curve.front().i_truth, 1.0);
  for (std::size_t k = 1; k < curve.size(); ++k) {
    EXPECT_GT(curve[k].i_truth, 1.0);
    EXPECT_GT(curve[k].i_truth, curve[k - 1].i_truth);
  }
  EXPECT_GT(truth_measure(Family::rock_paper_scissors, 0.99), truth_measure(Family::rock_paper_scissors, 0.95));
  EXPECT_GT(truth_measure(Family::rock_paper_scissors, 0.999), truth_measure(Family::rock_paper_scissors, 0.99));
}

TEST(SimulateTest, PureStrategies) {
  Matrix b(3, 2);
  b << 1, 0,
       0, 0,
       0, 1;  // rock vs scissors
  for (const auto& r : simulate_matches(StrategyProfile(b), 500, 3)) EXPECT_EQ(r.winner, 0u);

  Matrix same(3, 2);
  same << 1, 1, 0, 0, 0, 0;  // rock vs rock: every game is a coin flip
  const auto records = simulate_matches(StrategyProfile(same), 20000, 4);
  double wins = 0;
  for (const auto& r : records) wins += r.winner == 0;
  EXPECT_NEAR(wins / records.size(), 0.5, 0.015);
  EXPECT_THROW(simulate_matches(StrategyProfile(same), 0, 4), ValidationError);
}

TEST(SimulateTest, EmpiricalPayoffMatchesClosedForm) {
  const StrategyProfile profile = rps_family(0.5);
  const auto records = simulate_matches(profile, 100000, 5);
  const PayoffMatrix est = estimate_payoff(records, 3);
  const PayoffMatrix truth = ground_truth_payoff(profile);
  EXPECT_LE((est.matrix() - truth.matrix()).cwiseAbs().maxCoeff(), 0.01);
  EXPECT_EQ(records, simulate_matches(profile, 100000, 5));
  for (std::size_t k = 0; k < records.size(); ++k) EXPECT_EQ(records[k].sequence, k);
}

TEST(ExperimentTest, RowsAndAnchors) {
  const auto rows = run_experiment(Family::rock_paper_scissors, {0.5, 0.0}, {1000, 100}, 3, 9);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].t, 0.0);
  EXPECT_EQ(rows[0].games_per_pair, 100u);
  EXPECT_EQ(rows[0].i_truth, 1.0);
  EXPECT_EQ(rows[2].trial, 2u);
  EXPECT_EQ(rows[3].games_per_pair, 1000u);
  EXPECT_EQ(rows[6].t, 0.5);
  const auto again = run_experiment(Family::rock_paper_scissors, {0.0, 0.5}, {100, 1000}, 3, 9);
  for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(rows[k].i_hat, again[k].i_hat);
  EXPECT_THROW(run_experiment(Family::rock_scissors, {}, {100}, 1, 0), ValidationError);
  EXPECT_THROW(run_experiment(Family::rock_scissors, {0.5}, {}, 1, 0), ValidationError);
  EXPECT_THROW(run_experiment(Family::rock_scissors, {1.0}, {100}, 1, 0), ValidationError);
}

TEST(ExperimentTest, ErrorShrinksWithData) {
  for (Family family : {Family::rock_scissors, Family::rock_paper_scissors}) {
    const auto rows = run_experiment(family, {0.5}, {100, 1000, 10000}, 10, 2024);
    double err[3] = {0, 0, 0};
    for (const auto& r : rows)
      err[r.games_per_pair == 100 ? 0 : r.games_per_pair == 1000 ? 1 : 2] += std::abs(r.i_hat - r.i_truth) / 10;
    EXPECT_GE(err[0], err[1]);
    EXPECT_GE(err[1], err[2]);
    if (family == Family::rock_scissors) {
      EXPECT_LT(err[2], 0.15);
    }
  }
}

}  // namespace
}  // namespace elotope::rps
