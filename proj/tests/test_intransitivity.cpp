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
#include <vector>

#include "elotope/intransitivity.hpp"
#include "generators.hpp"

namespace elotope {
namespace {

std::vector<MatchRecord> bernoulli_games(const PayoffMatrix& p, std::uint64_t games_per_pair, Rng& rng) {
  std::vector<MatchRecord> out;
  std::uint64_t seq = 0;
  const auto m = static_cast<std::size_t>(p.dim());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::uint64_t g = 0; g < games_per_pair; ++g)
        out.push_back({i, j, rng.bernoulli(p(i, j)) ? i : j, seq++});
  return out;
}

TEST(MeasureTest, Anchors) {
  const auto zero = measure_intransitivity(SkewMatrix::zero(3));
  EXPECT_EQ(zero.measure, 1.0);
  EXPECT_EQ(zero.classification, Classification::balanced);

  Vector v(4);
  v << 0.3, -1.0, 2.0, 0.1;
  const auto stacm = measure_intransitivity(grad(v));
  EXPECT_NEAR(stacm.measure, 1.0 / (1.0 + frobenius_norm(grad(v))), 1e-12);
  EXPECT_LT(stacm.measure, 1.0);
  EXPECT_EQ(stacm.classification, Classification::predominantly_transitive);

  const auto cyc = measure_intransitivity(testing::unit_cycle());
  EXPECT_NEAR(cyc.measure, 1.0 + std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(cyc.cyclic_norm, std::sqrt(6.0), 1e-12);
  EXPECT_EQ(cyc.transitive_norm, 0.0);
  EXPECT_EQ(cyc.classification, Classification::effectively_intransitive);
}

TEST(MeasureTest, ReportInvariants) {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rep = measure_intransitivity(testing::random_skew(2 + rng.index(7), rng));
    EXPECT_GT(rep.measure, 0.0);
    EXPECT_NEAR(rep.measure, (1 + rep.cyclic_norm) / (1 + rep.transitive_norm), 1e-12);
    const Classification expected = rep.measure < 1   ? Classification::predominantly_transitive
                                    : rep.measure > 1 ? Classification::effectively_intransitive
                                                      : Classification::balanced;
    EXPECT_EQ(rep.classification, expected);
  }
}

TEST(MeasureTest, MonotoneInScale) {
  Rng rng(72);
  const SkewMatrix g = grad(testing::random_vector(4, rng));
  const SkewMatrix c = hodge_decompose(testing::random_skew(4, rng)).cyclic;
  double prev_g = measure_intransitivity(0.0 * g).measure;
  double prev_c = measure_intransitivity(0.0 * c).measure;
  for (double s = 0.1; s <= 5.0; s += 0.1) {
    const double ig = measure_intransitivity(s * g).measure;
    const double ic = measure_intransitivity(s * c).measure;
    EXPECT_LT(ig, prev_g);
    EXPECT_GT(ic, prev_c);
    EXPECT_GT(ic, 1.0);
    prev_g = ig;
    prev_c = ic;
  }
}

TEST(MeasureFromRecordsTest, EvenGameNearOne) {
  Rng rng(73);
  const auto records = bernoulli_games(PayoffMatrix::even(3), 10000, rng);
  const double measure = measure_from_records(records, 3).measure;
  EXPECT_GE(measure, 0.9);
  EXPECT_LE(measure, 1.1);
}

TEST(MeasureFromRecordsTest, TransitiveGameBelowOne) {
  Rng rng(74);
  Vector v(3);
  v << 1.0, 0.0, -1.0;
  const auto records = bernoulli_games(testing::stacm_payoff(v), 10000, rng);
  EXPECT_LT(measure_from_records(records, 3).measure, 1.0);
}

TEST(MeasureFromRecordsTest, MissingPair) {
  std::vector<MatchRecord> records{{0, 1, 0, 0}, {0, 2, 2, 1}};
  EXPECT_THROW(measure_from_records(records, 3), ValidationError);
}

// Mean absolute error over seeds shrinks as games per pair grow.
TEST(MeasureFromRecordsTest, ConvergesToGroundTruth) {
  Rng gen(75);
  const PayoffMatrix p = testing::random_payoff(4, gen, 1.5);
  const double truth = measure_intransitivity(advantage_from_payoff(p)).measure;
  double previous = INFINITY;
  for (std::uint64_t n : {100u, 1000u, 10000u}) {
    double err = 0.0;
    for (int seed = 0; seed < 10; ++seed) {
      Rng rng(derive_seed(76, seed));
      err += std::abs(measure_from_records(bernoulli_games(p, n, rng), 4).measure - truth);
    }
    err /= 10;
    EXPECT_LT(err, previous) << "n=" << n;
    previous = err;
  }
}

}  // namespace
}  // namespace elotope
