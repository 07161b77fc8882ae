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

#include <map>
#include <set>

#include "elotope/graph.hpp"

namespace elotope {
namespace {

TEST(GraphTest, SpanningTreeValidation) {
  EXPECT_NO_THROW(validate_spanning_tree({{0, 1}, {1, 2}}, 3));
  EXPECT_NO_THROW(validate_spanning_tree({}, 1));
  EXPECT_THROW(validate_spanning_tree({{0, 1}, {1, 0}}, 3), ValidationError);
  EXPECT_THROW(validate_spanning_tree({{0, 1}}, 3), ValidationError);
  EXPECT_THROW(validate_spanning_tree({{0, 3}, {1, 2}}, 3), ValidationError);
  EXPECT_THROW(validate_spanning_tree({{1, 1}, {0, 2}}, 3), ValidationError);
}

TEST(GraphTest, EnumeratesCayleyManyDistinctTrees) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto trees = enumerate_spanning_trees(m);
    EXPECT_EQ(trees.size(), *spanning_tree_count(m)) << "m=" << m;
    std::set<EdgeList> distinct;
    for (auto tree : trees) {
      EXPECT_NO_THROW(validate_spanning_tree(tree, m));
      std::sort(tree.begin(), tree.end());
      distinct.insert(tree);
    }
    EXPECT_EQ(distinct.size(), trees.size());
  }
  EXPECT_EQ(*spanning_tree_count(4), 16u);
  EXPECT_FALSE(spanning_tree_count(40).has_value());
}

// Chi-square style check: all 16 trees of K_4 appear with similar frequency.
TEST(GraphTest, WilsonIsUniformOnK4) {
  Rng rng(31);
  std::map<EdgeList, int> counts;
  const int draws = 32000;
  for (int k = 0; k < draws; ++k) {
    const EdgeList tree = random_spanning_tree(4, rng);
    ASSERT_NO_THROW(validate_spanning_tree(tree, 4));
    ++counts[tree];
  }
  EXPECT_EQ(counts.size(), 16u);
  double chi2 = 0.0;
  const double expected = draws / 16.0;
  for (const auto& [tree, n] : counts) chi2 += (n - expected) * (n - expected) / expected;
  EXPECT_LT(chi2, 37.7);  // 0.999 quantile of chi-square with 15 dof
}

TEST(GraphTest, Components) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
  EXPECT_EQ(count_components(w), 4u);
  w(0, 1) = w(1, 0) = 1;
  w(2, 3) = w(3, 2) = 1;
  EXPECT_EQ(count_components(w), 2u);
  w(1, 2) = w(2, 1) = 1;
  EXPECT_EQ(count_components(w), 1u);
}

TEST(GraphTest, Describe) {
  EXPECT_EQ(describe_edges({{0, 1}, {1, 2}}), "0-1|1-2");
  EXPECT_EQ(describe_edges({}), "");
}

}  // namespace
}  // namespace elotope
