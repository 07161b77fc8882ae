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

// Small graph utilities over player indices: connectivity, spanning-tree
// validation, exhaustive enumeration of the labelled spanning trees of K_m
// (via Pruefer sequences) and uniform random spanning trees (Wilson's
// loop-erased random walk).

#ifndef ELOTOPE_GRAPH_HPP
#define ELOTOPE_GRAPH_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elotope/errors.hpp"
#include "elotope/random.hpp"

namespace elotope {

using Edge = std::pair<std::size_t, std::size_t>;
using EdgeList = std::vector<Edge>;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Number of connected components of the graph whose edges are the strictly
/// positive entries of `weights`.
inline std::size_t count_components(const Eigen::MatrixXd& weights) {
  const auto m = static_cast<std::size_t>(weights.rows());
  detail::DisjointSets sets(m);
  std::size_t components = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (weights(i, j) > 0.0 && sets.unite(i, j)) --components;
  return components;
}

/// Throws ValidationError unless `edges` is a spanning tree on m vertices.
inline void validate_spanning_tree(const EdgeList& edges, std::size_t m) {
  if (m == 0) throw ValidationError("spanning tree: need at least one vertex");
  detail::DisjointSets sets(m);
  for (const auto& [a, b] : edges) {
    if (a >= m || b >= m)
      throw ValidationError("spanning tree: edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has a vertex outside [0," + std::to_string(m) + ")");
    if (a == b) throw ValidationError("spanning tree: self-loop at vertex " + std::to_string(a));
    if (!sets.unite(a, b))
      throw ValidationError("spanning tree: cycle found at edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
  }
  if (edges.size() != m - 1)
    throw ValidationError("spanning tree: disconnected (" + std::to_string(edges.size()) +
                          " edges for " + std::to_string(m) + " vertices)");
}

/// Decodes a Pruefer sequence (length m-2, entries < m) into a tree's edges.
inline EdgeList tree_from_pruefer(const std::vector<std::size_t>& code, std::size_t m) {
  EdgeList edges;
  if (m < 2) return edges;
  std::vector<std::size_t> degree(m, 1);
  for (auto v : code) ++degree[v];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < m; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (auto v : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1) leaves.insert(v);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

/// m^(m-2), or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> spanning_tree_count(std::size_t m) {
  if (m <= 2) return 1;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < m - 2; ++k) {
    if (count > UINT64_MAX / m) return std::nullopt;
    count *= m;
  }
  return count;
}

/// All m^(m-2) labelled spanning trees of K_m, in lexicographic Pruefer order.
inline std::vector<EdgeList> enumerate_spanning_trees(std::size_t m) {
  std::vector<EdgeList> trees;
  if (m == 0) return trees;
  if (m <= 2) {
    trees.push_back(m == 2 ? EdgeList{{0, 1}} : EdgeList{});
    return trees;
  }
  std::vector<std::size_t> code(m - 2, 0);
  while (true) {
    trees.push_back(tree_from_pruefer(code, m));
    std::size_t pos = code.size();
    while (pos > 0 && code[pos - 1] == m - 1) code[--pos] = 0;
    if (pos == 0) break;
    ++code[pos - 1];
  }
  return trees;
}

/// Uniform random spanning tree of K_m by Wilson's algorithm.
inline EdgeList random_spanning_tree(std::size_t m, Rng& rng) {
  EdgeList edges;
  if (m < 2) return edges;
  std::vector<bool> in_tree(m, false);
  std::vector<std::size_t> next(m, 0);
  in_tree[rng.index(m)] = true;
  for (std::size_t start = 0; start < m; ++start) {
    // Random walk until the tree is hit; overwriting next[] erases loops.
    std::size_t u = start;
    while (!in_tree[u]) {
      std::size_t v = rng.index(m - 1);
      if (v >= u) ++v;
      next[u] = v;
      u = v;
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = true;
      edges.emplace_back(std::min(u, next[u]), std::max(u, next[u]));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// "0-1|1-2" style descriptor used in CSV output.
inline std::string describe_edges(const EdgeList& edges) {
  std::string out;
  for (const auto& [a, b] : edges) {
    if (!out.empty()) out += '|';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

}  // namespace elotope

#endif  // ELOTOPE_GRAPH_HPP
