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

// Three players locked in a cycle (each beats the next with probability
// 0.75). The final Elo scores depend on who is scheduled to play whom, while
// a transitive game gives the same final scores for every schedule.

#include <cstdio>

#include "elotope/elotope.hpp"

int main() {
  using namespace elotope;

  Matrix cyclic(3, 3);
  cyclic << 0.5, 0.75, 0.25,
            0.25, 0.5, 0.75,
            0.75, 0.25, 0.5;
  const PayoffMatrix game(cyclic);

  const auto report = measure_intransitivity(advantage_from_payoff(game));
  std::printf("intransitivity I(A) = %.4f (%s)\n", report.measure,
              std::string(to_string(report.classification)).c_str());

  for (const auto& tree : enumerate_spanning_trees(3)) {
    const SolveReport solved = solve_final_score(game, tree_selection(tree, 3));
    const RatingVector closed = tree_final_score(game, tree);
    std::printf("tree %-8s newton (% .4f % .4f % .4f)  closed form (% .4f % .4f % .4f)\n",
                describe_edges(tree).c_str(), solved.solution[0], solved.solution[1],
                solved.solution[2], closed[0], closed[1], closed[2]);
  }
  const SolveReport uniform = solve_final_score(game, uniform_selection(3));
  std::printf("uniform schedule        (% .4f % .4f % .4f)\n", uniform.solution[0],
              uniform.solution[1], uniform.solution[2]);

  Vector skill(3);
  skill << 1.0, 0.0, -1.0;
  const PayoffMatrix transitive = payoff_from_advantage(AdvantageMatrix(grad(skill)));
  const ElotopeSample sample = sample_elotope(transitive, SigmoidLink::logistic(), 3, 8, 7);
  double spread = 0.0;
  for (const auto& p : sample.points)
    spread = std::max(spread, (p.values() - sample.points.front().values()).norm());
  std::printf("transitive game: %zu Elotope samples, max spread %.2e\n", sample.points.size(), spread);
  return 0;
}
