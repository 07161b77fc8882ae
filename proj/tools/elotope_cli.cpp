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

// elotope: command-line front end.
//
//   elotope decompose  A.json
//   elotope solve      P.json Q.json [--tol 1e-10] [--max-iter 100] [--max-fallback-iter 100000]
//   elotope simulate   P.json Q.json [--steps N] [--eta 0.1] [--seed S] [--stride K]
//                      [--out-trajectory traj.csv] [--out-matches log.csv]
//   elotope elotope    P.json [--trees N] [--random-q N] [--seed S] [--out pts.csv]
//   elotope measure    A.json | log.csv [--players m] [--smoothing 0.5] [--format matrix|matchlog]
//   elotope experiment --family rs|rps --t-grid 0:0.05:0.95 [--games 100,1000] [--trials 10]
//                      [--seed S] [--truth-only] [--out table.csv]
//
// Exit codes: 0 success, 2 invalid input, 3 solver did not converge.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "elotope/elotope.hpp"
#include "elotope/io.hpp"

namespace {

using namespace elotope;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    io::atomic_write(out_path, content);
}

int run_decompose(const std::string& input, double tol) {
  const io::MatrixFile file = io::load_matrix(input, io::MatrixKind::advantage);
  std::cout << io::decomposition_json(SkewMatrix(file.rows), tol).dump(2) << "\n";
  return kExitOk;
}

int run_solve(const std::string& payoff_path, const std::string& selection_path, double tol,
              int max_iter, int max_fallback_iter) {
  const PayoffMatrix payoff(io::load_matrix(payoff_path, io::MatrixKind::payoff).rows);
  const SelectionMatrix selection(io::load_matrix(selection_path, io::MatrixKind::selection).rows);
  SolveOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  opts.fallback_max_iter = max_fallback_iter;
  const SolveReport report = solve_final_score(payoff, selection, SigmoidLink::logistic(), opts);
  std::cout << io::to_json(report).dump(2) << "\n";
  return report.converged ? kExitOk : kExitNoConvergence;
}

struct SimulateArgs {
  std::string payoff, selection, out_trajectory, out_matches;
  std::uint64_t steps = 1000, seed = 0, stride = 1;
  double eta = 0.1;
};

int run_simulate(const SimulateArgs& a) {
  const PayoffMatrix payoff(io::load_matrix(a.payoff, io::MatrixKind::payoff).rows);
  const SelectionMatrix selection(io::load_matrix(a.selection, io::MatrixKind::selection).rows);
  const ChainConfig config(payoff, selection, a.eta, SigmoidLink::logistic(), a.seed);
  const Trajectory traj = run_chain(config, a.steps, a.stride);
  emit(io::trajectory_csv(traj, config.dim()), a.out_trajectory);
  if (!a.out_matches.empty()) io::atomic_write(a.out_matches, io::match_log_csv(traj.matches));
  return kExitOk;
}

int run_elotope(const std::string& payoff_path, std::uint64_t trees, std::uint64_t random_q,
                std::uint64_t seed, const std::string& out) {
  const PayoffMatrix payoff(io::load_matrix(payoff_path, io::MatrixKind::payoff).rows);
  const ElotopeSample sample = sample_elotope(payoff, SigmoidLink::logistic(), trees, random_q, seed);
  emit(io::elotope_csv(sample, payoff.dim()), out);
  return kExitOk;
}

int run_measure(const std::string& input, std::string format, std::optional<std::size_t> players,
                double smoothing) {
  if (format.empty()) {
    const std::string ext = std::filesystem::path(input).extension().string();
    if (ext == ".json") format = "matrix";
    else if (ext == ".csv") format = "matchlog";
    else throw ValidationError("cannot infer input format from '" + input + "'; pass --format");
  }
  IntransitivityReport report;
  if (format == "matrix") {
    const io::MatrixFile file = io::load_matrix(input);
    if (file.kind == io::MatrixKind::advantage)
      report = measure_intransitivity(SkewMatrix(file.rows));
    else if (file.kind == io::MatrixKind::payoff)
      report = measure_intransitivity(advantage_from_payoff(PayoffMatrix(file.rows)));
    else
      throw ValidationError("measure: expected an advantage or payoff matrix, got a selection matrix");
  } else {
    const auto records = io::parse_match_log(io::read_file(input));
    std::size_t m = 0;
    if (players) {
      m = *players;
    } else {
      for (const auto& r : records) m = std::max({m, r.player_i + 1, r.player_j + 1});
    }
    report = measure_from_records(records, m, smoothing);
  }
  std::cout << io::to_json(report).dump(2) << "\n";
  return kExitOk;
}

struct ExperimentArgs {
  std::string family, t_grid, games = "100,1000,10000", out;
  std::uint64_t trials = 10, seed = 0;
  double smoothing = 0.5;
  bool truth_only = false;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const rps::Family family = rps::parse_family(a.family);
  const std::vector<double> grid = io::parse_grid(a.t_grid);
  if (a.truth_only) {
    emit(io::truth_curve_csv(rps::truth_curve(family, grid)), a.out);
    return kExitOk;
  }
  const auto rows = rps::run_experiment(family, grid, io::parse_uint_list(a.games), a.trials, a.seed,
                                        a.smoothing);
  emit(io::experiment_csv(rows), a.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elo final scores, Hodge decomposition and intransitivity measurement"};
  app.require_subcommand(1);

  std::string input, second;
  double tol = 1e-10;

  auto* decompose = app.add_subcommand("decompose", "Split an advantage matrix into transitive and cyclic parts");
  decompose->add_option("input", input, "advantage matrix JSON")->required();
  double stacm_tol = 1e-9;
  decompose->add_option("--tol", stacm_tol, "cyclic-norm threshold for is_stacm");

  auto* solve = app.add_subcommand("solve", "Final Elo score for a payoff and selection matrix");
  int max_iter = 100;
  int max_fallback_iter = 100000;
  solve->add_option("payoff", input, "payoff matrix JSON")->required();
  solve->add_option("selection", second, "selection matrix JSON")->required();
  solve->add_option("--tol", tol, "max-norm tolerance on the stability residual");
  solve->add_option("--max-iter", max_iter, "Newton iteration cap")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-fallback-iter", max_fallback_iter, "damped fixed-point iteration cap")
      ->check(CLI::NonNegativeNumber);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run the Elo Markov chain");
  simulate->add_option("payoff", sim.payoff, "payoff matrix JSON")->required();
  simulate->add_option("selection", sim.selection, "selection matrix JSON")->required();
  simulate->add_option("--steps", sim.steps, "number of games");
  simulate->add_option("--eta", sim.eta, "Elo gain");
  simulate->add_option("--seed", sim.seed, "random seed");
  simulate->add_option("--stride", sim.stride, "record every k-th state")->check(CLI::PositiveNumber);
  simulate->add_option("--out-trajectory", sim.out_trajectory, "trajectory CSV (default stdout)");
  simulate->add_option("--out-matches", sim.out_matches, "match log CSV");

  std::uint64_t trees = 16, random_q = 16, seed = 0;
  std::string out;
  auto* elotope_cmd = app.add_subcommand("elotope", "Sample final scores over many selection matrices");
  elotope_cmd->add_option("payoff", input, "payoff matrix JSON")->required();
  elotope_cmd->add_option("--trees", trees, "spanning-tree budget");
  elotope_cmd->add_option("--random-q", random_q, "number of random connected selection matrices");
  elotope_cmd->add_option("--seed", seed, "random seed");
  elotope_cmd->add_option("--out", out, "output CSV (default stdout)");

  std::string format;
  std::optional<std::size_t> players;
  double smoothing = 0.5;
  auto* measure = app.add_subcommand("measure", "Intransitivity of a matrix or a match log");
  measure->add_option("input", input, "matrix JSON or match log CSV")->required();
  measure->add_option("--format", format, "matrix or matchlog (default: from extension)")
      ->check(CLI::IsMember({"matrix", "matchlog"}));
  measure->add_option("--players", players, "number of players in a match log");
  measure->add_option("--smoothing", smoothing, "pseudo-count added to each side of a pair");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Rock-Paper-Scissors intransitivity experiments");
  experiment->add_option("--family", exp.family, "rs (Rock-Scissors) or rps (Rock-Paper-Scissors)")
      ->required()
      ->check(CLI::IsMember({"rs", "rps"}));
  experiment->add_option("--t-grid", exp.t_grid,
                         "strategy parameters: start:step:end (inclusive end), a comma list, or one value")
      ->required();
  experiment->add_option("--games", exp.games, "comma-separated games per pair");
  experiment->add_option("--trials", exp.trials, "trials per (t, games) cell");
  experiment->add_option("--seed", exp.seed, "random seed");
  experiment->add_option("--smoothing", exp.smoothing, "pseudo-count for the payoff estimate");
  experiment->add_flag("--truth-only", exp.truth_only, "emit only the ground-truth curve");
  experiment->add_option("--out", exp.out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*decompose) return run_decompose(input, stacm_tol);
    if (*solve) return run_solve(input, second, tol, max_iter, max_fallback_iter);
    if (*simulate) return run_simulate(sim);
    if (*elotope_cmd) return run_elotope(input, trees, random_q, seed, out);
    if (*measure) return run_measure(input, format, players, smoothing);
    if (*experiment) return run_experiment_cmd(exp);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
