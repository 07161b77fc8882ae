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

#ifndef ELOTOPE_INTRANSITIVITY_HPP
#define ELOTOPE_INTRANSITIVITY_HPP

#include <cstddef>
#include <span>
#include <string_view>

#include "elotope/game.hpp"
#include "elotope/hodge.hpp"

namespace elotope {

enum class Classification { predominantly_transitive, balanced, effectively_intransitive };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::predominantly_transitive: return "predominantly_transitive";
    case Classification::balanced: return "balanced";
    case Classification::effectively_intransitive: return "effectively_intransitive";
  }
  return "unknown";
}

struct IntransitivityReport {
  double measure = 1.0;
  double transitive_norm = 0.0;
  double cyclic_norm = 0.0;
  Classification classification = Classification::balanced;
};

/// I(A) = (1 + ||cyclic part||_F) / (1 + ||transitive part||_F).
///
/// Below 1 the gradient (transitive) component dominates, above 1 the
/// cyclic one. Norms are not scaled by the number of players, so values are
/// only comparable between games of the same size.
inline IntransitivityReport measure_intransitivity(const SkewMatrix& a) {
  const HodgeParts parts = hodge_decompose(a);
  IntransitivityReport report;
  report.transitive_norm = frobenius_norm(parts.transitive);
  report.cyclic_norm = frobenius_norm(parts.cyclic);
  report.measure = (1.0 + report.cyclic_norm) / (1.0 + report.transitive_norm);
  if (report.measure < 1.0)
    report.classification = Classification::predominantly_transitive;
  else if (report.measure > 1.0)
    report.classification = Classification::effectively_intransitive;
  else
    report.classification = Classification::balanced;
  return report;
}

inline IntransitivityReport measure_intransitivity(const AdvantageMatrix& a) {
  return measure_intransitivity(a.skew());
}

/// Empirical measure: smoothed payoff estimate, advantage, then I(A).
inline IntransitivityReport measure_from_records(std::span<const MatchRecord> records, std::size_t m,
                                                 double smoothing = 0.5,
                                                 const SigmoidLink& link = SigmoidLink::logistic()) {
  return measure_intransitivity(advantage_from_payoff(estimate_payoff(records, m, smoothing), link));
}

}  // namespace elotope

#endif  // ELOTOPE_INTRANSITIVITY_HPP
