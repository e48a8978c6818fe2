// Copyright 2026 The Ambig Authors.
//
// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ambig/shortest_distance.h"

#include <cmath>
#include <string>

namespace ambig {
namespace {

void CheckProbabilities(const ProbAutomaton &automaton) {
  for (double w : automaton.weights()) {
    if (std::isnan(w) || w > 1.0) {
      Fail(ErrorCode::kInvalidWeight,
           "transition weight " + std::to_string(w) + " is not in (0, 1]");
    }
    if (w <= 0.0) {
      Fail(ErrorCode::kNonPositiveWeight,
           "transition weight " + std::to_string(w) + " is not positive");
    }
  }
  const auto check = [](const std::vector<double> &ws, const char *what) {
    for (double w : ws) {
      if (!(w >= 0.0 && w <= 1.0)) {
        Fail(ErrorCode::kInvalidWeight, std::string(what) + " weight " +
                                            std::to_string(w) +
                                            " is not in [0, 1]");
      }
    }
  };
  check(automaton.initial_weights(), "initial");
  check(automaton.final_weights(), "final");
}

PairWeight EntropyPair(double w) {
  // Exactly (1, 0) for w == 1 and (0, 0) for w == 0.
  if (w == 0.0) return {0.0, 0.0};
  return {w, w == 1.0 ? 0.0 : -w * std::log(w)};
}

}  // namespace

WeightedAutomaton<PairWeight> MapEntropy(const ProbAutomaton &automaton) {
  CheckProbabilities(automaton);
  std::vector<PairWeight> weights;
  weights.reserve(automaton.weights().size());
  for (double w : automaton.weights()) weights.push_back(EntropyPair(w));
  std::vector<PairWeight> initial;
  for (double w : automaton.initial_weights()) initial.push_back(EntropyPair(w));
  std::vector<PairWeight> final_weights;
  for (double w : automaton.final_weights()) {
    final_weights.push_back(EntropyPair(w));
  }
  return {automaton.skeleton(), std::move(weights), std::move(initial),
          std::move(final_weights)};
}

WeightedAutomaton<PairWeight> MapExpectation(const ProbAutomaton &automaton) {
  CheckProbabilities(automaton);
  const FiniteAutomaton &a = automaton.skeleton();
  std::vector<PairWeight> weights;
  weights.reserve(automaton.weights().size());
  for (TransitionId t = 0; t < a.num_transitions(); ++t) {
    const double w = automaton.weight(t);
    weights.push_back({w, a.transition(t).is_epsilon() ? 0.0 : w});
  }
  std::vector<PairWeight> initial;
  for (double w : automaton.initial_weights()) initial.push_back({w, 0.0});
  std::vector<PairWeight> final_weights;
  for (double w : automaton.final_weights()) final_weights.push_back({w, 0.0});
  return {a, std::move(weights), std::move(initial), std::move(final_weights)};
}

}  // namespace ambig
