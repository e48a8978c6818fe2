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
//
// Generalized single-source shortest distance over a semiring.
//
// Computes the sum over all successful paths of
//   initial weight (x) path weight (x) final weight.
// Strongly connected components are visited in topological order. A
// component without internal edges is settled in one step; a cyclic
// component is relaxed (Jacobi iteration) until no distance moves by more
// than the tolerance.

#ifndef AMBIG_SHORTEST_DISTANCE_H_
#define AMBIG_SHORTEST_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ambig/automaton.h"
#include "ambig/error.h"
#include "ambig/scc.h"
#include "ambig/semiring.h"
#include "ambig/weighted.h"

namespace ambig {

struct ShortestDistanceOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000000;
  // Relax the whole automaton as one component, even if it is acyclic.
  bool force_iterative = false;
};

template <typename W>
struct ShortestDistanceResult {
  W total;
  // Relaxation rounds summed over cyclic components.
  std::size_t iterations = 0;
  // Largest last-round change over cyclic components; 0 if none.
  double residual = 0.0;
};

template <Semiring S>
ShortestDistanceResult<typename S::Weight> ShortestDistanceDetailed(
    const WeightedAutomaton<typename S::Weight> &automaton,
    const ShortestDistanceOptions &options = {}) {
  using W = typename S::Weight;
  const FiniteAutomaton &a = automaton.skeleton();
  if (HasEpsilonCycle(a)) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  const std::size_t n = a.num_states();
  ShortestDistanceResult<W> result{S::Zero()};
  if (n == 0) return result;

  // Contributions arriving from outside each state's component.
  std::vector<W> incoming(n, S::Zero());
  for (std::size_t i = 0; i < a.initial().size(); ++i) {
    const StateId q = a.initial()[i];
    incoming[q] = S::Plus(incoming[q], automaton.initial_weights()[i]);
  }

  std::vector<std::uint32_t> component(n, 0);
  std::size_t num_components = 1;
  if (!options.force_iterative) {
    SccDecomposition scc =
        StronglyConnectedComponents(Digraph::FromAutomaton(a));
    component = std::move(scc.component);
    num_components = scc.num_components;
  }
  std::vector<std::vector<StateId>> members(num_components);
  for (StateId q = 0; q < n; ++q) members[component[q]].push_back(q);

  std::vector<W> distance(n, S::Zero());
  std::vector<W> next(n, S::Zero());
  // Tarjan ids are reverse-topological.
  for (std::size_t c = num_components; c-- > 0;) {
    const std::vector<StateId> &states = members[c];
    bool cyclic = options.force_iterative;
    for (StateId q : states) {
      for (TransitionId t : a.out(q)) {
        if (component[a.transition(t).target] == c) cyclic = true;
      }
    }
    for (StateId q : states) distance[q] = incoming[q];
    if (cyclic) {
      std::size_t rounds = 0;
      double change = 0.0;
      do {
        if (rounds == options.max_iterations) {
          Fail(ErrorCode::kNonConvergent,
               "shortest distance did not converge after " +
                   std::to_string(rounds) + " iterations (change " +
                   std::to_string(change) + ")");
        }
        for (StateId q : states) next[q] = incoming[q];
        for (StateId q : states) {
          for (TransitionId t : a.out(q)) {
            const StateId r = a.transition(t).target;
            if (component[r] == c) {
              next[r] = S::Plus(next[r],
                                S::Times(distance[q], automaton.weight(t)));
            }
          }
        }
        change = 0.0;
        for (StateId q : states) {
          change = std::max(change, S::Distance(next[q], distance[q]));
          distance[q] = next[q];
        }
        ++rounds;
      } while (!(change <= options.tolerance));
      result.iterations += rounds;
      result.residual = std::max(result.residual, change);
    }
    for (StateId q : states) {
      for (TransitionId t : a.out(q)) {
        const StateId r = a.transition(t).target;
        if (component[r] != c) {
          incoming[r] = S::Plus(incoming[r],
                                S::Times(distance[q], automaton.weight(t)));
        }
      }
    }
  }

  for (std::size_t i = 0; i < a.final_states().size(); ++i) {
    const StateId q = a.final_states()[i];
    result.total = S::Plus(
        result.total, S::Times(distance[q], automaton.final_weights()[i]));
  }
  return result;
}

// Throws kNonConvergent or kEpsilonCycleInput.
template <Semiring S>
typename S::Weight ShortestDistance(
    const WeightedAutomaton<typename S::Weight> &automaton,
    const ShortestDistanceOptions &options = {}) {
  return ShortestDistanceDetailed<S>(automaton, options).total;
}

// w -> (w, -w log w) on transitions, initial and final weights.
// Throws kNonPositiveWeight for transition weights <= 0 and
// kInvalidWeight for weights outside [0, 1].
WeightedAutomaton<PairWeight> MapEntropy(const ProbAutomaton &automaton);

// Symbol transitions w -> (w, w); epsilon-transitions, initial and final
// weights w -> (w, 0). Same errors as MapEntropy.
WeightedAutomaton<PairWeight> MapExpectation(const ProbAutomaton &automaton);

}  // namespace ambig

#endif  // AMBIG_SHORTEST_DISTANCE_H_
