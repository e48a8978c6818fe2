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
// Weighted automata: an unweighted skeleton plus weights on transitions
// and on initial and final states.

#ifndef AMBIG_WEIGHTED_H_
#define AMBIG_WEIGHTED_H_

#include <string>
#include <utility>
#include <vector>

#include "ambig/automaton.h"
#include "ambig/error.h"

namespace ambig {

template <typename W>
class WeightedAutomaton {
 public:
  using Weight = W;

  WeightedAutomaton() = default;

  // weights is indexed by transition id; initial_weights and
  // final_weights follow the order of skeleton.initial() and
  // skeleton.final_states().
  WeightedAutomaton(FiniteAutomaton skeleton, std::vector<W> weights,
                    std::vector<W> initial_weights,
                    std::vector<W> final_weights)
      : skeleton_(std::move(skeleton)),
        weights_(std::move(weights)),
        initial_weights_(std::move(initial_weights)),
        final_weights_(std::move(final_weights)) {
    if (weights_.size() != skeleton_.num_transitions() ||
        initial_weights_.size() != skeleton_.initial().size() ||
        final_weights_.size() != skeleton_.final_states().size()) {
      Fail(ErrorCode::kInvalidArgument,
           "weight vectors do not match the skeleton");
    }
  }

  const FiniteAutomaton &skeleton() const { return skeleton_; }
  const std::vector<W> &weights() const { return weights_; }
  const W &weight(TransitionId t) const { return weights_[t]; }
  const std::vector<W> &initial_weights() const { return initial_weights_; }
  const std::vector<W> &final_weights() const { return final_weights_; }

 private:
  FiniteAutomaton skeleton_;
  std::vector<W> weights_;
  std::vector<W> initial_weights_;
  std::vector<W> final_weights_;
};

// Trims the skeleton and carries the weights along.
template <typename W>
WeightedAutomaton<W> TrimWeighted(const WeightedAutomaton<W> &automaton) {
  const FiniteAutomaton &a = automaton.skeleton();
  TrimResult trim = TrimWithMaps(a);
  std::vector<W> weights;
  weights.reserve(trim.transition_map.size());
  for (TransitionId t : trim.transition_map) {
    weights.push_back(automaton.weight(t));
  }
  std::vector<StateId> renumber(a.num_states(), kNoState);
  for (StateId s = 0; s < trim.state_map.size(); ++s) {
    renumber[trim.state_map[s]] = s;
  }
  const auto carry = [&renumber](std::span<const StateId> old_states,
                                 const std::vector<W> &old_weights) {
    std::vector<W> out;
    for (std::size_t i = 0; i < old_states.size(); ++i) {
      if (renumber[old_states[i]] != kNoState) out.push_back(old_weights[i]);
    }
    return out;
  };
  std::vector<W> initial = carry(a.initial(), automaton.initial_weights());
  std::vector<W> final_weights =
      carry(a.final_states(), automaton.final_weights());
  return WeightedAutomaton<W>(std::move(trim.automaton), std::move(weights),
                              std::move(initial), std::move(final_weights));
}

using ProbAutomaton = WeightedAutomaton<double>;

}  // namespace ambig

#endif  // AMBIG_WEIGHTED_H_
