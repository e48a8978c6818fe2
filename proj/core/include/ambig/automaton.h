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
// Unweighted finite automata with epsilon-transitions.
//
// A FiniteAutomaton is immutable once built. States are the dense range
// [0, num_states()); transitions are addressed by their index in the
// order they were supplied, which is the identity used by Path.

#ifndef AMBIG_AUTOMATON_H_
#define AMBIG_AUTOMATON_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ambig {

using StateId = std::uint32_t;
using TransitionId = std::uint32_t;
// 0 is epsilon; label k >= 1 names alphabet()[k - 1].
using Label = std::uint32_t;
// A string over the alphabet, as non-epsilon labels.
using Word = std::vector<Label>;
// Sequence of transition indices.
using Path = std::vector<TransitionId>;

inline constexpr Label kEpsilon = 0;
inline constexpr std::string_view kEpsilonToken = "<eps>";
inline constexpr TransitionId kNoTransition =
    std::numeric_limits<TransitionId>::max();
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

struct Transition {
  StateId source;
  Label label;
  StateId target;

  bool is_epsilon() const { return label == kEpsilon; }
  friend bool operator==(const Transition &, const Transition &) = default;
  friend auto operator<=>(const Transition &, const Transition &) = default;
};

// Untrusted input to Validate(). Labels are symbol tokens; kEpsilonToken
// denotes epsilon. When alphabet is absent it is inferred from the labels;
// when num_states is absent it is one past the largest mentioned id.
struct AutomatonDescription {
  struct Arc {
    StateId source;
    std::string label;
    StateId target;
  };

  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::size_t> num_states;
  std::vector<StateId> initial;
  std::vector<StateId> final_states;
  std::vector<Arc> transitions;
};

class FiniteAutomaton {
 public:
  // The empty automaton: no states, no transitions.
  FiniteAutomaton() = default;

  // Builds and validates. alphabet must be strictly increasing; labels
  // index into it as documented for Label. Throws Error on any violated
  // invariant (dangling ids, duplicate transitions, bad labels).
  static FiniteAutomaton Create(std::vector<std::string> alphabet,
                                std::size_t num_states,
                                std::vector<StateId> initial,
                                std::vector<StateId> final_states,
                                std::vector<Transition> transitions);

  const std::vector<std::string> &alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_transitions() const { return transitions_.size(); }
  std::size_t num_epsilon_transitions() const;

  // Sorted, duplicate-free.
  std::span<const StateId> initial() const { return initial_; }
  std::span<const StateId> final_states() const { return final_; }
  bool is_initial(StateId q) const { return is_initial_[q] != 0; }
  bool is_final(StateId q) const { return is_final_[q] != 0; }

  std::span<const Transition> transitions() const { return transitions_; }
  const Transition &transition(TransitionId t) const {
    return transitions_[t];
  }

  // Outgoing transitions of q, ordered by (label, target).
  std::span<const TransitionId> out(StateId q) const {
    return {out_index_.data() + out_offsets_[q],
            out_index_.data() + out_offsets_[q + 1]};
  }

  std::string_view label_name(Label label) const;
  std::optional<Label> find_label(std::string_view token) const;

  // Structural equality: same alphabet, states, initial/final sets and
  // transition set (transition order is ignored).
  friend bool operator==(const FiniteAutomaton &a, const FiniteAutomaton &b);

 private:
  std::vector<std::string> alphabet_;
  std::size_t num_states_ = 0;
  std::vector<StateId> initial_;
  std::vector<StateId> final_;
  std::vector<char> is_initial_;
  std::vector<char> is_final_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<TransitionId> out_index_;
};

FiniteAutomaton Validate(const AutomatonDescription &description);

// Trimmed automaton plus the id maps back into the source automaton.
struct TrimResult {
  FiniteAutomaton automaton;
  std::vector<StateId> state_map;            // new id -> old id
  std::vector<TransitionId> transition_map;  // new id -> old id
};

// Restricts to states that are both accessible and co-accessible. Surviving
// states and transitions keep their relative order.
TrimResult TrimWithMaps(const FiniteAutomaton &automaton);
FiniteAutomaton Trim(const FiniteAutomaton &automaton);
bool IsTrim(const FiniteAutomaton &automaton);

// Depth-first search over epsilon-transitions only. If edge_visits is
// non-null it receives the number of transitions examined.
bool HasEpsilonCycle(const FiniteAutomaton &automaton,
                     std::size_t *edge_visits = nullptr);

// Swaps initial and final sets and reverses every transition.
// Transition ids are preserved.
FiniteAutomaton Reverse(const FiniteAutomaton &automaton);

// Path helpers. An empty path is valid and goes from any state to itself,
// so origin and destination are only defined for non-empty paths.
bool IsPath(const FiniteAutomaton &automaton, std::span<const TransitionId> path);
StateId PathOrigin(const FiniteAutomaton &automaton,
                   std::span<const TransitionId> path);
StateId PathDestination(const FiniteAutomaton &automaton,
                        std::span<const TransitionId> path);
Word PathLabel(const FiniteAutomaton &automaton,
               std::span<const TransitionId> path);

// Converts symbol tokens to a Word. Throws kSymbolNotInAlphabet.
Word ToWord(const FiniteAutomaton &automaton,
            std::span<const std::string> tokens);
std::string WordToString(const FiniteAutomaton &automaton, const Word &word);

// Splits user text into symbol tokens: on whitespace if any is present,
// otherwise per code point when every symbol is a single code point,
// otherwise the whole text is one token. Empty text is the empty word.
std::vector<std::string> SplitSymbols(const FiniteAutomaton &automaton,
                                      std::string_view text);

}  // namespace ambig

#endif  // AMBIG_AUTOMATON_H_
