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

#include "ambig/automaton.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ambig/error.h"

namespace ambig {
namespace {

void SortUnique(std::vector<StateId> &ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::string Describe(const Transition &t, const std::vector<std::string> &a) {
  const std::string label = t.label == kEpsilon
                                ? std::string(kEpsilonToken)
                                : (t.label <= a.size() ? a[t.label - 1] : "?");
  return "(" + std::to_string(t.source) + ", " + label + ", " +
         std::to_string(t.target) + ")";
}

std::size_t CodePointLength(unsigned char lead) {
  if (lead >= 0xF0) return 4;
  if (lead >= 0xE0) return 3;
  if (lead >= 0xC0) return 2;
  return 1;
}

bool IsSingleCodePoint(std::string_view s) {
  return !s.empty() && s.size() == CodePointLength(s[0]);
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

FiniteAutomaton FiniteAutomaton::Create(std::vector<std::string> alphabet,
                                        std::size_t num_states,
                                        std::vector<StateId> initial,
                                        std::vector<StateId> final_states,
                                        std::vector<Transition> transitions) {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == kEpsilonToken) {
      Fail(ErrorCode::kReservedLabelInAlphabet,
           "alphabet contains the reserved epsilon token");
    }
    if (alphabet[i].empty()) {
      Fail(ErrorCode::kInvalidArgument, "alphabet contains an empty symbol");
    }
    if (i > 0 && !(alphabet[i - 1] < alphabet[i])) {
      Fail(ErrorCode::kInvalidArgument,
           "alphabet must be strictly increasing");
    }
  }
  if (num_states >= kNoState) {
    Fail(ErrorCode::kInvalidArgument, "too many states");
  }
  const auto check_state = [num_states](StateId q, const char *what) {
    if (q >= num_states) [[unlikely]] {
      Fail(ErrorCode::kDanglingStateId,
           std::string(what) + " state " + std::to_string(q) +
               " is out of range for " + std::to_string(num_states) +
               " states");
    }
  };
  for (StateId q : initial) check_state(q, "initial");
  for (StateId q : final_states) check_state(q, "final");
  for (const Transition &t : transitions) {
    check_state(t.source, "transition source");
    check_state(t.target, "transition target");
    if (t.label > alphabet.size()) {
      Fail(ErrorCode::kUnknownSymbol, "transition label " +
                                          std::to_string(t.label) +
                                          " is outside the alphabet");
    }
  }
  if (transitions.size() >= kNoTransition) {
    Fail(ErrorCode::kInvalidArgument, "too many transitions");
  }

  FiniteAutomaton a;
  a.alphabet_ = std::move(alphabet);
  a.num_states_ = num_states;
  SortUnique(initial);
  SortUnique(final_states);
  a.initial_ = std::move(initial);
  a.final_ = std::move(final_states);
  a.is_initial_.assign(num_states, 0);
  a.is_final_.assign(num_states, 0);
  for (StateId q : a.initial_) a.is_initial_[q] = 1;
  for (StateId q : a.final_) a.is_final_[q] = 1;
  a.transitions_ = std::move(transitions);

  // Counting sort by source, then order each bucket by (label, target).
  a.out_offsets_.assign(num_states + 1, 0);
  for (const Transition &t : a.transitions_) ++a.out_offsets_[t.source + 1];
  std::partial_sum(a.out_offsets_.begin(), a.out_offsets_.end(),
                   a.out_offsets_.begin());
  a.out_index_.resize(a.transitions_.size());
  std::vector<std::size_t> fill(a.out_offsets_.begin(),
                                a.out_offsets_.end() - 1);
  for (TransitionId i = 0; i < a.transitions_.size(); ++i) {
    a.out_index_[fill[a.transitions_[i].source]++] = i;
  }
  const auto &ts = a.transitions_;
  for (StateId q = 0; q < num_states; ++q) {
    auto first = a.out_index_.begin() + a.out_offsets_[q];
    auto last = a.out_index_.begin() + a.out_offsets_[q + 1];
    std::sort(first, last, [&ts](TransitionId x, TransitionId y) {
      return std::pair(ts[x].label, ts[x].target) <
             std::pair(ts[y].label, ts[y].target);
    });
    for (auto it = first; it != last && it + 1 != last; ++it) {
      const Transition &t = ts[*it];
      const Transition &u = ts[*(it + 1)];
      if (t.label == u.label && t.target == u.target) {
        Fail(ErrorCode::kDuplicateTransition,
             "duplicate transition " + Describe(t, a.alphabet_));
      }
    }
  }
  return a;
}

std::size_t FiniteAutomaton::num_epsilon_transitions() const {
  return static_cast<std::size_t>(
      std::count_if(transitions_.begin(), transitions_.end(),
                    [](const Transition &t) { return t.is_epsilon(); }));
}

std::string_view FiniteAutomaton::label_name(Label label) const {
  if (label == kEpsilon) return kEpsilonToken;
  return alphabet_.at(label - 1);
}

std::optional<Label> FiniteAutomaton::find_label(
    std::string_view token) const {
  if (token == kEpsilonToken) return kEpsilon;
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), token);
  if (it == alphabet_.end() || *it != token) return std::nullopt;
  return static_cast<Label>(it - alphabet_.begin()) + 1;
}

bool operator==(const FiniteAutomaton &a, const FiniteAutomaton &b) {
  if (a.alphabet_ != b.alphabet_ || a.num_states_ != b.num_states_ ||
      a.initial_ != b.initial_ || a.final_ != b.final_ ||
      a.transitions_.size() != b.transitions_.size()) {
    return false;
  }
  std::vector<Transition> x = a.transitions_;
  std::vector<Transition> y = b.transitions_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

FiniteAutomaton Validate(const AutomatonDescription &description) {
  std::vector<std::string> alphabet;
  if (description.alphabet) {
    alphabet = *description.alphabet;
    for (const std::string &s : alphabet) {
      if (s == kEpsilonToken) {
        Fail(ErrorCode::kReservedLabelInAlphabet,
             "alphabet contains the reserved epsilon token");
      }
    }
  } else {
    for (const auto &arc : description.transitions) {
      if (arc.label != kEpsilonToken) alphabet.push_back(arc.label);
    }
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());

  std::size_t num_states = 0;
  if (description.num_states) {
    num_states = *description.num_states;
  } else {
    const auto mention = [&num_states](StateId q) {
      num_states = std::max<std::size_t>(num_states, std::size_t{q} + 1);
    };
    for (StateId q : description.initial) mention(q);
    for (StateId q : description.final_states) mention(q);
    for (const auto &arc : description.transitions) {
      mention(arc.source);
      mention(arc.target);
    }
  }

  std::vector<Transition> transitions;
  transitions.reserve(description.transitions.size());
  for (const auto &arc : description.transitions) {
    Label label = kEpsilon;
    if (arc.label != kEpsilonToken) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), arc.label);
      if (it == alphabet.end() || *it != arc.label) {
        Fail(ErrorCode::kUnknownSymbol,
             "label '" + arc.label + "' is not in the alphabet");
      }
      label = static_cast<Label>(it - alphabet.begin()) + 1;
    }
    transitions.push_back({arc.source, label, arc.target});
  }
  return FiniteAutomaton::Create(std::move(alphabet), num_states,
                                 description.initial,
                                 description.final_states,
                                 std::move(transitions));
}

TrimResult TrimWithMaps(const FiniteAutomaton &automaton) {
  const std::size_t n = automaton.num_states();
  std::vector<char> accessible(n, 0);
  std::vector<StateId> stack;
  for (StateId q : automaton.initial()) {
    accessible[q] = 1;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (TransitionId t : automaton.out(q)) {
      const StateId r = automaton.transition(t).target;
      if (!accessible[r]) {
        accessible[r] = 1;
        stack.push_back(r);
      }
    }
  }

  // Predecessor lists in CSR form.
  std::vector<std::size_t> pred_offsets(n + 1, 0);
  for (const Transition &t : automaton.transitions()) {
    ++pred_offsets[t.target + 1];
  }
  std::partial_sum(pred_offsets.begin(), pred_offsets.end(),
                   pred_offsets.begin());
  std::vector<StateId> predecessors(automaton.num_transitions());
  {
    std::vector<std::size_t> fill(pred_offsets.begin(), pred_offsets.end() - 1);
    for (const Transition &t : automaton.transitions()) {
      predecessors[fill[t.target]++] = t.source;
    }
  }
  std::vector<char> coaccessible(n, 0);
  for (StateId q : automaton.final_states()) {
    coaccessible[q] = 1;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (std::size_t i = pred_offsets[q]; i < pred_offsets[q + 1]; ++i) {
      const StateId p = predecessors[i];
      if (!coaccessible[p]) {
        coaccessible[p] = 1;
        stack.push_back(p);
      }
    }
  }

  TrimResult result;
  std::vector<StateId> renumber(n, kNoState);
  for (StateId q = 0; q < n; ++q) {
    if (accessible[q] && coaccessible[q]) {
      renumber[q] = static_cast<StateId>(result.state_map.size());
      result.state_map.push_back(q);
    }
  }
  std::vector<StateId> initial;
  std::vector<StateId> final_states;
  for (StateId q : automaton.initial()) {
    if (renumber[q] != kNoState) initial.push_back(renumber[q]);
  }
  for (StateId q : automaton.final_states()) {
    if (renumber[q] != kNoState) final_states.push_back(renumber[q]);
  }
  std::vector<Transition> transitions;
  const auto all = automaton.transitions();
  for (TransitionId i = 0; i < all.size(); ++i) {
    const Transition &t = all[i];
    if (renumber[t.source] != kNoState && renumber[t.target] != kNoState) {
      transitions.push_back({renumber[t.source], t.label, renumber[t.target]});
      result.transition_map.push_back(i);
    }
  }
  result.automaton = FiniteAutomaton::Create(
      automaton.alphabet(), result.state_map.size(), std::move(initial),
      std::move(final_states), std::move(transitions));
  return result;
}

FiniteAutomaton Trim(const FiniteAutomaton &automaton) {
  return TrimWithMaps(automaton).automaton;
}

bool IsTrim(const FiniteAutomaton &automaton) {
  return TrimWithMaps(automaton).automaton.num_states() ==
         automaton.num_states();
}

bool HasEpsilonCycle(const FiniteAutomaton &automaton,
                     std::size_t *edge_visits) {
  // Colors: 0 unvisited, 1 on the DFS stack, 2 finished.
  const std::size_t n = automaton.num_states();
  std::vector<char> color(n, 0);
  // Frame: state and position within its out() span.
  std::vector<std::pair<StateId, std::size_t>> stack;
  std::size_t visits = 0;
  bool found = false;
  for (StateId root = 0; root < n && !found; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty() && !found) {
      auto &[q, pos] = stack.back();
      const auto out = automaton.out(q);
      // out() is sorted by label, so epsilon-transitions come first.
      if (pos < out.size() && automaton.transition(out[pos]).is_epsilon()) {
        const StateId r = automaton.transition(out[pos]).target;
        ++pos;
        ++visits;
        if (color[r] == 1) {
          found = true;
        } else if (color[r] == 0) {
          color[r] = 1;
          stack.emplace_back(r, 0);
        }
      } else {
        color[q] = 2;
        stack.pop_back();
      }
    }
    stack.clear();
  }
  if (edge_visits != nullptr) *edge_visits = visits;
  return found;
}

FiniteAutomaton Reverse(const FiniteAutomaton &automaton) {
  std::vector<Transition> transitions;
  transitions.reserve(automaton.num_transitions());
  for (const Transition &t : automaton.transitions()) {
    transitions.push_back({t.target, t.label, t.source});
  }
  const auto init = automaton.initial();
  const auto fin = automaton.final_states();
  return FiniteAutomaton::Create(
      automaton.alphabet(), automaton.num_states(),
      std::vector<StateId>(fin.begin(), fin.end()),
      std::vector<StateId>(init.begin(), init.end()), std::move(transitions));
}

bool IsPath(const FiniteAutomaton &automaton,
            std::span<const TransitionId> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= automaton.num_transitions()) return false;
    if (i > 0 && automaton.transition(path[i - 1]).target !=
                     automaton.transition(path[i]).source) {
      return false;
    }
  }
  return true;
}

StateId PathOrigin(const FiniteAutomaton &automaton,
                   std::span<const TransitionId> path) {
  return path.empty() ? kNoState : automaton.transition(path.front()).source;
}

StateId PathDestination(const FiniteAutomaton &automaton,
                        std::span<const TransitionId> path) {
  return path.empty() ? kNoState : automaton.transition(path.back()).target;
}

Word PathLabel(const FiniteAutomaton &automaton,
               std::span<const TransitionId> path) {
  Word word;
  for (TransitionId t : path) {
    const Label label = automaton.transition(t).label;
    if (label != kEpsilon) word.push_back(label);
  }
  return word;
}

Word ToWord(const FiniteAutomaton &automaton,
            std::span<const std::string> tokens) {
  Word word;
  word.reserve(tokens.size());
  for (const std::string &token : tokens) {
    const auto label = automaton.find_label(token);
    if (!label || *label == kEpsilon) {
      Fail(ErrorCode::kSymbolNotInAlphabet,
           "symbol '" + token + "' is not in the alphabet");
    }
    word.push_back(*label);
  }
  return word;
}

std::string WordToString(const FiniteAutomaton &automaton, const Word &word) {
  const bool compact = std::all_of(automaton.alphabet().begin(),
                                   automaton.alphabet().end(),
                                   IsSingleCodePoint);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += automaton.label_name(word[i]);
  }
  return out;
}

std::vector<std::string> SplitSymbols(const FiniteAutomaton &automaton,
                                      std::string_view text) {
  std::vector<std::string> tokens;
  if (std::any_of(text.begin(), text.end(), IsSpace)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && IsSpace(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !IsSpace(text[j])) ++j;
      if (j > i) tokens.emplace_back(text.substr(i, j - i));
      i = j;
    }
    return tokens;
  }
  if (text.empty()) return tokens;
  const bool compact = std::all_of(automaton.alphabet().begin(),
                                   automaton.alphabet().end(),
                                   IsSingleCodePoint);
  if (!compact) {
    tokens.emplace_back(text);
    return tokens;
  }
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t len =
        std::min(CodePointLength(static_cast<unsigned char>(text[i])),
                 text.size() - i);
    tokens.emplace_back(text.substr(i, len));
    i += len;
  }
  return tokens;
}

}  // namespace ambig
