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

#include "ambig/oracle.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ambig/error.h"

namespace ambig {
namespace {

PathCount Add(PathCount a, PathCount b) {
  PathCount r;
  if (__builtin_add_overflow(a, b, &r)) {
    Fail(ErrorCode::kCountOverflow, "path count overflow");
  }
  return r;
}

// Topological order of the epsilon-subgraph (Kahn). Throws on cycles.
std::vector<StateId> EpsilonOrder(const FiniteAutomaton &a) {
  const std::size_t n = a.num_states();
  std::vector<std::size_t> indegree(n, 0);
  for (const Transition &t : a.transitions()) {
    if (t.is_epsilon()) ++indegree[t.target];
  }
  std::vector<StateId> order;
  order.reserve(n);
  for (StateId q = 0; q < n; ++q) {
    if (indegree[q] == 0) order.push_back(q);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (TransitionId t : a.out(order[i])) {
      const Transition &tr = a.transition(t);
      if (!tr.is_epsilon()) break;
      if (--indegree[tr.target] == 0) order.push_back(tr.target);
    }
  }
  if (order.size() != n) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  return order;
}

void CheckWord(const FiniteAutomaton &a, const Word &word) {
  for (Label l : word) {
    if (l == kEpsilon || l > a.alphabet().size()) {
      Fail(ErrorCode::kSymbolNotInAlphabet, "word symbol " +
                                                std::to_string(l) +
                                                " is not in the alphabet");
    }
  }
}

// Per-state path counts, epsilon-closed.
class Propagator {
 public:
  explicit Propagator(const FiniteAutomaton &a)
      : a_(a), order_(EpsilonOrder(a)) {}

  std::vector<PathCount> Start() const {
    std::vector<PathCount> v(a_.num_states(), 0);
    for (StateId q : a_.initial()) v[q] = 1;
    Close(v);
    return v;
  }

  std::vector<PathCount> Step(const std::vector<PathCount> &v,
                              Label symbol) const {
    std::vector<PathCount> w(a_.num_states(), 0);
    for (StateId q = 0; q < a_.num_states(); ++q) {
      if (v[q] == 0) continue;
      for (TransitionId t : a_.out(q)) {
        const Transition &tr = a_.transition(t);
        if (tr.label == symbol) w[tr.target] = Add(w[tr.target], v[q]);
      }
    }
    Close(w);
    return w;
  }

  PathCount Accepting(const std::vector<PathCount> &v) const {
    PathCount total = 0;
    for (StateId q : a_.final_states()) total = Add(total, v[q]);
    return total;
  }

 private:
  void Close(std::vector<PathCount> &v) const {
    for (StateId q : order_) {
      if (v[q] == 0) continue;
      for (TransitionId t : a_.out(q)) {
        const Transition &tr = a_.transition(t);
        if (!tr.is_epsilon()) break;
        v[tr.target] = Add(v[tr.target], v[q]);
      }
    }
  }

  const FiniteAutomaton &a_;
  std::vector<StateId> order_;
};

}  // namespace

PathCount CountPaths(const FiniteAutomaton &automaton, const Word &word) {
  const FiniteAutomaton &a = automaton;
  CheckWord(a, word);
  const std::vector<StateId> order = EpsilonOrder(a);
  const std::size_t n = a.num_states();
  const std::size_t len = word.size();
  // suffix[i][q]: paths from q reading word[i..] into a final state.
  std::vector<std::vector<PathCount>> suffix(len + 1,
                                             std::vector<PathCount>(n, 0));
  for (std::size_t i = len + 1; i-- > 0;) {
    auto &row = suffix[i];
    // Epsilon successors are settled first: reverse topological order.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const StateId q = *it;
      PathCount c = (i == len && a.is_final(q)) ? 1 : 0;
      for (TransitionId t : a.out(q)) {
        const Transition &tr = a.transition(t);
        if (tr.is_epsilon()) {
          c = Add(c, row[tr.target]);
        } else if (i < len && tr.label == word[i]) {
          c = Add(c, suffix[i + 1][tr.target]);
        }
      }
      row[q] = c;
    }
  }
  PathCount total = 0;
  for (StateId q : a.initial()) total = Add(total, suffix[0][q]);
  return total;
}

PathCount CountPathsByPropagation(const FiniteAutomaton &automaton,
                                  const Word &word) {
  CheckWord(automaton, word);
  const Propagator propagator(automaton);
  std::vector<PathCount> v = propagator.Start();
  for (Label l : word) v = propagator.Step(v, l);
  return propagator.Accepting(v);
}

std::vector<Path> EnumeratePaths(const FiniteAutomaton &automaton,
                                 const Word &word, std::size_t limit) {
  const FiniteAutomaton &a = automaton;
  CheckWord(a, word);
  EpsilonOrder(a);
  std::vector<Path> paths;
  Path current;
  // Explicit DFS: frame = (state, position in word, next out() index).
  struct Frame {
    StateId state;
    std::size_t pos;
    std::size_t next;
  };
  for (StateId start : a.initial()) {
    std::vector<Frame> stack{{start, 0, 0}};
    current.clear();
    while (!stack.empty() && paths.size() < limit) {
      Frame &f = stack.back();
      if (f.next == 0 && f.pos == word.size() && a.is_final(f.state)) {
        paths.push_back(current);
      }
      const auto out = a.out(f.state);
      bool pushed = false;
      while (f.next < out.size()) {
        const TransitionId t = out[f.next++];
        const Transition &tr = a.transition(t);
        const bool ok = tr.is_epsilon() ||
                        (f.pos < word.size() && tr.label == word[f.pos]);
        if (ok) {
          current.push_back(t);
          stack.push_back({tr.target, f.pos + (tr.is_epsilon() ? 0 : 1), 0});
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        stack.pop_back();
        if (!stack.empty()) current.pop_back();
      }
    }
  }
  return paths;
}

PathCount GrowthTable::MaxUpTo(std::size_t length) const {
  PathCount m = 0;
  for (std::size_t n = 0; n <= length && n < rows.size(); ++n) {
    m = std::max(m, rows[n].max_count);
  }
  return m;
}

GrowthTable ComputeGrowthTable(const FiniteAutomaton &automaton,
                               std::size_t max_length) {
  const FiniteAutomaton &a = automaton;
  const std::size_t k = a.alphabet().size();
  if (k > kGrowthMaxAlphabet) {
    Fail(ErrorCode::kAlphabetTooLarge,
         "growth tables need at most " + std::to_string(kGrowthMaxAlphabet) +
             " symbols, got " + std::to_string(k));
  }
  if (max_length > kGrowthMaxLength) {
    Fail(ErrorCode::kInvalidArgument,
         "growth tables are limited to length " +
             std::to_string(kGrowthMaxLength));
  }
  const Propagator propagator(a);
  GrowthTable table;
  table.rows.resize(max_length + 1);
  for (std::size_t n = 0; n <= max_length; ++n) table.rows[n].length = n;

  // Depth-first over strings in lexicographic order; a prefix with no live
  // path cannot be extended to an accepted string.
  struct Frame {
    std::vector<PathCount> counts;
    Label next_symbol;
  };
  Word prefix;
  std::vector<Frame> stack;
  stack.push_back({propagator.Start(), 1});
  const auto record = [&](const std::vector<PathCount> &counts) {
    GrowthRow &row = table.rows[prefix.size()];
    const PathCount c = propagator.Accepting(counts);
    if (c > row.max_count) {
      row.max_count = c;
      row.argmax = prefix;
    }
  };
  record(stack.back().counts);
  while (!stack.empty()) {
    Frame &f = stack.back();
    if (prefix.size() == max_length || f.next_symbol > k) {
      stack.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    const Label symbol = f.next_symbol++;
    std::vector<PathCount> counts = propagator.Step(f.counts, symbol);
    if (std::all_of(counts.begin(), counts.end(),
                    [](PathCount c) { return c == 0; })) {
      continue;
    }
    prefix.push_back(symbol);
    record(counts);
    stack.push_back({std::move(counts), 1});
  }
  return table;
}

FiniteAutomaton EliminateEpsilonTransition(const FiniteAutomaton &automaton,
                                           TransitionId e0) {
  const FiniteAutomaton &a = automaton;
  if (e0 >= a.num_transitions() || !a.transition(e0).is_epsilon()) {
    Fail(ErrorCode::kNotEpsilon,
         "transition " + std::to_string(e0) + " is not an epsilon-transition");
  }
  const StateId p = a.transition(e0).source;
  const StateId r = a.transition(e0).target;
  std::vector<Transition> transitions;
  transitions.reserve(a.num_transitions() + a.out(r).size());
  for (TransitionId t = 0; t < a.num_transitions(); ++t) {
    if (t != e0) transitions.push_back(a.transition(t));
  }
  for (TransitionId t : a.out(r)) {
    const Transition &e = a.transition(t);
    const Transition added{p, e.label, e.target};
    if (std::find(transitions.begin(), transitions.end(), added) !=
        transitions.end()) {
      Fail(ErrorCode::kTransformConflict,
           "epsilon removal would duplicate a transition from state " +
               std::to_string(p));
    }
    transitions.push_back(added);
  }
  const auto fin = a.final_states();
  std::vector<StateId> final_states(fin.begin(), fin.end());
  if (a.is_final(r)) {
    if (a.is_final(p)) {
      Fail(ErrorCode::kTransformConflict,
           "epsilon removal would merge accepting paths at state " +
               std::to_string(p));
    }
    final_states.push_back(p);
  }
  const auto init = a.initial();
  return FiniteAutomaton::Create(a.alphabet(), a.num_states(),
                                 {init.begin(), init.end()},
                                 std::move(final_states),
                                 std::move(transitions));
}

FiniteAutomaton SplitTransition(const FiniteAutomaton &automaton,
                                TransitionId t) {
  const FiniteAutomaton &a = automaton;
  if (t >= a.num_transitions()) {
    Fail(ErrorCode::kInvalidArgument,
         "transition " + std::to_string(t) + " does not exist");
  }
  const Transition e = a.transition(t);
  if (e.is_epsilon()) {
    Fail(ErrorCode::kEpsilonInput, "cannot split an epsilon-transition");
  }
  const auto fresh = static_cast<StateId>(a.num_states());
  std::vector<Transition> transitions(a.transitions().begin(),
                                      a.transitions().end());
  transitions[t] = {e.source, kEpsilon, fresh};
  transitions.push_back({fresh, e.label, e.target});
  const auto init = a.initial();
  const auto fin = a.final_states();
  return FiniteAutomaton::Create(a.alphabet(), a.num_states() + 1,
                                 {init.begin(), init.end()},
                                 {fin.begin(), fin.end()},
                                 std::move(transitions));
}

FiniteAutomaton RenameStates(const FiniteAutomaton &automaton,
                             const std::vector<StateId> &permutation) {
  const FiniteAutomaton &a = automaton;
  if (permutation.size() != a.num_states()) {
    Fail(ErrorCode::kInvalidArgument, "permutation has the wrong size");
  }
  std::vector<char> used(a.num_states(), 0);
  for (StateId q : permutation) {
    if (q >= a.num_states() || used[q]) {
      Fail(ErrorCode::kInvalidArgument, "not a permutation");
    }
    used[q] = 1;
  }
  std::vector<Transition> transitions;
  transitions.reserve(a.num_transitions());
  for (const Transition &t : a.transitions()) {
    transitions.push_back(
        {permutation[t.source], t.label, permutation[t.target]});
  }
  std::vector<StateId> initial;
  for (StateId q : a.initial()) initial.push_back(permutation[q]);
  std::vector<StateId> final_states;
  for (StateId q : a.final_states()) final_states.push_back(permutation[q]);
  return FiniteAutomaton::Create(a.alphabet(), a.num_states(),
                                 std::move(initial), std::move(final_states),
                                 std::move(transitions));
}

FiniteAutomaton RandomAutomaton(const RandomAutomatonParams &params) {
  if (params.states == 0 || params.symbols == 0 || params.symbols > 26 ||
      params.density < 0.0 || params.density > 1.0 ||
      params.eps_density < 0.0 || params.eps_density >= 1.0) {
    Fail(ErrorCode::kInvalidArgument, "invalid random automaton parameters");
  }
  Uniform uniform(params.seed);
  const std::size_t n = params.states;
  std::vector<std::string> alphabet;
  for (std::size_t s = 0; s < params.symbols; ++s) {
    alphabet.emplace_back(1, static_cast<char>('a' + s));
  }
  std::vector<Transition> transitions;
  for (StateId p = 0; p < n; ++p) {
    for (Label l = 1; l <= params.symbols; ++l) {
      for (StateId q = 0; q < n; ++q) {
        if (uniform() < params.density) transitions.push_back({p, l, q});
      }
    }
  }
  for (StateId p = 0; p < n; ++p) {
    for (StateId q = p + 1; q < n; ++q) {
      if (uniform() < params.eps_density) {
        transitions.push_back({p, kEpsilon, q});
      }
    }
  }
  std::vector<StateId> final_states{static_cast<StateId>(n - 1)};
  for (StateId q = 1; q + 1 < n; ++q) {
    if (uniform() < 0.5) final_states.push_back(q);
  }
  return Trim(FiniteAutomaton::Create(std::move(alphabet), n, {0},
                                      std::move(final_states),
                                      std::move(transitions)));
}

ProbAutomaton RandomProbabilistic(const FiniteAutomaton &skeleton,
                                  std::uint64_t seed) {
  const FiniteAutomaton &a = skeleton;
  Uniform uniform(seed);
  std::vector<double> weights(a.num_transitions(), 0.0);
  std::vector<double> final_by_state(a.num_states(), 0.0);
  for (StateId q = 0; q < a.num_states(); ++q) {
    double total = 0.0;
    for (TransitionId t : a.out(q)) {
      weights[t] = 0.1 + uniform();
      total += weights[t];
    }
    if (a.is_final(q)) {
      final_by_state[q] = 0.1 + uniform();
      total += final_by_state[q];
    }
    for (TransitionId t : a.out(q)) weights[t] /= total;
    if (a.is_final(q)) final_by_state[q] /= total;
  }
  std::vector<double> initial;
  double initial_total = 0.0;
  for (std::size_t i = 0; i < a.initial().size(); ++i) {
    initial.push_back(0.1 + uniform());
    initial_total += initial.back();
  }
  for (double &w : initial) w /= initial_total;
  std::vector<double> final_weights;
  for (StateId q : a.final_states()) final_weights.push_back(final_by_state[q]);
  return ProbAutomaton(a, std::move(weights), std::move(initial),
                       std::move(final_weights));
}

}  // namespace ambig
