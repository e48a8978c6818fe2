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

#include "ambig/ambiguity.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "ambig/error.h"
#include "ambig/scc.h"

namespace ambig {
namespace {

void RequireAnalyzable(const FiniteAutomaton &a) {
  if (HasEpsilonCycle(a)) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  if (!IsTrim(a)) Fail(ErrorCode::kNotTrim, "automaton is not trim");
}

// Product transitions from `from` to the first state accepted by `is_goal`,
// restricted to states where `allowed` holds. Breadth-first, so the path
// is shortest; ties break by state id and out() order.
template <typename Allowed, typename Goal>
std::optional<Path> ShortestPath(const FiniteAutomaton &a,
                                 std::span<const StateId> from,
                                 Allowed allowed, Goal is_goal) {
  std::vector<TransitionId> parent(a.num_states(), kNoTransition);
  std::vector<char> seen(a.num_states(), 0);
  std::deque<StateId> queue;
  for (StateId s : from) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    if (is_goal(s)) {
      Path path;
      StateId cur = s;
      while (parent[cur] != kNoTransition) {
        path.push_back(parent[cur]);
        cur = a.transition(parent[cur]).source;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (TransitionId t : a.out(s)) {
      const StateId r = a.transition(t).target;
      if (!seen[r] && allowed(r)) {
        seen[r] = 1;
        parent[r] = t;
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

Path ProjectPath(const ProductAutomaton &product, const Path &path,
                 std::size_t i) {
  Path out;
  for (TransitionId t : path) {
    const TransitionId o = product.origin(t, i);
    if (o != kNoTransition) out.push_back(o);
  }
  return out;
}

// EDA test on a trim, epsilon-cycle free automaton.
bool EdaOnSquare(const FiniteAutomaton &a, EdaWitness *witness) {
  if (a.num_states() == 0) return false;
  const ProductAutomaton square = Square(a);
  const FiniteAutomaton &b = square.underlying();
  const SccDecomposition scc =
      StronglyConnectedComponents(Digraph::FromAutomaton(b));
  std::vector<char> has_diagonal(scc.num_components, 0);
  std::vector<char> has_off_diagonal(scc.num_components, 0);
  for (StateId s = 0; s < b.num_states(); ++s) {
    if (square.component(s, 0) == square.component(s, 1)) {
      has_diagonal[scc.component[s]] = 1;
    } else {
      has_off_diagonal[scc.component[s]] = 1;
    }
  }
  // Lowest-id diagonal state lying in a qualifying component.
  StateId start = kNoState;
  for (StateId s = 0; s < b.num_states(); ++s) {
    const auto c = scc.component[s];
    if (has_diagonal[c] && has_off_diagonal[c] &&
        square.component(s, 0) == square.component(s, 1)) {
      start = s;
      break;
    }
  }
  if (start == kNoState) return false;
  if (witness == nullptr) return true;

  const auto c = scc.component[start];
  const auto in_component = [&](StateId s) { return scc.component[s] == c; };
  const StateId from[] = {start};
  auto there = ShortestPath(b, from, in_component, [&](StateId s) {
    return square.component(s, 0) != square.component(s, 1);
  });
  if (!there) Fail(ErrorCode::kInternal, "EDA component search failed");
  const StateId mid = there->empty() ? start : b.transition(there->back()).target;
  const StateId from_mid[] = {mid};
  auto back = ShortestPath(b, from_mid, in_component,
                           [&](StateId s) { return s == start; });
  if (!back) Fail(ErrorCode::kInternal, "EDA component search failed");
  Path cycle = std::move(*there);
  cycle.insert(cycle.end(), back->begin(), back->end());

  witness->state = square.component(start, 0);
  witness->first_cycle = ProjectPath(square, cycle, 0);
  witness->second_cycle = ProjectPath(square, cycle, 1);
  witness->label = PathLabel(a, witness->first_cycle);
  return true;
}

struct IdaAnalysis {
  std::vector<std::pair<StateId, StateId>> pairs;
};

// The '#' criterion on a cube. Hub nodes stand in for the complete
// bipartite '#' edge sets: rep(p, q, q) -> hub(p, q) -> rep(p, p, q).
// With skip_same_component, pairs inside one component of A get no '#'
// edges. Only valid when A has no EDA.
IdaAnalysis IdaOnCube(const FiniteAutomaton &a, const ProductAutomaton &cube,
                      bool skip_same_component) {
  IdaAnalysis result;
  const FiniteAutomaton &b = cube.underlying();
  const std::size_t n = b.num_states();
  const std::uint64_t na = a.num_states();
  std::unordered_map<std::uint64_t, std::uint32_t> hub_ids;
  std::vector<std::pair<StateId, StateId>> hub_pairs;
  const auto hub = [&](StateId p, StateId q) {
    auto [it, inserted] = hub_ids.try_emplace(
        std::uint64_t{p} * na + q, static_cast<std::uint32_t>(n + hub_pairs.size()));
    if (inserted) hub_pairs.emplace_back(p, q);
    return it->second;
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(b.num_transitions() + 2 * n);
  for (const Transition &t : b.transitions()) {
    edges.emplace_back(t.source, t.target);
  }
  // Without EDA, a pair inside one component of A only arises from a
  // single cycle read with its epsilon-transitions shifted (0 -eps-> 1 -a-> 0
  // is unambiguous, yet (0,1) meets the definition). Such pairs add no
  // ambiguity.
  const SccDecomposition a_scc =
      StronglyConnectedComponents(Digraph::FromAutomaton(a));
  const auto apart = [&](StateId p, StateId q) {
    return p != q &&
           (!skip_same_component || a_scc.component[p] != a_scc.component[q]);
  };
  for (StateId s = 0; s < n; ++s) {
    const StateId x = cube.component(s, 0);
    const StateId y = cube.component(s, 1);
    const StateId z = cube.component(s, 2);
    if (y == z && apart(x, y)) {
      edges.emplace_back(s, hub(x, y));
    } else if (x == y && apart(y, z)) {
      edges.emplace_back(hub(x, z), s);
    }
  }
  const Digraph graph(n + hub_pairs.size(), edges);
  const SccDecomposition scc = StronglyConnectedComponents(graph);
  std::vector<char> has_symbol(scc.num_components, 0);
  for (const Transition &t : b.transitions()) {
    if (!t.is_epsilon() &&
        scc.component[t.source] == scc.component[t.target]) {
      has_symbol[scc.component[t.source]] = 1;
    }
  }
  for (std::size_t h = 0; h < hub_pairs.size(); ++h) {
    if (has_symbol[scc.component[n + h]]) result.pairs.push_back(hub_pairs[h]);
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

std::optional<IdaWitness> IdaWitnessOnCube(const FiniteAutomaton &a,
                                           const ProductAutomaton &cube,
                                           StateId p, StateId q) {
  const FiniteAutomaton &b = cube.underlying();
  const std::size_t n = b.num_states();
  const auto is_rep = [&](StateId s, StateId x, StateId y, StateId z) {
    return cube.component(s, 0) == x && cube.component(s, 1) == y &&
           cube.component(s, 2) == z;
  };
  // Breadth-first search over (state, symbol-seen) nodes.
  const std::size_t m = 2 * n;
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(m, kRoot);
  std::vector<TransitionId> via(m, kNoTransition);
  std::vector<char> seen(m, 0);
  std::deque<std::size_t> queue;
  for (StateId s = 0; s < n; ++s) {
    if (is_rep(s, p, p, q)) {
      seen[2 * s] = 1;
      queue.push_back(2 * s);
    }
  }
  std::size_t goal = m;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const auto s = static_cast<StateId>(node / 2);
    const bool symbol_seen = node % 2 == 1;
    if (symbol_seen && is_rep(s, p, q, q)) {
      goal = node;
      break;
    }
    for (TransitionId t : b.out(s)) {
      const Transition &tr = b.transition(t);
      const std::size_t next =
          2 * std::size_t{tr.target} + (symbol_seen || !tr.is_epsilon() ? 1 : 0);
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = node;
        via[next] = t;
        queue.push_back(next);
      }
    }
  }
  if (goal == m) return std::nullopt;

  Path path;
  for (std::size_t node = goal; parent[node] != kRoot; node = parent[node]) {
    path.push_back(via[node]);
  }
  std::reverse(path.begin(), path.end());

  IdaWitness w;
  w.p = p;
  w.q = q;
  w.loop_p = ProjectPath(cube, path, 0);
  w.path_pq = ProjectPath(cube, path, 1);
  w.loop_q = ProjectPath(cube, path, 2);
  w.label = PathLabel(a, w.loop_p);
  return w;
}

// Longest '#'-weighted path in the condensation of `a` augmented with one
// '#' edge per IDA pair.
std::size_t DpaOnCondensation(
    const FiniteAutomaton &a,
    const std::vector<std::pair<StateId, StateId>> &pairs,
    std::vector<std::pair<StateId, StateId>> *chain) {
  if (pairs.empty()) return 0;
  const SccDecomposition scc =
      StronglyConnectedComponents(Digraph::FromAutomaton(a));
  const std::size_t k = scc.num_components;
  // Out-edges of the component graph: (target, pair index or -1).
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> out(k);
  for (const Transition &t : a.transitions()) {
    const auto cu = scc.component[t.source];
    const auto cv = scc.component[t.target];
    if (cu != cv) out[cu].emplace_back(cv, -1);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto cp = scc.component[pairs[i].first];
    const auto cq = scc.component[pairs[i].second];
    if (cp <= cq) {
      Fail(ErrorCode::kInternal,
           "IDA pair (" + std::to_string(pairs[i].first) + ", " +
               std::to_string(pairs[i].second) +
               ") does not descend in the component graph");
    }
    out[cp].emplace_back(cq, static_cast<std::int64_t>(i));
  }
  // Component ids are reverse-topological: successors have smaller ids.
  std::vector<std::size_t> best(k, 0);
  std::vector<std::pair<std::uint32_t, std::int64_t>> next(
      k, {static_cast<std::uint32_t>(k), -1});
  for (std::uint32_t c = 0; c < k; ++c) {
    for (const auto &[target, pair] : out[c]) {
      const std::size_t value = best[target] + (pair >= 0 ? 1 : 0);
      if (value > best[c]) {
        best[c] = value;
        next[c] = {target, pair};
      }
    }
  }
  const auto top = static_cast<std::uint32_t>(
      std::max_element(best.begin(), best.end()) - best.begin());
  if (chain != nullptr) {
    chain->clear();
    for (std::uint32_t c = top; c < k && best[c] > 0; c = next[c].first) {
      if (next[c].second >= 0) {
        chain->push_back(pairs[static_cast<std::size_t>(next[c].second)]);
      }
    }
  }
  return best[top];
}

Path MapPath(const Path &path, const std::vector<TransitionId> &map) {
  Path out;
  out.reserve(path.size());
  for (TransitionId t : path) out.push_back(map[t]);
  return out;
}

IdaWitness MapIdaWitness(IdaWitness w, const TrimResult &trim) {
  w.p = trim.state_map[w.p];
  w.q = trim.state_map[w.q];
  w.loop_p = MapPath(w.loop_p, trim.transition_map);
  w.path_pq = MapPath(w.path_pq, trim.transition_map);
  w.loop_q = MapPath(w.loop_q, trim.transition_map);
  return w;
}

bool Reachable(const FiniteAutomaton &a, StateId from, StateId to) {
  const StateId start[] = {from};
  return ShortestPath(
             a, start, [](StateId) { return true; },
             [to](StateId s) { return s == to; })
      .has_value();
}

bool Fails(std::string *reason, const std::string &message) {
  if (reason != nullptr) *reason = message;
  return false;
}

bool CheckPath(const FiniteAutomaton &a, const Path &path, StateId from,
               StateId to, const char *name, std::string *reason) {
  if (path.empty()) return Fails(reason, std::string(name) + " is empty");
  if (!IsPath(a, path)) {
    return Fails(reason, std::string(name) + " is not a path");
  }
  if (PathOrigin(a, path) != from || PathDestination(a, path) != to) {
    return Fails(reason, std::string(name) + " has the wrong endpoints");
  }
  return true;
}

bool ValidateIda(const FiniteAutomaton &a, const IdaWitness &w,
                 std::string *reason) {
  if (w.p == w.q) return Fails(reason, "IDA states coincide");
  if (w.p >= a.num_states() || w.q >= a.num_states()) {
    return Fails(reason, "IDA state out of range");
  }
  if (!CheckPath(a, w.loop_p, w.p, w.p, "loop at p", reason) ||
      !CheckPath(a, w.path_pq, w.p, w.q, "path p->q", reason) ||
      !CheckPath(a, w.loop_q, w.q, w.q, "loop at q", reason)) {
    return false;
  }
  const Word v = PathLabel(a, w.loop_p);
  if (v.empty()) return Fails(reason, "IDA label is empty");
  if (PathLabel(a, w.path_pq) != v || PathLabel(a, w.loop_q) != v ||
      w.label != v) {
    return Fails(reason, "IDA paths do not share one label");
  }
  return true;
}

}  // namespace

std::string_view AmbiguityClassName(AmbiguityClass c) {
  switch (c) {
    case AmbiguityClass::kFinite:
      return "FINITE";
    case AmbiguityClass::kPolynomial:
      return "POLYNOMIAL";
    case AmbiguityClass::kExponential:
      return "EXPONENTIAL";
  }
  return "?";
}

std::string ToLine(const AmbiguityReport &report) {
  std::string line(AmbiguityClassName(report.ambiguity));
  if (report.ambiguity == AmbiguityClass::kPolynomial) {
    line += " degree=" + std::to_string(report.degree);
  }
  return line;
}

bool TestEda(const FiniteAutomaton &automaton, EdaWitness *witness) {
  RequireAnalyzable(automaton);
  return EdaOnSquare(automaton, witness);
}

bool TestIda(const FiniteAutomaton &automaton) {
  return !IdaPairs(automaton).empty();
}

std::vector<std::pair<StateId, StateId>> IdaPairs(
    const FiniteAutomaton &automaton) {
  RequireAnalyzable(automaton);
  if (automaton.num_states() == 0) return {};
  const bool eda = EdaOnSquare(automaton, nullptr);
  return IdaOnCube(automaton, Cube(automaton), !eda).pairs;
}

std::size_t Dpa(const FiniteAutomaton &automaton, DpaWitness *witness) {
  RequireAnalyzable(automaton);
  if (EdaOnSquare(automaton, nullptr)) {
    Fail(ErrorCode::kExponentiallyAmbiguousInput,
         "automaton is exponentially ambiguous");
  }
  if (automaton.num_states() == 0) return 0;
  const ProductAutomaton cube = Cube(automaton);
  const IdaAnalysis ida = IdaOnCube(automaton, cube, true);
  std::vector<std::pair<StateId, StateId>> chain;
  const std::size_t d = DpaOnCondensation(automaton, ida.pairs, &chain);
  if (witness != nullptr) {
    witness->pairs = chain;
    witness->certificates.clear();
    for (const auto &[p, q] : chain) {
      if (auto w = IdaWitnessOnCube(automaton, cube, p, q)) {
        witness->certificates.push_back(std::move(*w));
      }
    }
  }
  return d;
}

std::optional<IdaWitness> FindIdaWitness(const FiniteAutomaton &automaton,
                                         StateId p, StateId q) {
  if (HasEpsilonCycle(automaton)) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  if (p == q || automaton.num_states() == 0) return std::nullopt;
  return IdaWitnessOnCube(automaton, Cube(automaton), p, q);
}

AmbiguityReport Classify(const FiniteAutomaton &automaton,
                         const ClassifyOptions &options) {
  if (HasEpsilonCycle(automaton)) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  const TrimResult trim = TrimWithMaps(automaton);
  const FiniteAutomaton &a = trim.automaton;
  AmbiguityReport report;
  if (a.num_states() == 0) return report;

  EdaWitness eda;
  if (EdaOnSquare(a, options.witness ? &eda : nullptr)) {
    report.ambiguity = AmbiguityClass::kExponential;
    if (options.check_eda_implies_ida &&
        IdaOnCube(a, Cube(a), false).pairs.empty()) {
      Fail(ErrorCode::kInternal,
           "exponential ambiguity detected without infinite ambiguity");
    }
    if (options.witness) {
      eda.state = trim.state_map[eda.state];
      eda.first_cycle = MapPath(eda.first_cycle, trim.transition_map);
      eda.second_cycle = MapPath(eda.second_cycle, trim.transition_map);
      report.witness = std::move(eda);
    }
    return report;
  }

  const ProductAutomaton cube = Cube(a);
  const IdaAnalysis ida = IdaOnCube(a, cube, true);
  if (ida.pairs.empty()) return report;
  std::vector<std::pair<StateId, StateId>> chain;
  report.degree = DpaOnCondensation(a, ida.pairs, &chain);
  report.ambiguity = AmbiguityClass::kPolynomial;
  if (options.witness) {
    DpaWitness dpa;
    for (const auto &[p, q] : chain) {
      dpa.pairs.emplace_back(trim.state_map[p], trim.state_map[q]);
      if (auto w = IdaWitnessOnCube(a, cube, p, q)) {
        dpa.certificates.push_back(MapIdaWitness(std::move(*w), trim));
      }
    }
    report.witness = std::move(dpa);
  }
  return report;
}

bool ValidateWitness(const FiniteAutomaton &automaton, const Witness &witness,
                     std::string *reason) {
  const FiniteAutomaton &a = automaton;
  if (const auto *eda = std::get_if<EdaWitness>(&witness)) {
    if (eda->state >= a.num_states()) {
      return Fails(reason, "EDA state out of range");
    }
    if (!CheckPath(a, eda->first_cycle, eda->state, eda->state,
                   "first cycle", reason) ||
        !CheckPath(a, eda->second_cycle, eda->state, eda->state,
                   "second cycle", reason)) {
      return false;
    }
    const Word v = PathLabel(a, eda->first_cycle);
    if (PathLabel(a, eda->second_cycle) != v || eda->label != v) {
      return Fails(reason, "EDA cycles do not share one label");
    }
    if (eda->first_cycle == eda->second_cycle) {
      return Fails(reason, "EDA cycles are identical");
    }
    return true;
  }
  if (const auto *ida = std::get_if<IdaWitness>(&witness)) {
    return ValidateIda(a, *ida, reason);
  }
  const auto &dpa = std::get<DpaWitness>(witness);
  if (dpa.pairs.empty()) return Fails(reason, "DPA chain is empty");
  const TrimResult trim = TrimWithMaps(a);
  const FiniteAutomaton &trimmed = trim.automaton;
  std::vector<StateId> to_trim(a.num_states(), kNoState);
  for (StateId s = 0; s < trim.state_map.size(); ++s) {
    to_trim[trim.state_map[s]] = s;
  }
  const ProductAutomaton cube = Cube(trimmed);
  for (std::size_t i = 0; i < dpa.pairs.size(); ++i) {
    const auto [p, q] = dpa.pairs[i];
    if (p >= a.num_states() || q >= a.num_states() || p == q ||
        to_trim[p] == kNoState || to_trim[q] == kNoState) {
      return Fails(reason, "DPA pair " + std::to_string(i) + " is invalid");
    }
    if (!IdaWitnessOnCube(trimmed, cube, to_trim[p], to_trim[q])) {
      return Fails(reason, "DPA pair " + std::to_string(i) +
                               " has no non-epsilon cube path");
    }
    if (i > 0 && !Reachable(a, dpa.pairs[i - 1].second, p)) {
      return Fails(reason, "DPA pairs " + std::to_string(i - 1) + " and " +
                               std::to_string(i) + " are not connected");
    }
  }
  for (const IdaWitness &w : dpa.certificates) {
    if (!ValidateIda(a, w, reason)) return false;
  }
  return true;
}

}  // namespace ambig
