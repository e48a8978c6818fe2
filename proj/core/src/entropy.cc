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

#include "ambig/entropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ambig/error.h"

namespace ambig {
namespace {

// Weighted forward propagation used by the brute-force entropy.
class WeightPropagator {
 public:
  explicit WeightPropagator(const ProbAutomaton &w) : w_(w) {
    const FiniteAutomaton &a = w.skeleton();
    // Epsilon topological order (Kahn); validation already excluded cycles.
    std::vector<std::size_t> indegree(a.num_states(), 0);
    for (const Transition &t : a.transitions()) {
      if (t.is_epsilon()) ++indegree[t.target];
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (indegree[q] == 0) order_.push_back(q);
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (TransitionId t : a.out(order_[i])) {
        const Transition &tr = a.transition(t);
        if (!tr.is_epsilon()) break;
        if (--indegree[tr.target] == 0) order_.push_back(tr.target);
      }
    }
  }

  std::vector<double> Start() const {
    const FiniteAutomaton &a = w_.skeleton();
    std::vector<double> v(a.num_states(), 0.0);
    for (std::size_t i = 0; i < a.initial().size(); ++i) {
      v[a.initial()[i]] += w_.initial_weights()[i];
    }
    Close(v);
    return v;
  }

  std::vector<double> Step(const std::vector<double> &v, Label symbol) const {
    const FiniteAutomaton &a = w_.skeleton();
    std::vector<double> out(a.num_states(), 0.0);
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (v[q] == 0.0) continue;
      for (TransitionId t : a.out(q)) {
        const Transition &tr = a.transition(t);
        if (tr.label == symbol) out[tr.target] += v[q] * w_.weight(t);
      }
    }
    Close(out);
    return out;
  }

  double Accepting(const std::vector<double> &v) const {
    const FiniteAutomaton &a = w_.skeleton();
    double p = 0.0;
    for (std::size_t i = 0; i < a.final_states().size(); ++i) {
      p += v[a.final_states()[i]] * w_.final_weights()[i];
    }
    return p;
  }

 private:
  void Close(std::vector<double> &v) const {
    const FiniteAutomaton &a = w_.skeleton();
    for (StateId q : order_) {
      if (v[q] == 0.0) continue;
      for (TransitionId t : a.out(q)) {
        const Transition &tr = a.transition(t);
        if (!tr.is_epsilon()) break;
        v[tr.target] += v[q] * w_.weight(t);
      }
    }
  }

  const ProbAutomaton &w_;
  std::vector<StateId> order_;
};

double Convert(double nats, LogBase base) {
  return base == LogBase::k2 ? nats / std::numbers::ln2 : nats;
}

}  // namespace

ProbabilisticAutomaton ValidateProbabilistic(
    const ProbAutomaton &automaton, double tolerance,
    const ShortestDistanceOptions &options) {
  if (HasEpsilonCycle(automaton.skeleton())) {
    Fail(ErrorCode::kEpsilonCycleInput, "automaton has an epsilon-cycle");
  }
  ProbabilisticAutomaton result;
  result.automaton_ = TrimWeighted(automaton);
  const PairWeight total = ShortestDistance<EntropySemiring>(
      MapEntropy(result.automaton_), options);
  result.mass_ = total.first;
  if (!(std::abs(total.first - 1.0) <= tolerance)) {
    throw MassNotOneError(total.first);
  }
  return result;
}

double EntropySemiringEstimate(const ProbabilisticAutomaton &automaton,
                               const ShortestDistanceOptions &options) {
  return ShortestDistance<EntropySemiring>(MapEntropy(automaton.automaton()),
                                           options)
      .second;
}

double ExpectedLength(const ProbabilisticAutomaton &automaton,
                      const ShortestDistanceOptions &options) {
  return ShortestDistance<ExpectationSemiring>(
             MapExpectation(automaton.automaton()), options)
      .second;
}

BruteEntropy ComputeBruteEntropy(const ProbabilisticAutomaton &automaton,
                                 std::size_t max_length,
                                 std::size_t max_strings) {
  const FiniteAutomaton &a = automaton.skeleton();
  const std::size_t k = a.alphabet().size();
  if (k > kBruteMaxAlphabet) {
    Fail(ErrorCode::kAlphabetTooLarge,
         "brute-force entropy needs at most " +
             std::to_string(kBruteMaxAlphabet) + " symbols, got " +
             std::to_string(k));
  }
  const WeightPropagator propagator(automaton.automaton());
  BruteEntropy result;
  double mass = 0.0;
  const auto record = [&](const std::vector<double> &v, std::size_t length) {
    const double p = propagator.Accepting(v);
    ++result.strings;
    if (p <= 0.0) return;
    mass += p;
    result.entropy -= p * std::log(p);
    result.mean_length += p * static_cast<double>(length);
    if (length >= 1) {
      result.mean_log_length += p * std::log(static_cast<double>(length));
    }
  };

  // Depth-first in lexicographic order so the summation order is fixed.
  struct Frame {
    std::vector<double> forward;
    Label next_symbol;
  };
  std::vector<Frame> stack;
  stack.push_back({propagator.Start(), 1});
  record(stack.back().forward, 0);
  while (!stack.empty()) {
    if (result.strings >= max_strings) {
      result.truncated = true;
      break;
    }
    Frame &f = stack.back();
    const std::size_t depth = stack.size() - 1;
    if (depth == max_length || f.next_symbol > k) {
      stack.pop_back();
      continue;
    }
    const Label symbol = f.next_symbol++;
    std::vector<double> next = propagator.Step(f.forward, symbol);
    if (std::all_of(next.begin(), next.end(),
                    [](double x) { return x == 0.0; })) {
      continue;
    }
    record(next, depth + 1);
    stack.push_back({std::move(next), 1});
  }
  result.residual_mass = 1.0 - mass;
  return result;
}

std::string_view LogBaseName(LogBase base) {
  return base == LogBase::k2 ? "2" : "e";
}

EntropyReport ComputeEntropyReport(const ProbabilisticAutomaton &automaton,
                                   const EntropyReportOptions &options) {
  EntropyReport report;
  report.base = options.base;
  const AmbiguityReport ambiguity = Classify(automaton.skeleton());
  report.ambiguity = ambiguity.ambiguity;
  report.dpa = ambiguity.degree;

  const double s = EntropySemiringEstimate(automaton, options.shortest_distance);
  report.l = ExpectedLength(automaton, options.shortest_distance);
  report.s = Convert(s, options.base);
  if (options.brute) {
    const BruteEntropy brute =
        ComputeBruteEntropy(automaton, options.brute_max_length);
    report.h_brute = Convert(brute.entropy, options.base);
    report.residual_mass = brute.residual_mass;
  }

  switch (report.ambiguity) {
    case AmbiguityClass::kFinite: {
      const FiniteAutomaton &a = automaton.skeleton();
      if (a.alphabet().size() > kGrowthMaxAlphabet) break;
      const std::size_t len =
          std::min(options.oracle_max_length, kGrowthMaxLength);
      const PathCount k =
          std::max<PathCount>(1, ComputeGrowthTable(a, len).MaxUpTo(len));
      report.k_observed = k;
      report.bound_low = Convert(
          std::max(0.0, s - std::log(static_cast<double>(k))), options.base);
      report.bound_high = report.s;
      break;
    }
    case AmbiguityClass::kPolynomial: {
      const double d = static_cast<double>(report.dpa);
      if (report.l > 1.0) {
        report.bound_low =
            Convert(std::max(0.0, s - d * std::log(report.l)), options.base);
      } else {
        report.bound_low = 0.0;
        report.bound_vacuous = true;
      }
      report.bound_high = report.s;
      break;
    }
    case AmbiguityClass::kExponential:
      break;
  }
  return report;
}

}  // namespace ambig
