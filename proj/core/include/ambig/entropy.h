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
// Entropy of probabilistic automata.
//
// The entropy semiring estimate S sums -w log w over successful paths
// rather than over strings, so it equals the entropy H for unambiguous
// automata and over-approximates it otherwise:
//   finitely ambiguous, at most k paths per string:  H <= S <= H + log k
//   polynomially ambiguous of degree d:             H <= S <= H + d log L
// where L is the expected length of an accepted string. All logarithms
// are natural unless a report asks for base 2.

#ifndef AMBIG_ENTROPY_H_
#define AMBIG_ENTROPY_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>

#include "ambig/ambiguity.h"
#include "ambig/oracle.h"
#include "ambig/shortest_distance.h"
#include "ambig/weighted.h"

namespace ambig {

// A trimmed probabilistic automaton whose total mass was checked to be 1.
class ProbabilisticAutomaton {
 public:
  const ProbAutomaton &automaton() const { return automaton_; }
  const FiniteAutomaton &skeleton() const { return automaton_.skeleton(); }
  double mass() const { return mass_; }

 private:
  friend ProbabilisticAutomaton ValidateProbabilistic(
      const ProbAutomaton &, double, const ShortestDistanceOptions &);

  ProbAutomaton automaton_;
  double mass_ = 0.0;
};

// Trims, then accepts iff |mass - 1| <= tolerance. Throws MassNotOneError,
// kNonConvergent, kEpsilonCycleInput, or the weight errors of MapEntropy.
ProbabilisticAutomaton ValidateProbabilistic(
    const ProbAutomaton &automaton, double tolerance = 1e-9,
    const ShortestDistanceOptions &options = {});

// S: second component of the entropy-semiring shortest distance.
double EntropySemiringEstimate(const ProbabilisticAutomaton &automaton,
                               const ShortestDistanceOptions &options = {});

// L: second component of the expectation-semiring shortest distance.
double ExpectedLength(const ProbabilisticAutomaton &automaton,
                      const ShortestDistanceOptions &options = {});

inline constexpr std::size_t kBruteMaxAlphabet = 4;

struct BruteEntropy {
  // -sum p log p over all strings up to the length limit.
  double entropy = 0.0;
  // 1 - sum p over the same strings.
  double residual_mass = 0.0;
  std::size_t strings = 0;
  // Set when max_strings stopped the enumeration early.
  bool truncated = false;
  // sum p |x| and sum p log |x| (strings of length >= 1) over the same
  // strings.
  double mean_length = 0.0;
  double mean_log_length = 0.0;
};

// Enumerates every string of length <= max_length, computing its weight by
// forward propagation with epsilon-closure. Stops after max_strings
// strings; residual_mass stays exact for what was visited. Throws
// kAlphabetTooLarge.
BruteEntropy ComputeBruteEntropy(
    const ProbabilisticAutomaton &automaton, std::size_t max_length,
    std::size_t max_strings = std::numeric_limits<std::size_t>::max());

enum class LogBase { kE, k2 };

std::string_view LogBaseName(LogBase base);

struct EntropyReportOptions {
  ShortestDistanceOptions shortest_distance;
  bool brute = false;
  std::size_t brute_max_length = 20;
  // Length limit of the growth table giving the observed path bound k.
  std::size_t oracle_max_length = 10;
  LogBase base = LogBase::kE;
};

struct EntropyReport {
  double s = 0.0;
  std::optional<double> h_brute;
  std::optional<double> residual_mass;
  double l = 0.0;
  AmbiguityClass ambiguity = AmbiguityClass::kFinite;
  std::size_t dpa = 0;
  // Largest path count seen in the growth table (finite case only).
  std::optional<PathCount> k_observed;
  // Interval containing H, with bound_high = s. Absent for exponential
  // ambiguity, or when k cannot be observed.
  std::optional<double> bound_low;
  std::optional<double> bound_high;
  // Polynomial case with L <= 1: the d log L bound says nothing and
  // bound_low falls back to 0.
  bool bound_vacuous = false;
  LogBase base = LogBase::kE;
};

// Entropy quantities are expressed in options.base; l is a length.
EntropyReport ComputeEntropyReport(const ProbabilisticAutomaton &automaton,
                                   const EntropyReportOptions &options = {});

}  // namespace ambig

#endif  // AMBIG_ENTROPY_H_
