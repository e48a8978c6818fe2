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
// Deciding finite, polynomial and exponential ambiguity of epsilon-cycle
// free automata, and computing the degree of polynomial ambiguity.
//
// Exponential ambiguity is read off the strongly connected components of
// the square A x A: it holds iff some component contains a diagonal state
// (p, p) together with an off-diagonal state (q, q'). Infinite ambiguity
// is read off the cube A x A x A augmented with '#' edges from every
// (p, q, q) to every (p, p, q): it holds iff some component of that graph
// contains both a '#' edge and a symbol-labeled transition.

#ifndef AMBIG_AMBIGUITY_H_
#define AMBIG_AMBIGUITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ambig/automaton.h"
#include "ambig/intersect.h"

namespace ambig {

enum class AmbiguityClass { kFinite, kPolynomial, kExponential };

std::string_view AmbiguityClassName(AmbiguityClass c);

// Two distinct cycles at `state` with the same label.
struct EdaWitness {
  StateId state = kNoState;
  Word label;
  Path first_cycle;
  Path second_cycle;
};

// Paths p -> p, p -> q and q -> q sharing one non-empty label.
struct IdaWitness {
  StateId p = kNoState;
  StateId q = kNoState;
  Word label;
  Path loop_p;
  Path path_pq;
  Path loop_q;
};

// A chain of IDA pairs, each reachable from the previous one. certificates
// holds one IdaWitness per pair when available.
struct DpaWitness {
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<IdaWitness> certificates;
};

using Witness = std::variant<EdaWitness, IdaWitness, DpaWitness>;

struct AmbiguityReport {
  AmbiguityClass ambiguity = AmbiguityClass::kFinite;
  // 0 when finite; >= 1 when polynomial; unused when exponential.
  std::size_t degree = 0;
  std::optional<Witness> witness;
};

// FINITE, POLYNOMIAL degree=<d> or EXPONENTIAL.
std::string ToLine(const AmbiguityReport &report);

struct ClassifyOptions {
  bool witness = false;
  // Also runs the IDA test on exponential inputs and fails with kInternal
  // if it does not hold. Costs a cube construction.
  bool check_eda_implies_ida = false;
};

// The following require a trim, epsilon-cycle free automaton and throw
// kNotTrim or kEpsilonCycleInput otherwise.
bool TestEda(const FiniteAutomaton &automaton,
             EdaWitness *witness = nullptr);
bool TestIda(const FiniteAutomaton &automaton);
// Pairs (p, q), p != q, certified by the '#' component criterion. Sorted.
// Unless the automaton has EDA, pairs inside one strongly connected
// component are left out.
std::vector<std::pair<StateId, StateId>> IdaPairs(
    const FiniteAutomaton &automaton);
// Throws kExponentiallyAmbiguousInput on exponentially ambiguous input.
std::size_t Dpa(const FiniteAutomaton &automaton,
                DpaWitness *witness = nullptr);

// Searches the cube for a non-epsilon path from (p, p, q) to (p, q, q).
std::optional<IdaWitness> FindIdaWitness(const FiniteAutomaton &automaton,
                                         StateId p, StateId q);

// Accepts any epsilon-cycle free automaton; trims first. Witness state and
// transition ids refer to the input automaton.
AmbiguityReport Classify(const FiniteAutomaton &automaton,
                         const ClassifyOptions &options = {});

// Re-checks a witness against the automaton by direct path inspection.
// On failure, reason (if non-null) receives a description.
bool ValidateWitness(const FiniteAutomaton &automaton, const Witness &witness,
                     std::string *reason = nullptr);

}  // namespace ambig

#endif  // AMBIG_AMBIGUITY_H_
