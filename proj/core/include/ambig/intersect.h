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
// Epsilon-filtered intersection of finite automata.
//
// Epsilon-transitions of the two operands are interleaved through a
// three-state filter so that every pair of equally labeled successful
// paths yields exactly one successful path of the product. The marking
// of the operands (renamed epsilons plus epsilon self-loops) is never
// materialized; the three epsilon move kinds are generated directly.

#ifndef AMBIG_INTERSECT_H_
#define AMBIG_INTERSECT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ambig/automaton.h"

namespace ambig {

enum class FilterState : std::uint8_t { kF0 = 0, kF1 = 1, kF2 = 2 };

// The moves of the marked product.
//   kMatchSymbol: both operands read the same symbol.
//   kE1E1: left stays (epsilon-1 self-loop), right takes an epsilon.
//   kE2E2: left takes an epsilon, right stays (epsilon-2 self-loop).
//   kE2E1: both operands take an epsilon (diagonal move).
struct EpsMove {
  enum class Kind : std::uint8_t { kMatchSymbol, kE1E1, kE2E2, kE2E1 };

  Kind kind;
  Label symbol = kEpsilon;  // only for kMatchSymbol

  static EpsMove Match(Label symbol) { return {Kind::kMatchSymbol, symbol}; }
  static EpsMove E1E1() { return {Kind::kE1E1}; }
  static EpsMove E2E2() { return {Kind::kE2E2}; }
  static EpsMove E2E1() { return {Kind::kE2E1}; }
};

// Filter transition function; nullopt means the move is blocked.
std::optional<FilterState> FilterStep(FilterState state, EpsMove move);

// Result of an n-fold intersection. States of underlying() are composite;
// each projects to one state per operand and carries one filter state per
// pairwise intersection step.
class ProductAutomaton {
 public:
  ProductAutomaton() = default;

  const FiniteAutomaton &underlying() const { return underlying_; }
  // Number of operands: 2 for A x B, 3 for (A x B) x C.
  std::size_t arity() const { return arity_; }

  StateId component(StateId state, std::size_t i) const {
    return components_[state * arity_ + i];
  }
  std::vector<StateId> projection(StateId state) const {
    return {components_.begin() + state * arity_,
            components_.begin() + (state + 1) * arity_};
  }
  // Filter coordinate of the given pairwise step, 0 <= level < arity - 1.
  FilterState filter(StateId state, std::size_t level) const {
    return filters_[state * (arity_ - 1) + level];
  }
  // Transition of operand i taken by product transition t, or
  // kNoTransition if operand i stayed put.
  TransitionId origin(TransitionId t, std::size_t i) const {
    return origins_[t * arity_ + i];
  }

 private:
  friend ProductAutomaton Intersect(const ProductAutomaton &,
                                    const FiniteAutomaton &);
  friend ProductAutomaton Intersect(const FiniteAutomaton &,
                                    const FiniteAutomaton &);

  FiniteAutomaton underlying_;
  std::size_t arity_ = 0;
  std::vector<StateId> components_;
  std::vector<FilterState> filters_;
  std::vector<TransitionId> origins_;
};

// Trimmed filtered intersection. The alphabet of the result is the
// intersection of the operand alphabets. A composite state is initial iff
// all its components are initial and its filter state is kF0; it is final
// iff all its components are final. Throws kEpsilonCycleInput.
ProductAutomaton Intersect(const FiniteAutomaton &left,
                           const FiniteAutomaton &right);

// Intersects a product with one more operand; epsilon labels of the
// product are treated as ordinary epsilons.
ProductAutomaton Intersect(const ProductAutomaton &left,
                           const FiniteAutomaton &right);

ProductAutomaton Square(const FiniteAutomaton &automaton);
ProductAutomaton Cube(const FiniteAutomaton &automaton);

}  // namespace ambig

#endif  // AMBIG_INTERSECT_H_
