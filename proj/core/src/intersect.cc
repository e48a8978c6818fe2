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

#include "ambig/intersect.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "ambig/error.h"

namespace ambig {
namespace {

constexpr Label kUnmatched = static_cast<Label>(-1);

struct PairProduct {
  FiniteAutomaton automaton;
  std::vector<StateId> left;
  std::vector<StateId> right;
  std::vector<FilterState> filter;
  std::vector<TransitionId> left_origin;
  std::vector<TransitionId> right_origin;
};

// Number of leading epsilon-transitions in an out() span.
std::size_t EpsilonPrefix(const FiniteAutomaton &a,
                          std::span<const TransitionId> out) {
  std::size_t k = 0;
  while (k < out.size() && a.transition(out[k]).is_epsilon()) ++k;
  return k;
}

PairProduct IntersectPair(const FiniteAutomaton &a1,
                          const FiniteAutomaton &a2) {
  if (HasEpsilonCycle(a1) || HasEpsilonCycle(a2)) {
    Fail(ErrorCode::kEpsilonCycleInput,
         "intersection operand has an epsilon-cycle");
  }

  // Common alphabet; both operand alphabets are sorted, so the relative
  // order of shared symbols is the same on both sides.
  std::vector<std::string> alphabet;
  std::set_intersection(a1.alphabet().begin(), a1.alphabet().end(),
                        a2.alphabet().begin(), a2.alphabet().end(),
                        std::back_inserter(alphabet));
  const auto relabel = [&alphabet](const FiniteAutomaton &a) {
    std::vector<Label> map(a.alphabet().size() + 1, kUnmatched);
    map[kEpsilon] = kEpsilon;
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(),
                                 a.alphabet()[i]);
      if (it != alphabet.end() && *it == a.alphabet()[i]) {
        map[i + 1] = static_cast<Label>(it - alphabet.begin()) + 1;
      }
    }
    return map;
  };
  const std::vector<Label> map1 = relabel(a1);
  const std::vector<Label> map2 = relabel(a2);

  const std::uint64_t n2 = a2.num_states();
  // Direct index over (q1, q2, filter) when it is small enough, else a hash
  // map keyed the same way.
  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;
  const std::uint64_t key_space = std::uint64_t{a1.num_states()} * n2 * 3;
  const bool dense = key_space <= kDenseLimit;
  std::vector<StateId> dense_ids(dense ? key_space : 0, kNoState);
  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<StateId> left;
  std::vector<StateId> right;
  std::vector<FilterState> filter;
  std::vector<Transition> transitions;
  std::vector<TransitionId> left_origin;
  std::vector<TransitionId> right_origin;

  const auto find_or_add = [&](StateId q1, StateId q2, FilterState f) {
    const std::uint64_t key =
        (std::uint64_t{q1} * n2 + q2) * 3 + static_cast<std::uint64_t>(f);
    const auto fresh = static_cast<StateId>(left.size());
    StateId id;
    if (dense) {
      StateId &slot = dense_ids[key];
      if (slot == kNoState) slot = fresh;
      id = slot;
    } else {
      id = ids.try_emplace(key, fresh).first->second;
    }
    if (id == fresh) {
      if (left.size() >= kNoState - 1) {
        Fail(ErrorCode::kInvalidArgument, "product has too many states");
      }
      left.push_back(q1);
      right.push_back(q2);
      filter.push_back(f);
    }
    return id;
  };
  const auto add_transition = [&](StateId source, Label label, StateId target,
                                  TransitionId t1, TransitionId t2) {
    transitions.push_back({source, label, target});
    left_origin.push_back(t1);
    right_origin.push_back(t2);
  };

  std::vector<StateId> initial;
  for (StateId q1 : a1.initial()) {
    for (StateId q2 : a2.initial()) {
      initial.push_back(find_or_add(q1, q2, FilterState::kF0));
    }
  }
  std::vector<StateId> final_states;

  for (StateId s = 0; s < left.size(); ++s) {
    const StateId q1 = left[s];
    const StateId q2 = right[s];
    const FilterState f = filter[s];
    if (a1.is_final(q1) && a2.is_final(q2)) final_states.push_back(s);

    const auto out1 = a1.out(q1);
    const auto out2 = a2.out(q2);
    const std::size_t eps1 = EpsilonPrefix(a1, out1);
    const std::size_t eps2 = EpsilonPrefix(a2, out2);

    if (auto g = FilterStep(f, EpsMove::E2E1())) {
      for (std::size_t i = 0; i < eps1; ++i) {
        for (std::size_t j = 0; j < eps2; ++j) {
          const StateId target =
              find_or_add(a1.transition(out1[i]).target,
                          a2.transition(out2[j]).target, *g);
          add_transition(s, kEpsilon, target, out1[i], out2[j]);
        }
      }
    }
    if (auto g = FilterStep(f, EpsMove::E1E1())) {
      for (std::size_t j = 0; j < eps2; ++j) {
        const StateId target =
            find_or_add(q1, a2.transition(out2[j]).target, *g);
        add_transition(s, kEpsilon, target, kNoTransition, out2[j]);
      }
    }
    if (auto g = FilterStep(f, EpsMove::E2E2())) {
      for (std::size_t i = 0; i < eps1; ++i) {
        const StateId target =
            find_or_add(a1.transition(out1[i]).target, q2, *g);
        add_transition(s, kEpsilon, target, out1[i], kNoTransition);
      }
    }

    // Merge join of the symbol-labeled parts, grouped by label.
    std::size_t i = eps1;
    std::size_t j = eps2;
    while (i < out1.size() && j < out2.size()) {
      const Label l1 = map1[a1.transition(out1[i]).label];
      const Label l2 = map2[a2.transition(out2[j]).label];
      if (l1 == kUnmatched) {
        ++i;
        continue;
      }
      if (l2 == kUnmatched) {
        ++j;
        continue;
      }
      if (l1 < l2) {
        ++i;
        continue;
      }
      if (l2 < l1) {
        ++j;
        continue;
      }
      std::size_t i_end = i;
      while (i_end < out1.size() &&
             map1[a1.transition(out1[i_end]).label] == l1) {
        ++i_end;
      }
      std::size_t j_end = j;
      while (j_end < out2.size() &&
             map2[a2.transition(out2[j_end]).label] == l2) {
        ++j_end;
      }
      const auto g = FilterStep(f, EpsMove::Match(l1));
      for (std::size_t x = i; x < i_end; ++x) {
        for (std::size_t y = j; y < j_end; ++y) {
          const StateId target =
              find_or_add(a1.transition(out1[x]).target,
                          a2.transition(out2[y]).target, *g);
          add_transition(s, l1, target, out1[x], out2[y]);
        }
      }
      i = i_end;
      j = j_end;
    }
  }

  const FiniteAutomaton accessible = FiniteAutomaton::Create(
      std::move(alphabet), left.size(), std::move(initial),
      std::move(final_states), std::move(transitions));
  TrimResult trimmed = TrimWithMaps(accessible);

  PairProduct result;
  result.automaton = std::move(trimmed.automaton);
  const std::size_t n = trimmed.state_map.size();
  result.left.reserve(n);
  result.right.reserve(n);
  result.filter.reserve(n);
  for (StateId old : trimmed.state_map) {
    result.left.push_back(left[old]);
    result.right.push_back(right[old]);
    result.filter.push_back(filter[old]);
  }
  result.left_origin.reserve(trimmed.transition_map.size());
  result.right_origin.reserve(trimmed.transition_map.size());
  for (TransitionId old : trimmed.transition_map) {
    result.left_origin.push_back(left_origin[old]);
    result.right_origin.push_back(right_origin[old]);
  }
  return result;
}

}  // namespace

std::optional<FilterState> FilterStep(FilterState state, EpsMove move) {
  using Kind = EpsMove::Kind;
  if (move.kind == Kind::kMatchSymbol) return FilterState::kF0;
  switch (state) {
    case FilterState::kF0:
      if (move.kind == Kind::kE2E1) return FilterState::kF0;
      if (move.kind == Kind::kE1E1) return FilterState::kF1;
      return FilterState::kF2;
    case FilterState::kF1:
      if (move.kind == Kind::kE1E1) return FilterState::kF1;
      return std::nullopt;
    case FilterState::kF2:
      if (move.kind == Kind::kE2E2) return FilterState::kF2;
      return std::nullopt;
  }
  return std::nullopt;
}

ProductAutomaton Intersect(const FiniteAutomaton &left,
                           const FiniteAutomaton &right) {
  PairProduct pair = IntersectPair(left, right);
  ProductAutomaton product;
  product.arity_ = 2;
  const std::size_t n = pair.automaton.num_states();
  product.components_.reserve(2 * n);
  for (StateId s = 0; s < n; ++s) {
    product.components_.push_back(pair.left[s]);
    product.components_.push_back(pair.right[s]);
  }
  product.filters_ = std::move(pair.filter);
  const std::size_t m = pair.automaton.num_transitions();
  product.origins_.reserve(2 * m);
  for (TransitionId t = 0; t < m; ++t) {
    product.origins_.push_back(pair.left_origin[t]);
    product.origins_.push_back(pair.right_origin[t]);
  }
  product.underlying_ = std::move(pair.automaton);
  return product;
}

ProductAutomaton Intersect(const ProductAutomaton &left,
                           const FiniteAutomaton &right) {
  PairProduct pair = IntersectPair(left.underlying(), right);
  const std::size_t k = left.arity();
  ProductAutomaton product;
  product.arity_ = k + 1;
  const std::size_t n = pair.automaton.num_states();
  product.components_.reserve((k + 1) * n);
  product.filters_.reserve(k * n);
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      product.components_.push_back(left.component(pair.left[s], i));
    }
    product.components_.push_back(pair.right[s]);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      product.filters_.push_back(left.filter(pair.left[s], i));
    }
    product.filters_.push_back(pair.filter[s]);
  }
  const std::size_t m = pair.automaton.num_transitions();
  product.origins_.reserve((k + 1) * m);
  for (TransitionId t = 0; t < m; ++t) {
    const TransitionId inner = pair.left_origin[t];
    for (std::size_t i = 0; i < k; ++i) {
      product.origins_.push_back(inner == kNoTransition
                                     ? kNoTransition
                                     : left.origin(inner, i));
    }
    product.origins_.push_back(pair.right_origin[t]);
  }
  product.underlying_ = std::move(pair.automaton);
  return product;
}

ProductAutomaton Square(const FiniteAutomaton &automaton) {
  return Intersect(automaton, automaton);
}

ProductAutomaton Cube(const FiniteAutomaton &automaton) {
  return Intersect(Square(automaton), automaton);
}

}  // namespace ambig
