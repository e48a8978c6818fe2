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

#include "ambig/fixtures.h"

#include <utility>

namespace ambig::fixtures {
namespace {

constexpr Label a = 1;
constexpr Label b = 2;

FiniteAutomaton Make(std::vector<std::string> alphabet, std::size_t n,
                     std::vector<StateId> initial,
                     std::vector<StateId> final_states,
                     std::vector<Transition> transitions) {
  return FiniteAutomaton::Create(std::move(alphabet), n, std::move(initial),
                                 std::move(final_states),
                                 std::move(transitions));
}

}  // namespace

FiniteAutomaton Fin2() {
  return Make({"a", "b"}, 4, {0}, {3},
              {{0, a, 1}, {0, a, 2}, {1, b, 3}, {2, b, 3}});
}

FiniteAutomaton Poly1() {
  return Make({"a"}, 2, {0}, {1}, {{0, a, 0}, {0, a, 1}, {1, a, 1}});
}

FiniteAutomaton Poly2() {
  return Make({"a"}, 3, {0}, {2},
              {{0, a, 0}, {0, a, 1}, {1, a, 1}, {1, a, 2}, {2, a, 2}});
}

FiniteAutomaton Exp() {
  return Make({"a"}, 2, {0}, {0}, {{0, a, 0}, {0, a, 1}, {1, a, 0}, {1, a, 1}});
}

FiniteAutomaton Eps() {
  return Make({"a"}, 3, {0}, {1},
              {{0, a, 0}, {0, kEpsilon, 2}, {2, a, 1}, {1, a, 1}});
}

FiniteAutomaton EpsCycle() {
  return Make({}, 2, {0}, {1}, {{0, kEpsilon, 1}, {1, kEpsilon, 0}});
}

ProbAutomaton Unif() {
  return {Make({"a", "b"}, 2, {0}, {1}, {{0, a, 1}, {0, b, 1}}),
          {0.5, 0.5}, {1.0}, {1.0}};
}

ProbAutomaton Geo() {
  return {Make({"a"}, 1, {0}, {0}, {{0, a, 0}}), {0.5}, {1.0}, {0.5}};
}

ProbAutomaton Fin2Uniform() {
  return {Fin2(), {0.5, 0.5, 1.0, 1.0}, {1.0}, {1.0}};
}

ProbAutomaton Poly1Prob() {
  return {Poly1(), {0.5, 0.5, 0.5}, {1.0}, {0.5}};
}

}  // namespace ambig::fixtures
