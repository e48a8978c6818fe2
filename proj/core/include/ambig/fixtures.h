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
// Small reference automata with known ambiguity and entropy.

#ifndef AMBIG_FIXTURES_H_
#define AMBIG_FIXTURES_H_

#include "ambig/automaton.h"
#include "ambig/weighted.h"

namespace ambig::fixtures {

// 0 -a-> {1, 2} -b-> 3. Only "ab" is accepted, on two paths.
FiniteAutomaton Fin2();
// a-loops at 0 and 1, 0 -a-> 1. da(a^n) = n.
FiniteAutomaton Poly1();
// a-loops at 0, 1, 2 and 0 -a-> 1 -a-> 2. da(a^n) = C(n, 2).
FiniteAutomaton Poly2();
// Complete a-graph on {0, 1}, accepting at 0. da(a^n) = 2^(n-1).
FiniteAutomaton Exp();
// Poly1 with 0 -a-> 1 split as 0 -eps-> 2 -a-> 1.
FiniteAutomaton Eps();
// 0 -eps-> 1 -eps-> 0.
FiniteAutomaton EpsCycle();

// 0 -a/0.5-> 1, 0 -b/0.5-> 1. Entropy ln 2.
ProbAutomaton Unif();
// Single state, a/0.5 loop, final weight 0.5. Entropy 2 ln 2, L = 1.
ProbAutomaton Geo();
// Fin2 with the a-transitions weighted 1/2 and the b-transitions 1.
// H = 0 while the semiring estimate is ln 2.
ProbAutomaton Fin2Uniform();
// Poly1 with every transition and the final weight at 1/2. L = 3.
ProbAutomaton Poly1Prob();

}  // namespace ambig::fixtures

#endif  // AMBIG_FIXTURES_H_
