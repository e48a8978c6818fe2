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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "ambig/ambiguity.h"
#include "ambig/entropy.h"
#include "ambig/intersect.h"
#include "ambig/oracle.h"

namespace ambig {
namespace {

// About five transitions per state and symbol, two symbols.
FiniteAutomaton Member(std::int64_t states, std::uint64_t seed = 7) {
  RandomAutomatonParams p;
  p.states = static_cast<std::size_t>(states);
  p.symbols = 2;
  p.density = 5.0 / static_cast<double>(states);
  p.seed = seed;
  return RandomAutomaton(p);
}

// Sparse members stay finitely or polynomially ambiguous more often, so the
// cube and the component analysis get exercised.
FiniteAutomaton SparseMember(std::int64_t states, std::uint64_t seed = 7) {
  RandomAutomatonParams p;
  p.states = static_cast<std::size_t>(states);
  p.symbols = 2;
  p.density = 1.2 / static_cast<double>(states);
  p.eps_density = 0.2 / static_cast<double>(states);
  p.seed = seed;
  return RandomAutomaton(p);
}

void SetEdges(benchmark::State &state, const FiniteAutomaton &a) {
  state.counters["edges"] = static_cast<double>(a.num_transitions());
  state.SetComplexityN(static_cast<std::int64_t>(a.num_transitions()));
}

void BM_Square(benchmark::State &state) {
  const FiniteAutomaton a = Member(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Square(a));
  SetEdges(state, a);
}
BENCHMARK(BM_Square)->RangeMultiplier(2)->Range(25, 200)->Complexity();

void BM_TestEda(benchmark::State &state) {
  const FiniteAutomaton a = Member(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TestEda(a));
  SetEdges(state, a);
}
BENCHMARK(BM_TestEda)->RangeMultiplier(2)->Range(25, 200)->Complexity();

void BM_Cube(benchmark::State &state) {
  const FiniteAutomaton a = SparseMember(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Cube(a));
  SetEdges(state, a);
}
BENCHMARK(BM_Cube)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Classify(benchmark::State &state) {
  const FiniteAutomaton a = SparseMember(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Classify(a));
  SetEdges(state, a);
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_EntropySemiring(benchmark::State &state) {
  const FiniteAutomaton a = Member(state.range(0));
  const ProbabilisticAutomaton pa =
      ValidateProbabilistic(RandomProbabilistic(a, 3));
  for (auto _ : state) benchmark::DoNotOptimize(EntropySemiringEstimate(pa));
  SetEdges(state, a);
}
BENCHMARK(BM_EntropySemiring)->RangeMultiplier(2)->Range(25, 400);

}  // namespace
}  // namespace ambig

BENCHMARK_MAIN();
