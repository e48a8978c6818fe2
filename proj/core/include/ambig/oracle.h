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
// Brute-force ground truth for ambiguity: exact path counting, growth
// tables, path-preserving transforms and seeded random automata.

#ifndef AMBIG_ORACLE_H_
#define AMBIG_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ambig/automaton.h"
#include "ambig/weighted.h"

namespace ambig {

// Exact path counts. Arithmetic is checked; overflow throws kCountOverflow.
using PathCount = std::uint64_t;

inline constexpr std::size_t kGrowthMaxAlphabet = 4;
inline constexpr std::size_t kGrowthMaxLength = 14;

// Number of successful paths labeled `word`, counting distinct transition
// sequences (epsilon steps included). Backward dynamic programming over
// (state, position). Throws kEpsilonCycleInput.
PathCount CountPaths(const FiniteAutomaton &automaton, const Word &word);

// Same quantity by forward propagation of per-state path counts, closing
// under epsilon-transitions after every symbol.
PathCount CountPathsByPropagation(const FiniteAutomaton &automaton,
                                  const Word &word);

// Lists successful paths labeled `word`, stopping after `limit` paths.
std::vector<Path> EnumeratePaths(const FiniteAutomaton &automaton,
                                 const Word &word, std::size_t limit);

struct GrowthRow {
  std::size_t length = 0;
  PathCount max_count = 0;
  // Lexicographically smallest string of this length reaching max_count.
  Word argmax;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;  // rows[n] covers strings of length n

  PathCount MaxUpTo(std::size_t length) const;
};

// Rows 0..max_length. Requires |alphabet| <= 4 (kAlphabetTooLarge) and
// max_length <= 14 (kInvalidArgument).
GrowthTable ComputeGrowthTable(const FiniteAutomaton &automaton,
                               std::size_t max_length);

// Removes epsilon-transition e0 = (p, eps, r): adds (p, l, s) for every
// (r, l, s), and makes p final if r is. Preserves every path count. Throws
// kNotEpsilon, or kTransformConflict when an added transition or final
// state already exists (which would merge paths).
FiniteAutomaton EliminateEpsilonTransition(const FiniteAutomaton &automaton,
                                           TransitionId e0);

// Replaces (p, a, q) by (p, eps, r), (r, a, q) with a fresh state r.
// Throws kEpsilonInput.
FiniteAutomaton SplitTransition(const FiniteAutomaton &automaton,
                                TransitionId t);

// permutation[old] = new.
FiniteAutomaton RenameStates(const FiniteAutomaton &automaton,
                             const std::vector<StateId> &permutation);

struct RandomAutomatonParams {
  std::size_t states = 4;
  std::size_t symbols = 2;
  double density = 0.3;      // per (source, symbol, target)
  double eps_density = 0.0;  // per (source < target) pair
  std::uint64_t seed = 0;
};

// Deterministic in the parameters. Initial state 0; state n - 1 is final
// and every other state but 0 is final with probability 1/2. Epsilon
// edges only go from lower to higher ids. The result is trimmed.
FiniteAutomaton RandomAutomaton(const RandomAutomatonParams &params);

// Locally normalized random weights on a trim skeleton: at every state
// the outgoing weights plus the final weight sum to 1, and initial weights
// sum to 1. Total mass is therefore 1.
ProbAutomaton RandomProbabilistic(const FiniteAutomaton &skeleton,
                                  std::uint64_t seed);

// Uniform draws from mt19937_64 without std distributions, whose output
// differs between standard library implementations.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  // In [0, 1).
  double operator()() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // In [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ambig

#endif  // AMBIG_ORACLE_H_
