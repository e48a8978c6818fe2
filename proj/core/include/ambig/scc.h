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
// Compressed adjacency graphs and strongly connected components.

#ifndef AMBIG_SCC_H_
#define AMBIG_SCC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ambig/automaton.h"

namespace ambig {

// Directed graph in CSR form. Node ids are dense.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t num_nodes,
          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  // The transition graph of an automaton; labels are dropped.
  static Digraph FromAutomaton(const FiniteAutomaton &automaton);

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size(); }
  std::span<const std::uint32_t> successors(std::uint32_t node) const {
    return {targets_.data() + offsets_[node],
            targets_.data() + offsets_[node + 1]};
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

struct SccDecomposition {
  // Component id of each node. Ids are in reverse topological order:
  // every edge u -> v between distinct components has
  // component[u] > component[v].
  std::vector<std::uint32_t> component;
  std::size_t num_components = 0;
};

// Tarjan's algorithm with an explicit stack; no recursion.
SccDecomposition StronglyConnectedComponents(const Digraph &graph);

}  // namespace ambig

#endif  // AMBIG_SCC_H_
