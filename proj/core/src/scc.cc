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

#include "ambig/scc.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ambig {

Digraph::Digraph(
    std::size_t num_nodes,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  offsets_.assign(num_nodes + 1, 0);
  for (const auto &[u, v] : edges) ++offsets_[u + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(edges.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto &[u, v] : edges) targets_[fill[u]++] = v;
}

Digraph Digraph::FromAutomaton(const FiniteAutomaton &automaton) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(automaton.num_transitions());
  for (const Transition &t : automaton.transitions()) {
    edges.emplace_back(t.source, t.target);
  }
  return Digraph(automaton.num_states(), edges);
}

SccDecomposition StronglyConnectedComponents(const Digraph &graph) {
  constexpr std::uint32_t kUnvisited =
      std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = graph.num_nodes();
  SccDecomposition result;
  result.component.assign(n, kUnvisited);

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> scc_stack;
  struct Frame {
    std::uint32_t node;
    std::size_t next;
  };
  std::vector<Frame> call_stack;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      Frame &frame = call_stack.back();
      const std::uint32_t u = frame.node;
      const auto succ = graph.successors(u);
      if (frame.next < succ.size()) {
        const std::uint32_t v = succ[frame.next++];
        if (index[v] == kUnvisited) {
          index[v] = lowlink[v] = counter++;
          scc_stack.push_back(v);
          on_stack[v] = 1;
          call_stack.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      if (lowlink[u] == index[u]) {
        const auto id = static_cast<std::uint32_t>(result.num_components++);
        std::uint32_t w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          result.component[w] = id;
        } while (w != u);
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const std::uint32_t parent = call_stack.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
      }
    }
  }
  return result;
}

}  // namespace ambig
