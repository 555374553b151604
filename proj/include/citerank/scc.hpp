#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "citerank/journal_graph.hpp"

namespace citerank {

/// Strongly connected components of a journal graph (Tarjan, iterative).
/// Each component is sorted by journal index and the list is sorted by its
/// smallest member, so the result is deterministic.
inline std::vector<std::vector<JournalGraph::Index>> strongly_connected_components(const JournalGraph& jg) {
  using Index = JournalGraph::Index;
  constexpr Index unvisited = std::numeric_limits<Index>::max();
  const std::size_t n = jg.size();

  std::vector<Index> order(n, unvisited);
  std::vector<Index> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> components;
  Index counter = 0;

  struct Frame {
    Index node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (Index root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    call.push_back({root, 0});
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      auto out = jg.out_edges(f.node);
      if (f.next_edge < out.size()) {
        Index w = out[f.next_edge++].target;
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      Index v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == order[v]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

inline bool is_strongly_connected(const JournalGraph& jg) {
  return jg.size() > 0 && strongly_connected_components(jg).size() == 1;
}

}  // namespace citerank
