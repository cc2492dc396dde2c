#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

struct SearchConstraints {
  int n = 0;
  int m_lo = 0;
  int m_hi = -1;          // -1 means no cap (all the way to C(n,2))
  int min_degree = 0;     // floor on the minimum degree of emitted graphs
  bool connected_only = true;
  std::optional<int> k;   // emit only graphs with density index == k;
                          // also raises the degree floor to k-1
  long node_budget = -1;  // canonicity tests; -1 unlimited
  double time_budget_seconds = -1;
};

struct EnumerationStats {
  long nodes = 0;    // canonicity tests performed
  long emitted = 0;
  double seconds = 0;
  bool complete = true;  // false when a budget stopped the run early
};

// Isomorph-free exhaustive generation by orderly edge augmentation:
// level m holds one canonical labeled representative per isomorphism
// class with m edges, and a child is accepted exactly when adding an
// edge past the parent's last one lands on the class representative
// again. Emits each representative (carrying its canonical labeling)
// that meets the constraints, in a deterministic order independent of
// the worker count. The callback may return false to stop early.
// Degree-infeasible and edge-budget-infeasible branches are pruned
// during generation. Supports n <= 12.
EnumerationStats enumerate_graphs(const SearchConstraints& c,
                                  const std::function<bool(const Graph&)>& emit);

std::vector<Graph> enumerate_all(const SearchConstraints& c, EnumerationStats* stats = nullptr);

}  // namespace kdense
