#pragma once

#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

// Exact clique number via branch and bound with greedy-coloring upper
// bounds; intended for n <= 64.
int clique_number(const Graph& g);

// All maximal cliques (Bron–Kerbosch with pivoting), each sorted
// ascending; the list is sorted by (size descending, lexicographic).
// Meant for small graphs.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace kdense
