#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

// Per-edge triangle support: m(uv) = |N(u) ∩ N(v)|, the number of
// triangles the edge lies in.
struct EdgeMultiplicityMap {
  std::vector<Edge> edges;         // sorted lexicographically
  std::vector<int> multiplicity;   // parallel to edges

  int min() const;  // throws on an edgeless graph
  int max() const;
  int at(Edge e) const;  // throws when e is not a stored edge
  std::map<int, long> histogram() const;
};

int edge_multiplicity(const Graph& g, Edge e);  // throws when e is not an edge

// OpenMP-parallel bitset kernel.
EdgeMultiplicityMap all_multiplicities(const Graph& g);
// Serial reference walking neighbor lists; kept for tests and the
// benchmark against the parallel kernel.
EdgeMultiplicityMap all_multiplicities_reference(const Graph& g);

// A graph is k-dense when it has at least one vertex, no isolated
// vertices, and every edge has multiplicity >= k-2 (equivalently, every
// edge lies in at least k-2 triangles).
bool is_k_dense(const Graph& g, int k);

// Largest k for which the graph is k-dense: 2 + minimum multiplicity.
// Undefined (nullopt) for the empty graph and for graphs with isolated
// vertices.
std::optional<int> density_index(const Graph& g);

// Maximal subgraph in which every edge has multiplicity >= k-2,
// computed by worklist peeling: repeatedly delete any edge whose
// multiplicity inside the current subgraph falls below k-2. The fixed
// point is unique, so the result does not depend on peel order. The
// returned graph keeps the original label space; vertices outside the
// dense part are the ones left with degree zero.
Graph k_dense_subgraph(const Graph& g, int k);

// Round-synchronous OpenMP variant of the peel; identical result.
Graph k_dense_subgraph_rounds(const Graph& g, int k);

// Vertex sets of the connected components of the k-dense subgraph,
// ordered by size descending, then smallest label.
std::vector<std::vector<int>> k_dense_communities(const Graph& g, int k);

struct DenseLevel {
  int k = 0;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> communities;
};

// Levels k = 2..k_max with the nested dense subgraphs; k_max is the
// largest k whose level is nonempty (1 when no level is).
struct DenseDecomposition {
  int k_max = 1;
  std::vector<DenseLevel> levels;
};

DenseDecomposition dense_hierarchy(const Graph& g);

// Independent oracle: scans all vertex subsets S (n <= 16) and keeps
// those whose induced subgraph is connected, has no internal isolated
// vertex, and has every edge multiplicity >= k-2 inside G[S]. Returns
// the union of those subgraphs (which the peel must reproduce) and the
// qualifying subsets, size-descending.
struct DenseOracleResult {
  Graph union_graph;
  std::vector<std::vector<int>> sub_communities;
};

DenseOracleResult brute_force_k_dense(const Graph& g, int k);

// Maximal induced subgraph with minimum degree >= k-1. Note the
// convention: the k-core here requires degree k-1, not k.
Graph k_core(const Graph& g, int k);
std::vector<int> k_core_vertices(const Graph& g, int k);

// Largest k with a nonempty k-core under the same convention.
int core_number(const Graph& g);

}  // namespace kdense
