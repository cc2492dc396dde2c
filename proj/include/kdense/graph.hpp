#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kdense {

// Normalized vertex pair with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);  // normalizes; throws on a == b

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertex labels 0..n-1. Adjacency is kept as
// per-vertex bitmask rows. Graphs are treated as immutable values once
// built: every algorithm takes a const graph and returns a new one, so
// values can be shared across threads freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;  // 0 when there are no vertices
  int max_degree() const;
  bool has_isolated_vertex() const;

  std::vector<int> neighbors(int v) const;
  std::span<const std::uint64_t> row(int v) const;
  std::vector<Edge> edges() const;  // lexicographically sorted, u < v

  // |N(u) ∩ N(v)|, defined for any vertex pair.
  int common_neighbor_count(int u, int v) const;

  // Construction-phase mutation. add_edge is idempotent; both throw on
  // loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Checks adjacency symmetry, irreflexivity and the cached edge count;
// throws std::logic_error on violation. Used by tests as a validator.
void validate_graph(const Graph& g);

// ---- factories ----
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_copies(const Graph& g, int q);

// ---- graph algebra ----
Graph disjoint_union(const Graph& g, const Graph& h);

// Join: disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

// Vertices are pairs (u, v) labeled u * h.vertex_count() + v;
// (u1,v1) ~ (u2,v2) iff they agree in one coordinate and are adjacent
// in the other.
Graph cartesian_product(const Graph& g, const Graph& h);

struct IdentifyResult {
  Graph graph;
  // label_maps[i][v] = label in `graph` of vertex v from input graph i
  std::vector<std::vector<int>> label_maps;
};

// Merges the chosen vertex of every input graph into one vertex. The
// first graph keeps its labels; later graphs have their remaining
// vertices appended in ascending label order. Parallel edges collapse.
// Throws on an empty input list.
IdentifyResult identify_vertices(std::span<const std::pair<const Graph*, int>> parts);
IdentifyResult identify_vertices(std::initializer_list<std::pair<const Graph*, int>> parts);

struct InducedResult {
  Graph graph;
  std::vector<int> labels;  // labels[i] = original label of new vertex i
};

InducedResult induced_subgraph(const Graph& g, std::span<const int> s);
InducedResult delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// ---- connectivity ----
bool is_connected(const Graph& g);  // false for n = 0, true for n = 1
std::vector<std::vector<int>> connected_components(const Graph& g);

// Disjoint vertex blocks covering a stated subset of the vertices.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;
  bool disjoint() const;
};

}  // namespace kdense
