#include "kdense/constructions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "kdense/cliques.hpp"
#include "kdense/connectivity.hpp"
#include "kdense/density.hpp"
#include "kdense/enumerate.hpp"

namespace kdense {

namespace {

long choose2(long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

ConstructionResult finish(std::string name, std::vector<std::pair<std::string, long>> params,
                          Graph graph, Certificate predicted) {
  const auto ks = density_index(graph);
  if (graph.vertex_count() != predicted.n || graph.edge_count() != predicted.m ||
      ks != predicted.k_star || is_connected(graph) != predicted.connected) {
    std::string msg = "certificate mismatch for " + name + ": built (n=" +
                      std::to_string(graph.vertex_count()) + ", m=" + std::to_string(graph.edge_count()) +
                      ", k*=" + (ks ? std::to_string(*ks) : std::string("undefined")) +
                      ", connected=" + (is_connected(graph) ? "1" : "0") + ") vs predicted (n=" +
                      std::to_string(predicted.n) + ", m=" + std::to_string(predicted.m) + ", k*=" +
                      (predicted.k_star ? std::to_string(*predicted.k_star) : std::string("undefined")) +
                      ", connected=" + (predicted.connected ? "1" : "0") + ")";
    throw CertificateError(msg);
  }
  return {std::move(name), std::move(params), std::move(graph), predicted};
}

Graph glued_graph(int k, int r) {
  // shared block 0..k-r-1, first arm k-r..k-1, second arm k..k+r-1
  Graph g = complete_graph(k);
  if (r > 0) {
    Graph wide(k + r);
    for (const Edge& e : g.edges()) wide.add_edge(e.u, e.v);
    for (int a = k; a < k + r; ++a) {
      for (int s = 0; s < k - r; ++s) wide.add_edge(a, s);
      for (int b = a + 1; b < k + r; ++b) wide.add_edge(a, b);
    }
    return wide;
  }
  return g;
}

// K_5 minus the (3,4) edge; vertices 0..2 have degree 4
Graph k5_minus_e() {
  Graph g = complete_graph(5);
  g.remove_edge(3, 4);
  return g;
}

// join of an edge {0,1} with two disjoint edges {2,3}, {4,5}
Graph edge_joined_two_edges() {
  Graph pairs(4);
  pairs.add_edge(0, 1);
  pairs.add_edge(2, 3);
  return join(complete_graph(2), pairs);
}

long min_edge_value(int k, int n) {
  const long q = (n - 1) / (k - 1);
  const long r = (n - 1) % (k - 1);
  return q * choose2(k) + choose2(r) + r * (k - r);
}

}  // namespace

ConstructionResult glued_cliques(int k, int r) {
  if (k < 2) throw std::invalid_argument("glued_cliques: k must be at least 2");
  if (r < 0 || r >= k) throw std::invalid_argument("glued_cliques: need 0 <= r < k");
  Certificate cert{k + r, choose2(k) + choose2(r) + static_cast<long>(r) * (k - r), k, true};
  return finish("glued-cliques", {{"k", k}, {"r", r}}, glued_graph(k, r), cert);
}

ConstructionResult disconnected_min_family(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("disconnected_min_family: need 2 <= k <= n");
  const int q = n / k;
  const int r = n % k;
  Graph g;
  if (r == 0) {
    g = disjoint_copies(complete_graph(k), q);
  } else {
    g = disjoint_union(disjoint_copies(complete_graph(k), q - 1), glued_graph(k, r));
  }
  Certificate cert{n, static_cast<long>(q) * choose2(k) + choose2(r) + static_cast<long>(r) * (k - r),
                   k, q == 1};
  return finish("disconnected-family", {{"k", k}, {"n", n}, {"q", q}, {"r", r}}, std::move(g), cert);
}

ConstructionResult clique_chain(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("clique_chain: need 2 <= k <= n");
  const int q = (n - 1) / (k - 1);
  const int r = (n - 1) % (k - 1);

  Graph first = (r > 0) ? glued_graph(k, r) : complete_graph(k);
  Graph block = complete_graph(k);
  std::vector<std::pair<const Graph*, int>> parts;
  parts.emplace_back(&first, 0);
  for (int i = 1; i < q; ++i) parts.emplace_back(&block, 0);
  Graph g = identify_vertices(parts).graph;

  Certificate cert{n, static_cast<long>(q) * choose2(k) + choose2(r) + static_cast<long>(r) * (k - r),
                   k, true};
  return finish("clique-chain", {{"k", k}, {"n", n}, {"q", q}, {"r", r}}, std::move(g), cert);
}

FormulaValue min_edge_formula(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("min_edge_formula: need 2 <= k <= n");
  FormulaValue v{min_edge_value(k, n), FormulaStatus::proven};
  if (k >= 5 && k <= 7) v.status = FormulaStatus::conjecture;
  if (k >= 8) v.status = FormulaStatus::upper_bound_only;
  return v;
}

long max_edge_formula(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("max_edge_formula: need 2 <= k <= n");
  return static_cast<long>(n) + k - 3 + choose2(n - 2);
}

namespace {

// hub-first layout shared by the k = 3 and k = 4 minimum builders and
// the realization growth step
Graph min_edge_graph(int k, int n) {
  if (k == 2) return path_graph(n);

  if (k == 3) {
    // hub 0; triangles on (2i+1, 2i+2); even n swaps in one 5-edge
    // block glued through a degree-3 vertex
    Graph g(n);
    const int triangles = (n % 2 == 1) ? (n - 1) / 2 : (n - 4) / 2;
    for (int i = 0; i < triangles; ++i) {
      g.add_edge(0, 2 * i + 1);
      g.add_edge(0, 2 * i + 2);
      g.add_edge(2 * i + 1, 2 * i + 2);
    }
    if (n % 2 == 0) {
      const int x = n - 3, y = n - 2, z = n - 1;
      g.add_edge(0, x);
      g.add_edge(0, y);
      g.add_edge(0, z);
      g.add_edge(x, y);
      g.add_edge(x, z);
    }
    return g;
  }

  // k == 4: chain of K_4 blocks over the residue base case
  Graph base;
  switch (n % 3) {
    case 1: base = complete_graph(4); break;
    case 2: base = k5_minus_e(); break;
    default: base = edge_joined_two_edges(); break;
  }
  const int extra_blocks = (n - base.vertex_count()) / 3;
  Graph block = complete_graph(4);
  std::vector<std::pair<const Graph*, int>> parts;
  parts.emplace_back(&base, 0);
  for (int i = 0; i < extra_blocks; ++i) parts.emplace_back(&block, 0);
  return identify_vertices(parts).graph;
}

}  // namespace

ConstructionResult min_edge_construction(int k, int n) {
  if (k < 2 || k > 4) throw std::invalid_argument("min_edge_construction: supported for k in {2,3,4}");
  if (n < k) throw std::invalid_argument("min_edge_construction: need n >= k");
  Certificate cert{n, min_edge_value(k, n), k, true};
  return finish("min-edge", {{"k", k}, {"n", n}}, min_edge_graph(k, n), cert);
}

ConstructionResult complement_construction(int k, int n) {
  if (k < 2) throw std::invalid_argument("complement_construction: k must be at least 2");
  if (n - k < 2) throw std::invalid_argument("complement_construction: need n - k >= 2");
  const int clique = n - k;
  const int pairs = k / 2;
  Graph h(n);
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) h.add_edge(u, v);
  for (int p = 0; p < pairs; ++p) h.add_edge(clique + 2 * p, clique + 2 * p + 1);
  Graph g = complement(h);
  Certificate cert{n, choose2(n) - choose2(clique) - pairs, k, true};
  return finish("complement", {{"k", k}, {"n", n}}, std::move(g), cert);
}

VertexPartition max_edge_partition(int k, int n) {
  VertexPartition part;
  const int a = (n - k) / 2;
  const int b = k - 2;
  std::vector<int> block;
  for (int v = 0; v < a; ++v) block.push_back(v);
  part.blocks.push_back(block);
  block.clear();
  for (int v = a; v < a + b; ++v) block.push_back(v);
  part.blocks.push_back(block);
  block.clear();
  for (int v = a + b; v < n - 2; ++v) block.push_back(v);
  part.blocks.push_back(block);
  return part;
}

ConstructionResult max_edge_construction(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("max_edge_construction: need 2 <= k <= n");
  Certificate cert{n, max_edge_formula(k, n), k, true};
  auto params = std::vector<std::pair<std::string, long>>{{"k", k}, {"n", n}};

  if (n == k) return finish("max-edge", std::move(params), complete_graph(k), cert);
  if (n == k + 1) {
    Graph g = complete_graph(n);
    g.remove_edge(n - 2, n - 1);
    return finish("max-edge", std::move(params), std::move(g), cert);
  }

  const int u = n - 2, v = n - 1;
  Graph g = complete_graph(n - 2);
  Graph full(n);
  for (const Edge& e : g.edges()) full.add_edge(e.u, e.v);
  auto part = max_edge_partition(k, n);
  full.add_edge(u, v);
  for (int x : part.blocks[0]) full.add_edge(u, x);
  for (int x : part.blocks[1]) {
    full.add_edge(u, x);
    full.add_edge(v, x);
  }
  for (int x : part.blocks[2]) full.add_edge(v, x);
  return finish("max-edge", std::move(params), std::move(full), cert);
}

namespace {

// lexicographic growth used by the k = 2 and k = 3 realizations: add
// admissible pairs in order until the edge count reaches `a`, keeping
// the density index pinned after every addition
Graph grow_to(Graph g, int k, long a, const std::function<bool(const Graph&, int, int)>& admissible) {
  const int n = g.vertex_count();
  while (g.edge_count() < a) {
    bool added = false;
    for (int x = 0; x < n && !added; ++x) {
      for (int y = x + 1; y < n && !added; ++y) {
        if (g.has_edge(x, y) || !admissible(g, x, y)) continue;
        g.add_edge(x, y);
        added = true;
        auto ks = density_index(g);
        if (!ks || *ks != k)
          throw CertificateError("realization: density index moved after adding (" +
                                 std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
    if (!added) throw CertificateError("realization: admissible pairs exhausted before target");
  }
  return g;
}

}  // namespace

ConstructionResult realization(int k, int n, long a) {
  if (k < 2 || k > 4) throw std::invalid_argument("realization: supported for k in {2,3,4}");
  if (n < k) throw std::invalid_argument("realization: need n >= k");
  const long lo = min_edge_value(k, n);
  const long hi = max_edge_formula(k, n);
  if (a < lo || a > hi)
    throw std::invalid_argument("realization: a = " + std::to_string(a) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]");

  Certificate cert{n, a, k, true};
  auto params = std::vector<std::pair<std::string, long>>{{"k", k}, {"n", n}, {"a", a}};

  if (k == 2) {
    // pendant endpoint 0 keeps the witness edge (0,1) triangle-free;
    // additions avoid vertex 0 entirely
    Graph g = grow_to(path_graph(n), 2, a,
                      [](const Graph&, int x, int) { return x != 0; });
    return finish("realization", std::move(params), std::move(g), cert);
  }

  if (k == 3) {
    Graph base = min_edge_graph(3, n);
    if (base.edge_count() == a) return finish("realization", std::move(params), std::move(base), cert);
    // witness pair (1,2): outer vertices of the first triangle; their
    // only common neighbor must stay the hub
    const int u1 = 1, u2 = 2;
    Graph g = grow_to(std::move(base), 3, a, [&](const Graph& cur, int x, int y) {
      if (x == u1 || y == u1) return !cur.has_edge(x == u1 ? y : x, u2);
      if (x == u2 || y == u2) return !cur.has_edge(x == u2 ? y : x, u1);
      return true;
    });
    return finish("realization", std::move(params), std::move(g), cert);
  }

  // k == 4: single additions cannot always preserve density, so the
  // witness is found by exhaustive search instead
  if (n > 9) throw std::invalid_argument("realization: k = 4 supported up to n = 9");
  SearchConstraints c;
  c.n = n;
  c.m_lo = static_cast<int>(a);
  c.m_hi = static_cast<int>(a);
  c.k = 4;
  c.connected_only = true;
  Graph found;
  bool ok = false;
  enumerate_graphs(c, [&](const Graph& g) {
    found = g;
    ok = true;
    return false;
  });
  if (!ok)
    throw CertificateError("realization: no connected graph with density index 4 on " +
                           std::to_string(n) + " vertices and " + std::to_string(a) +
                           " edges exists (exhaustive)");
  return finish("realization", std::move(params), std::move(found), cert);
}

std::vector<ConstructionResult> special_examples() {
  std::vector<ConstructionResult> out;

  for (int a = 1; a <= 3; ++a) {
    Graph g = cycle_graph(4);
    for (int i = 1; i < a; ++i) g = cartesian_product(g, cycle_graph(4));
    const int n = g.vertex_count();
    Certificate cert{n, static_cast<long>(a) * n, 2, true};
    auto res = finish("torus-product", {{"copies", a}}, std::move(g), cert);
    const int ec = edge_connectivity(res.graph);
    const int vc = vertex_connectivity(res.graph);
    if (ec != 2 * a || vc != 2 * a)
      throw CertificateError("torus-product: expected connectivity " + std::to_string(2 * a) +
                             ", got edge " + std::to_string(ec) + " / vertex " + std::to_string(vc));
    res.params.emplace_back("edge-connectivity", ec);
    res.params.emplace_back("vertex-connectivity", vc);
    out.push_back(std::move(res));
  }

  for (int k = 3; k <= 7; ++k) {
    Graph block = complete_graph(k);
    Graph g = identify_vertices({{&block, 0}, {&block, 0}}).graph;
    Certificate cert{2 * k - 1, 2 * choose2(k), k, true};
    auto res = finish("cut-vertex-pair", {{"k", k}}, std::move(g), cert);
    const int vc = vertex_connectivity(res.graph);
    if (vc != 1)
      throw CertificateError("cut-vertex-pair: expected a cut vertex, got connectivity " +
                             std::to_string(vc));
    res.params.emplace_back("vertex-connectivity", vc);
    out.push_back(std::move(res));
  }

  {
    Graph g = join(cycle_graph(4), empty_graph(2));
    Certificate cert{6, 12, 4, true};
    auto res = finish("octahedron", {}, std::move(g), cert);
    const int omega = clique_number(res.graph);
    if (omega != 3)
      throw CertificateError("octahedron: expected clique number 3, got " + std::to_string(omega));
    res.params.emplace_back("clique-number", omega);
    out.push_back(std::move(res));
  }

  return out;
}

}  // namespace kdense
