#include "kdense/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace kdense {

namespace {

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

template <class F>
void for_each_common_neighbor(const Graph& g, int u, int v, F f) {
  auto ru = g.row(u);
  auto rv = g.row(v);
  for (size_t w = 0; w < ru.size(); ++w) {
    std::uint64_t word = ru[w] & rv[w];
    while (word) {
      f(static_cast<int>(w * 64) + std::countr_zero(word));
      word &= word - 1;
    }
  }
}

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("density threshold k must be at least 2");
}

std::vector<std::vector<int>> nontrivial_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& comp : connected_components(g))
    if (comp.size() >= 2) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

}  // namespace

int EdgeMultiplicityMap::min() const {
  if (multiplicity.empty()) throw std::logic_error("multiplicity map of an edgeless graph");
  return *std::min_element(multiplicity.begin(), multiplicity.end());
}

int EdgeMultiplicityMap::max() const {
  if (multiplicity.empty()) throw std::logic_error("multiplicity map of an edgeless graph");
  return *std::max_element(multiplicity.begin(), multiplicity.end());
}

int EdgeMultiplicityMap::at(Edge e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) throw std::invalid_argument("not an edge of the graph");
  return multiplicity[static_cast<size_t>(it - edges.begin())];
}

std::map<int, long> EdgeMultiplicityMap::histogram() const {
  std::map<int, long> h;
  for (int m : multiplicity) ++h[m];
  return h;
}

int edge_multiplicity(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("not an edge of the graph");
  return g.common_neighbor_count(e.u, e.v);
}

EdgeMultiplicityMap all_multiplicities(const Graph& g) {
  EdgeMultiplicityMap map;
  map.edges = g.edges();
  map.multiplicity.assign(map.edges.size(), 0);
  const long m = static_cast<long>(map.edges.size());
#pragma omp parallel for schedule(static) if (m > 2048)
  for (long i = 0; i < m; ++i)
    map.multiplicity[i] = g.common_neighbor_count(map.edges[i].u, map.edges[i].v);
  return map;
}

EdgeMultiplicityMap all_multiplicities_reference(const Graph& g) {
  EdgeMultiplicityMap map;
  map.edges = g.edges();
  map.multiplicity.assign(map.edges.size(), 0);
  for (size_t i = 0; i < map.edges.size(); ++i) {
    int count = 0;
    for (int w : g.neighbors(map.edges[i].u))
      if (w != map.edges[i].v && g.has_edge(w, map.edges[i].v)) ++count;
    map.multiplicity[i] = count;
  }
  return map;
}

bool is_k_dense(const Graph& g, int k) {
  require_k(k);
  if (g.vertex_count() == 0 || g.has_isolated_vertex()) return false;
  for (const Edge& e : g.edges())
    if (g.common_neighbor_count(e.u, e.v) < k - 2) return false;
  return true;
}

std::optional<int> density_index(const Graph& g) {
  if (g.vertex_count() == 0 || g.has_isolated_vertex()) return std::nullopt;
  int min_mult = -1;
  for (const Edge& e : g.edges()) {
    int m = g.common_neighbor_count(e.u, e.v);
    if (min_mult < 0 || m < min_mult) min_mult = m;
  }
  if (min_mult < 0) return std::nullopt;  // unreachable: no isolated vertices implies edges
  return 2 + min_mult;
}

Graph k_dense_subgraph(const Graph& g, int k) {
  require_k(k);
  const int threshold = k - 2;

  Graph cur = g;
  std::vector<Edge> edges = cur.edges();
  std::vector<int> support(edges.size());
  std::vector<char> removed(edges.size(), 0);
  std::unordered_map<std::uint64_t, int> id;
  id.reserve(edges.size() * 2);
  for (size_t i = 0; i < edges.size(); ++i) id[edge_key(edges[i].u, edges[i].v)] = static_cast<int>(i);

  std::vector<int> worklist;
  for (size_t i = 0; i < edges.size(); ++i) {
    support[i] = cur.common_neighbor_count(edges[i].u, edges[i].v);
    if (support[i] < threshold) worklist.push_back(static_cast<int>(i));
  }

  while (!worklist.empty()) {
    int i = worklist.back();
    worklist.pop_back();
    if (removed[i]) continue;
    removed[i] = 1;
    const int u = edges[i].u, v = edges[i].v;
    for_each_common_neighbor(cur, u, v, [&](int w) {
      for (int x : {u, v}) {
        Edge e(x, w);
        int j = id.at(edge_key(e.u, e.v));
        if (!removed[j] && --support[j] < threshold) worklist.push_back(j);
      }
    });
    cur.remove_edge(u, v);
  }
  return cur;
}

Graph k_dense_subgraph_rounds(const Graph& g, int k) {
  require_k(k);
  const int threshold = k - 2;
  Graph cur = g;
  for (;;) {
    std::vector<Edge> edges = cur.edges();
    const long m = static_cast<long>(edges.size());
    std::vector<char> drop(edges.size(), 0);
    long dropped = 0;
#pragma omp parallel for schedule(static) reduction(+ : dropped) if (m > 2048)
    for (long i = 0; i < m; ++i) {
      if (cur.common_neighbor_count(edges[i].u, edges[i].v) < threshold) {
        drop[i] = 1;
        ++dropped;
      }
    }
    if (dropped == 0) break;
    for (long i = 0; i < m; ++i)
      if (drop[i]) cur.remove_edge(edges[i].u, edges[i].v);
  }
  return cur;
}

std::vector<std::vector<int>> k_dense_communities(const Graph& g, int k) {
  return nontrivial_components(k_dense_subgraph(g, k));
}

DenseDecomposition dense_hierarchy(const Graph& g) {
  DenseDecomposition out;
  Graph cur = g;
  for (int k = 2;; ++k) {
    cur = k_dense_subgraph(cur, k);  // nesting: peel the previous level
    if (cur.edge_count() == 0) break;
    DenseLevel level;
    level.k = k;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (cur.degree(v) > 0) level.vertices.push_back(v);
    level.edges = cur.edges();
    level.communities = nontrivial_components(cur);
    out.levels.push_back(std::move(level));
    out.k_max = k;
  }
  return out;
}

DenseOracleResult brute_force_k_dense(const Graph& g, int k) {
  require_k(k);
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("brute-force oracle limited to 16 vertices");

  std::vector<std::uint32_t> rows(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) rows[v] |= 1u << w;

  DenseOracleResult res;
  res.union_graph = empty_graph(n);
  std::vector<std::uint32_t> keep;

  const std::uint32_t limit = (n >= 1) ? (1u << n) : 1u;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (std::popcount(s) < 2) continue;

    // no internal isolated vertex
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if ((rows[v] & s) == 0) ok = false;
    }
    if (!ok) continue;

    // connected inside S
    std::uint32_t start = s & (~s + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
        next |= rows[std::countr_zero(rest)] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != s) continue;

    // every induced edge has enough common neighbors inside S
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      for (std::uint32_t r2 = rows[u] & s; r2; r2 &= r2 - 1) {
        int v = std::countr_zero(r2);
        if (v <= u) continue;
        if (std::popcount(rows[u] & rows[v] & s) < k - 2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    keep.push_back(s);
  }

  std::sort(keep.begin(), keep.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  for (std::uint32_t s : keep) {
    std::vector<int> members;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (g.has_edge(members[i], members[j])) res.union_graph.add_edge(members[i], members[j]);
    res.sub_communities.push_back(std::move(members));
  }
  return res;
}

std::vector<int> k_core_vertices(const Graph& g, int k) {
  require_k(k);
  const int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (deg[v] < k - 1) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int w : g.neighbors(v))
      if (alive[w] && --deg[w] < k - 1) stack.push_back(w);
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

Graph k_core(const Graph& g, int k) {
  auto verts = k_core_vertices(g, k);
  return induced_subgraph(g, verts).graph;
}

int core_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  // degeneracy via repeated minimum-degree removal
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int degeneracy = 0;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    degeneracy = std::max(degeneracy, deg[best]);
    alive[best] = 0;
    for (int w : g.neighbors(best))
      if (alive[w]) --deg[w];
  }
  return degeneracy + 1;
}

}  // namespace kdense
