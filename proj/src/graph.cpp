#include "kdense/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace kdense {

Edge::Edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  std::uint64_t& wu = bits_[static_cast<size_t>(u) * words_ + v / 64];
  if ((wu >> (v % 64)) & 1u) return;  // idempotent
  wu |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  std::uint64_t& wu = bits_[static_cast<size_t>(u) * words_ + v / 64];
  if (!((wu >> (v % 64)) & 1u)) return;
  wu &= ~(std::uint64_t{1} << (v % 64));
  bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
  return d;
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) {
    int dv = degree(v);
    if (v == 0 || dv < d) d = dv;
  }
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 0) return true;
  return false;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[static_cast<size_t>(v) * words_ + w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(w * 64 + b);
      word &= word - 1;
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (v > u) out.push_back(Edge(u, v));
  return out;
}

int Graph::common_neighbor_count(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int c = 0;
  const std::uint64_t* ru = bits_.data() + static_cast<size_t>(u) * words_;
  const std::uint64_t* rv = bits_.data() + static_cast<size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

void validate_graph(const Graph& g) {
  const int n = g.vertex_count();
  long m = 0;
  for (int u = 0; u < n; ++u) {
    if (g.has_edge(u, u)) throw std::logic_error("loop at vertex " + std::to_string(u));
    for (int v : g.neighbors(u)) {
      if (v < 0 || v >= n) throw std::logic_error("neighbor out of range");
      if (!g.has_edge(v, u)) throw std::logic_error("asymmetric adjacency");
      if (v > u) ++m;
    }
  }
  if (m != g.edge_count()) throw std::logic_error("edge count mismatch");
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_copies(const Graph& g, int q) {
  if (q < 0) throw std::invalid_argument("negative copy count");
  Graph out(0);
  for (int i = 0; i < q; ++i) out = disjoint_union(out, g);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  Graph out(ng + h.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + ng, e.v + ng);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  Graph out(ng * nh);
  for (int u = 0; u < ng; ++u)
    for (const Edge& e : h.edges()) out.add_edge(u * nh + e.u, u * nh + e.v);
  for (const Edge& e : g.edges())
    for (int v = 0; v < nh; ++v) out.add_edge(e.u * nh + v, e.v * nh + v);
  return out;
}

IdentifyResult identify_vertices(std::span<const std::pair<const Graph*, int>> parts) {
  if (parts.empty()) throw std::invalid_argument("identify_vertices: empty input list");
  for (auto [gp, v] : parts) {
    if (v < 0 || v >= gp->vertex_count())
      throw std::invalid_argument("identify_vertices: vertex out of range");
  }

  IdentifyResult res;
  const Graph& base = *parts[0].first;
  const int hub = parts[0].second;

  if (parts.size() == 1) {
    res.graph = base;
    std::vector<int> id(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); ++v) id[v] = v;
    res.label_maps.push_back(std::move(id));
    return res;
  }

  int total = base.vertex_count();
  for (size_t i = 1; i < parts.size(); ++i) total += parts[i].first->vertex_count() - 1;

  Graph out(total);
  std::vector<int> id(base.vertex_count());
  for (int v = 0; v < base.vertex_count(); ++v) id[v] = v;
  res.label_maps.push_back(std::move(id));

  int next = base.vertex_count();
  for (size_t i = 1; i < parts.size(); ++i) {
    const Graph& gi = *parts[i].first;
    std::vector<int> map(gi.vertex_count());
    for (int v = 0; v < gi.vertex_count(); ++v) map[v] = (v == parts[i].second) ? hub : next++;
    res.label_maps.push_back(std::move(map));
  }

  for (const Edge& e : base.edges()) out.add_edge(e.u, e.v);
  for (size_t i = 1; i < parts.size(); ++i) {
    const auto& map = res.label_maps[i];
    for (const Edge& e : parts[i].first->edges()) out.add_edge(map[e.u], map[e.v]);
  }
  res.graph = std::move(out);
  return res;
}

IdentifyResult identify_vertices(std::initializer_list<std::pair<const Graph*, int>> parts) {
  return identify_vertices(std::span<const std::pair<const Graph*, int>>(parts.begin(), parts.size()));
}

InducedResult induced_subgraph(const Graph& g, std::span<const int> s) {
  std::vector<int> labels(s.begin(), s.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int v : labels)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced_subgraph: vertex out of range");

  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);

  Graph sub(static_cast<int>(labels.size()));
  for (size_t i = 0; i < labels.size(); ++i)
    for (int w : g.neighbors(labels[i]))
      if (pos[w] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), pos[w]);
  return {std::move(sub), std::move(labels)};
}

InducedResult delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("delete_vertex: vertex out of range");
  std::vector<int> keep;
  keep.reserve(g.vertex_count() - 1);
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return connected_components(g).size() == 1;
}

bool VertexPartition::disjoint() const {
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace kdense
