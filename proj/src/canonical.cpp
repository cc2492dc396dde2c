#include "kdense/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "kdense/graph_io.hpp"

namespace kdense {

namespace detail {

void graph_to_rows32(const Graph& g, std::uint32_t* rows) {
  const int n = g.vertex_count();
  if (n > kCanonMaxN) throw std::invalid_argument("canonical form supports at most 32 vertices");
  for (int v = 0; v < n; ++v) {
    std::uint32_t r = 0;
    if (n > 0) r = static_cast<std::uint32_t>(g.row(v)[0] & 0xffffffffull);
    rows[v] = r;
  }
}

Graph rows32_to_graph(int n, const std::uint32_t* rows) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) {
    std::uint32_t r = rows[u] >> (u + 1);
    int v = u + 1;
    while (r) {
      if (r & 1) g.add_edge(u, v);
      r >>= 1;
      ++v;
    }
  }
  return g;
}

namespace {

struct CanonSearch {
  int n = 0;
  const std::uint32_t* adj = nullptr;
  std::uint32_t full = 0;
  std::uint32_t placed = 0;
  bool testing = false;
  bool found_greater = false;

  std::array<std::uint64_t, kCanonMaxN> best{};
  std::array<char, kCanonMaxN> best_valid{};
  std::array<std::uint64_t, kCanonMaxN> seg{};
  std::array<std::uint32_t, kCanonMaxN> twin_prev{};

  void init(int n_in, const std::uint32_t* rows) {
    n = n_in;
    adj = rows;
    full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    placed = 0;
    found_greater = false;
    seg.fill(0);
    // twins: identical rows once the mutual bits are masked out; a
    // twin swap is an automorphism, so only the smallest unplaced
    // member of a twin pair needs to be tried at any node
    for (int v = 0; v < n; ++v) {
      twin_prev[v] = 0;
      for (int u = 0; u < v; ++u) {
        std::uint32_t ru = adj[u] & ~(1u << v);
        std::uint32_t rv = adj[v] & ~(1u << u);
        if (ru == rv) twin_prev[v] |= 1u << u;
      }
    }
  }

  void dfs(int depth) {
    if (depth == n) return;

    struct Cand {
      std::uint64_t s;
      int v;
    };
    std::array<Cand, kCanonMaxN> cands;
    int nc = 0;
    const std::uint32_t unplaced = ~placed & full;
    for (std::uint32_t rest = unplaced; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (twin_prev[v] & unplaced) continue;
      cands[nc++] = {seg[v], v};
    }
    std::sort(cands.begin(), cands.begin() + nc,
              [](const Cand& a, const Cand& b) { return a.s != b.s ? a.s > b.s : a.v < b.v; });

    for (int i = 0; i < nc; ++i) {
      const std::uint64_t s = cands[i].s;
      const int v = cands[i].v;
      if (best_valid[depth]) {
        if (s < best[depth]) break;  // sorted descending: the rest are worse
        if (s > best[depth]) {
          if (testing) {
            found_greater = true;
            return;
          }
          best[depth] = s;
          for (int j = depth + 1; j < n; ++j) best_valid[j] = 0;
        }
      } else {
        best[depth] = s;
        best_valid[depth] = 1;
      }

      placed |= 1u << v;
      const std::uint32_t others = ~placed & full;
      for (std::uint32_t rest = others; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        seg[u] = (seg[u] << 1) | ((adj[u] >> v) & 1u);
      }
      dfs(depth + 1);
      for (std::uint32_t rest = others; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        seg[u] >>= 1;
      }
      placed &= ~(1u << v);
      if (found_greater) return;
    }
  }
};

// own-labeling code segments: seg[d] holds the adjacency bits of vertex
// d against vertices 0..d-1, most significant bit first
void own_segments(int n, const std::uint32_t* rows, std::uint64_t* out) {
  for (int d = 0; d < n; ++d) {
    std::uint64_t s = 0;
    for (int i = 0; i < d; ++i) s = (s << 1) | ((rows[d] >> i) & 1u);
    out[d] = s;
  }
}

}  // namespace

bool is_max_code(int n, const std::uint32_t* rows) {
  if (n > kCanonMaxN) throw std::invalid_argument("canonical form supports at most 32 vertices");
  CanonSearch cs;
  cs.init(n, rows);
  cs.testing = true;
  own_segments(n, rows, cs.best.data());
  cs.best_valid.fill(1);
  cs.dfs(0);
  return !cs.found_greater;
}

void max_code_rows(int n, const std::uint32_t* rows, std::uint32_t* out) {
  if (n > kCanonMaxN) throw std::invalid_argument("canonical form supports at most 32 vertices");
  CanonSearch cs;
  cs.init(n, rows);
  cs.best_valid.fill(0);
  cs.dfs(0);
  for (int v = 0; v < n; ++v) out[v] = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((cs.best[j] >> (j - 1 - i)) & 1u) {
        out[i] |= 1u << j;
        out[j] |= 1u << i;
      }
    }
  }
}

}  // namespace detail

Graph canonical_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::array<std::uint32_t, detail::kCanonMaxN> rows{}, canon{};
  detail::graph_to_rows32(g, rows.data());
  detail::max_code_rows(n, rows.data(), canon.data());
  return detail::rows32_to_graph(n, canon.data());
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(g.vertex_count()), dh(h.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) dg[v] = g.degree(v);
  for (int v = 0; v < h.vertex_count(); ++v) dh[v] = h.degree(v);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_max_code_labeled(const Graph& g) {
  std::array<std::uint32_t, detail::kCanonMaxN> rows{};
  detail::graph_to_rows32(g, rows.data());
  return detail::is_max_code(g.vertex_count(), rows.data());
}

}  // namespace kdense
