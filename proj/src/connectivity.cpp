#include "kdense/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace kdense {

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;                 // paired: arc i and i^1 are reverses
  std::vector<std::vector<int>> out;

  explicit FlowNet(int nodes) : out(nodes) {}

  void add(int a, int b, int cap_ab, int cap_ba) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap_ab});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, cap_ba});
  }

  // unit-capacity max flow via repeated BFS augmentation
  int max_flow(int s, int t, int stop_at = -1) {
    int flow = 0;
    std::vector<int> prev_arc(out.size());
    while (stop_at < 0 || flow < stop_at) {
      std::fill(prev_arc.begin(), prev_arc.end(), -1);
      std::queue<int> q;
      q.push(s);
      prev_arc[s] = -2;
      while (!q.empty() && prev_arc[t] == -1) {
        int v = q.front();
        q.pop();
        for (int ai : out[v]) {
          const Arc& a = arcs[ai];
          if (a.cap > 0 && prev_arc[a.to] == -1) {
            prev_arc[a.to] = ai;
            q.push(a.to);
          }
        }
      }
      if (prev_arc[t] == -1) break;
      for (int v = t; v != s;) {
        int ai = prev_arc[v];
        arcs[ai].cap -= 1;
        arcs[ai ^ 1].cap += 1;
        v = arcs[ai ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }
};

}  // namespace

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return 0;

  int best = -1;
  for (int t = 1; t < n; ++t) {
    FlowNet net(n);
    for (const Edge& e : g.edges()) net.add(e.u, e.v, 1, 1);
    int f = net.max_flow(0, t, best);
    if (best < 0 || f < best) best = f;
    if (best == 0) break;
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return 0;
  if (!is_connected(g)) return 0;

  const long full = static_cast<long>(n) * (n - 1) / 2;
  if (g.edge_count() == full) return n - 1;

  const int big = 2 * n + 5;
  int best = n;  // any vertex cut has fewer than n vertices
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      FlowNet net(2 * n);
      for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1, 0);
      for (const Edge& e : g.edges()) {
        net.add(2 * e.u + 1, 2 * e.v, big, 0);
        net.add(2 * e.v + 1, 2 * e.u, big, 0);
      }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace kdense
