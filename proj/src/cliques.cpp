#include "kdense/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace kdense {

namespace {

struct MaxCliqueSearch {
  int n = 0;
  std::vector<std::uint64_t> rows;
  int best = 0;

  // greedy coloring of the candidate set; returns an upper bound on the
  // clique size inside `cand`
  int color_bound(std::uint64_t cand) const {
    int colors = 0;
    while (cand) {
      ++colors;
      std::uint64_t avail = cand;  // vertices that may still take this color
      while (avail) {
        int v = std::countr_zero(avail);
        std::uint64_t bit = std::uint64_t{1} << v;
        avail &= ~bit;
        avail &= ~rows[v];
        cand &= ~bit;
      }
    }
    return colors;
  }

  void expand(std::uint64_t cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    if (size + color_bound(cand) <= best) return;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= ~(std::uint64_t{1} << v);
      expand(cand & rows[v], size + 1);
    }
  }
};

struct BronKerbosch {
  const Graph* g = nullptr;
  std::vector<std::uint64_t> rows;
  std::vector<std::vector<int>> out;

  void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      std::vector<int> clique;
      for (std::uint64_t rest = r; rest; rest &= rest - 1) clique.push_back(std::countr_zero(rest));
      out.push_back(std::move(clique));
      return;
    }
    // pivot with the most neighbors in p
    int pivot = -1, bestdeg = -1;
    for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(p & rows[v]);
      if (d > bestdeg) {
        bestdeg = d;
        pivot = v;
      }
    }
    std::uint64_t ext = p & ~rows[pivot];
    while (ext) {
      int v = std::countr_zero(ext);
      std::uint64_t bit = std::uint64_t{1} << v;
      ext &= ~bit;
      run(r | bit, p & rows[v], x & rows[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

std::vector<std::uint64_t> rows64(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("clique routines support at most 64 vertices");
  std::vector<std::uint64_t> rows(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) rows[v] |= std::uint64_t{1} << w;
  return rows;
}

}  // namespace

int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  MaxCliqueSearch s;
  s.n = n;
  s.rows = rows64(g);
  s.best = 1;
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  s.expand(all, 0);
  return s.best;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  BronKerbosch bk;
  bk.g = &g;
  if (n == 0) return {};
  bk.rows = rows64(g);
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  bk.run(0, all, 0);
  std::sort(bk.out.begin(), bk.out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return bk.out;
}

}  // namespace kdense
