#include "kdense/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "kdense/canonical.hpp"

namespace kdense {

namespace {

constexpr int kMaxN = 12;
constexpr int kMaxP = kMaxN * (kMaxN - 1) / 2;
constexpr int kBlock = 4096;  // items per budget-check block

struct Item {
  std::array<std::uint32_t, kMaxN> rows;
  std::int8_t last;  // position index of the newest edge, -1 for none
};

struct PairTable {
  int n = 0;
  int positions = 0;
  std::array<std::int8_t, kMaxP> pu{}, pv{};
  // rem_inc[v][p] = number of slots at position >= p incident to v
  std::array<std::array<std::int16_t, kMaxP + 1>, kMaxN> rem_inc{};

  explicit PairTable(int n_in) : n(n_in) {
    int p = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++p) {
        pu[p] = static_cast<std::int8_t>(i);
        pv[p] = static_cast<std::int8_t>(j);
      }
    positions = p;
    for (int v = 0; v < n; ++v) {
      rem_inc[v][positions] = 0;
      for (int q = positions - 1; q >= 0; --q)
        rem_inc[v][q] = static_cast<std::int16_t>(rem_inc[v][q + 1] + ((pu[q] == v || pv[q] == v) ? 1 : 0));
    }
  }
};

bool bit_connected(int n, const std::uint32_t* rows) {
  if (n == 0) return false;
  std::uint32_t full = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = frontier; rest; rest &= rest - 1) next |= rows[std::countr_zero(rest)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full;
}

int bit_min_degree(int n, const std::uint32_t* rows) {
  int d = n;
  for (int v = 0; v < n; ++v) d = std::min(d, std::popcount(rows[v]));
  return n == 0 ? 0 : d;
}

// density index on the bit rows: 2 + min multiplicity, or -1 when
// undefined (isolated vertex / no vertices)
int bit_density_index(int n, const std::uint32_t* rows) {
  if (n == 0) return -1;
  int min_mult = -1;
  for (int u = 0; u < n; ++u) {
    if (rows[u] == 0) return -1;
    std::uint32_t r = rows[u] >> (u + 1);
    int v = u + 1;
    while (r) {
      if (r & 1) {
        int mult = std::popcount(rows[u] & rows[v]);
        if (min_mult < 0 || mult < min_mult) min_mult = mult;
      }
      r >>= 1;
      ++v;
    }
  }
  return min_mult < 0 ? -1 : 2 + min_mult;
}

}  // namespace

EnumerationStats enumerate_graphs(const SearchConstraints& c,
                                  const std::function<bool(const Graph&)>& emit) {
  if (c.n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
  if (c.n > kMaxN) throw std::invalid_argument("enumeration supports at most 12 vertices");
  if (c.k && *c.k < 2) throw std::invalid_argument("density filter k must be at least 2");

  const auto start_time = std::chrono::steady_clock::now();
  const PairTable table(c.n);
  const int P = table.positions;

  const int m_hi = (c.m_hi < 0) ? P : std::min(c.m_hi, P);
  const int m_lo = std::max(c.m_lo, 0);
  int floor = c.min_degree;
  if (c.k) floor = std::max(floor, *c.k - 1);
  // pruning may additionally assume every vertex needs an edge
  const int prune_floor = std::max(floor, (c.connected_only && c.n >= 2) ? 1 : 0);

  EnumerationStats stats;
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  };
  auto out_of_budget = [&] {
    if (c.node_budget >= 0 && stats.nodes > c.node_budget) return true;
    if (c.time_budget_seconds >= 0 && elapsed() > c.time_budget_seconds) return true;
    return false;
  };

  std::vector<Item> level(1);
  level[0].rows.fill(0);
  level[0].last = -1;

  bool stopped = false;
  for (int m = 0; m <= m_hi && !level.empty() && !stopped; ++m) {
    // emit this level's survivors
    if (m >= m_lo) {
      for (const Item& it : level) {
        if (bit_min_degree(c.n, it.rows.data()) < floor) continue;
        if (c.connected_only && !bit_connected(c.n, it.rows.data())) continue;
        if (c.k && bit_density_index(c.n, it.rows.data()) != *c.k) continue;
        ++stats.emitted;
        if (!emit(detail::rows32_to_graph(c.n, it.rows.data()))) {
          stopped = true;
          break;
        }
      }
    }
    if (stopped || m == m_hi) break;

    // expand to level m+1, block by block so budget cuts stay
    // deterministic under any worker count
    std::vector<Item> next;
    for (size_t block = 0; block < level.size() && !stopped; block += kBlock) {
      const size_t block_end = std::min(level.size(), block + kBlock);
      const long count = static_cast<long>(block_end - block);
      std::vector<std::vector<Item>> children(count);
      std::vector<long> tests(count, 0);

#pragma omp parallel for schedule(dynamic, 8) if (count > 32)
      for (long idx = 0; idx < count; ++idx) {
        const Item& it = level[block + idx];
        for (int p = it.last + 1; p < P; ++p) {
          const int a = table.pu[p], b = table.pv[p];
          Item child;
          child.rows = it.rows;
          child.rows[a] |= 1u << b;
          child.rows[b] |= 1u << a;
          child.last = static_cast<std::int8_t>(p);

          // a max code with any edge has the (0,1) edge
          if (!((child.rows[0] >> 1) & 1u)) continue;

          // degree feasibility against the remaining slot supply
          bool feasible = true;
          int deficiency = 0;
          for (int v = 0; v < c.n && feasible; ++v) {
            const int deg = std::popcount(child.rows[v]);
            if (deg >= prune_floor) continue;
            if (deg + table.rem_inc[v][p + 1] < prune_floor) feasible = false;
            deficiency += prune_floor - deg;
          }
          if (!feasible) continue;
          if (m + 1 + (deficiency + 1) / 2 > m_hi) continue;

          ++tests[idx];
          if (detail::is_max_code(c.n, child.rows.data())) children[idx].push_back(child);
        }
      }

      for (long idx = 0; idx < count; ++idx) {
        stats.nodes += tests[idx];
        next.insert(next.end(), children[idx].begin(), children[idx].end());
      }
      if (out_of_budget()) {
        stats.complete = false;
        stopped = true;
      }
    }
    level = std::move(next);
  }

  stats.seconds = elapsed();
  return stats;
}

std::vector<Graph> enumerate_all(const SearchConstraints& c, EnumerationStats* stats) {
  std::vector<Graph> out;
  EnumerationStats s = enumerate_graphs(c, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  if (stats) *stats = s;
  return out;
}

}  // namespace kdense
