// Kernel benchmark: OpenMP-parallel paths against their serial
// references on seeded random graphs, plus enumeration throughput by
// worker count. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "kdense/density.hpp"
#include "kdense/enumerate.hpp"
#include "kdense/graph.hpp"
#include "kdense/threads.hpp"

using namespace kdense;
using Clock = std::chrono::steady_clock;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

template <class F>
double time_ms(F&& f, int reps = 3) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main() {
  apply_thread_env();
  std::printf("workers: %d\n\n", worker_count());

  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "parallel", "speedup");

  for (auto [n, p] : {std::pair{800, 0.08}, {1600, 0.05}, {2400, 0.04}}) {
    Graph g = random_graph(n, p, 42);
    long checksum_a = 0, checksum_b = 0;
    double serial = time_ms([&] {
      auto m = all_multiplicities_reference(g);
      checksum_a = m.multiplicity.empty() ? 0 : m.max();
    });
    double parallel = time_ms([&] {
      auto m = all_multiplicities(g);
      checksum_b = m.multiplicity.empty() ? 0 : m.max();
    });
    std::string label = "edge supports n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count());
    std::printf("%-34s %10.1f %10.1f %7.2fx%s\n", label.c_str(), serial, parallel, serial / parallel,
                checksum_a == checksum_b ? "" : "  MISMATCH");
  }

  for (auto [n, p, k] : {std::tuple{600, 0.10, 6}, {1200, 0.06, 5}}) {
    Graph g = random_graph(n, p, 7);
    Graph a, b;
    double serial = time_ms([&] { a = k_dense_subgraph(g, k); });
    double parallel = time_ms([&] { b = k_dense_subgraph_rounds(g, k); });
    std::string label = "dense peel k=" + std::to_string(k) + " n=" + std::to_string(n) + " m=" +
                        std::to_string(g.edge_count());
    std::printf("%-34s %10.1f %10.1f %7.2fx%s\n", label.c_str(), serial, parallel, serial / parallel,
                a == b ? "" : "  MISMATCH");
  }

  {
    SearchConstraints c;
    c.n = 8;
    long count_one = 0, count_many = 0;
    const int before = worker_count();
    set_worker_count(1);
    double one = time_ms([&] {
      count_one = 0;
      enumerate_graphs(c, [&](const Graph&) {
        ++count_one;
        return true;
      });
    }, 2);
    set_worker_count(before);
    double many = time_ms([&] {
      count_many = 0;
      enumerate_graphs(c, [&](const Graph&) {
        ++count_many;
        return true;
      });
    }, 2);
    std::string label = "enumerate connected n=8 (" + std::to_string(count_one) + ")";
    std::printf("%-34s %10.1f %10.1f %7.2fx%s\n", label.c_str(), one, many, one / many,
                count_one == count_many ? "" : "  MISMATCH");
  }

  return 0;
}
