#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kdense/cliques.hpp"
#include "kdense/connectivity.hpp"
#include "kdense/density.hpp"
#include "kdense/graph.hpp"

using namespace kdense;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// two K_5 sharing a triangle
Graph shared_triangle_cliques() {
  auto pairs = Graph::from_edges(4, {{0, 1}, {2, 3}});
  return join(complete_graph(3), pairs);
}

Graph two_k5_at_vertex() {
  auto k5 = complete_graph(5);
  return identify_vertices({{&k5, 0}, {&k5, 0}}).graph;
}

Graph octahedron() { return join(cycle_graph(4), empty_graph(2)); }

}  // namespace

TEST_CASE("edge multiplicity basics") {
  auto k6 = complete_graph(6);
  for (const Edge& e : k6.edges()) CHECK(edge_multiplicity(k6, e) == 4);

  auto c5 = cycle_graph(5);
  for (const Edge& e : c5.edges()) CHECK(edge_multiplicity(c5, e) == 0);

  auto g = shared_triangle_cliques();
  CHECK(edge_multiplicity(g, Edge(0, 1)) == 5);  // inside the shared triangle
  CHECK(edge_multiplicity(g, Edge(3, 4)) == 3);  // inside an arm pair
  CHECK_THROWS_AS(edge_multiplicity(g, Edge(3, 5)), std::invalid_argument);
}

TEST_CASE("multiplicity map kernels agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(12, 0.45, rng);
    auto fast = all_multiplicities(g);
    auto ref = all_multiplicities_reference(g);
    CHECK(fast.edges == ref.edges);
    CHECK(fast.multiplicity == ref.multiplicity);
  }
  auto g = shared_triangle_cliques();
  auto map = all_multiplicities(g);
  CHECK(map.at(Edge(0, 1)) == 5);
  CHECK(map.min() == 3);
  // the two arm pairs and the twelve triangle-to-arm edges sit at 3
  CHECK(map.histogram() == std::map<int, long>{{3, 14}, {5, 3}});
}

TEST_CASE("k-dense predicate") {
  CHECK(is_k_dense(path_graph(5), 2));  // a tree
  CHECK(is_k_dense(Graph::from_edges(2, {{0, 1}}), 2));

  auto kne = delete_edge(complete_graph(6), 0, 1);
  CHECK(is_k_dense(kne, 5));
  CHECK_FALSE(is_k_dense(kne, 6));

  Graph isolated = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(is_k_dense(isolated, 2));
  CHECK_FALSE(is_k_dense(isolated, 3));

  CHECK_THROWS_AS(is_k_dense(path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("density index") {
  for (int n = 2; n <= 8; ++n) CHECK(density_index(complete_graph(n)) == n);
  CHECK(density_index(delete_edge(complete_graph(7), 2, 3)) == 6);
  CHECK(density_index(octahedron()) == 4);

  CHECK_FALSE(density_index(empty_graph(0)).has_value());
  CHECK_FALSE(density_index(empty_graph(1)).has_value());
  CHECK_FALSE(density_index(Graph::from_edges(3, {{0, 1}})).has_value());
}

TEST_CASE("peeling recovers the dense part") {
  // K_4 plus a fifth vertex adjacent to two of its vertices
  Graph g = complete_graph(4);
  Graph wide(5);
  for (const Edge& e : g.edges()) wide.add_edge(e.u, e.v);
  wide.add_edge(4, 0);
  wide.add_edge(4, 1);
  auto d4 = k_dense_subgraph(wide, 4);
  CHECK(d4.edge_count() == 6);
  CHECK(d4.degree(4) == 0);

  CHECK(k_dense_subgraph(path_graph(3), 3).edge_count() == 0);

  auto k4 = complete_graph(4);
  auto chain = identify_vertices({{&k4, 0}, {&k4, 0}}).graph;
  CHECK(k_dense_subgraph(chain, 4) == chain);
}

TEST_CASE("parallel peel agrees with the worklist peel") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(11, 0.5, rng);
    for (int k = 2; k <= 6; ++k) CHECK(k_dense_subgraph(g, k) == k_dense_subgraph_rounds(g, k));
  }
}

TEST_CASE("communities") {
  auto two = disjoint_copies(complete_graph(4), 2);
  auto comms = k_dense_communities(two, 4);
  REQUIRE(comms.size() == 2);
  CHECK(comms[0].size() == 4);
  CHECK(comms[1].size() == 4);

  auto g = shared_triangle_cliques();
  auto c5 = k_dense_communities(g, 5);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].size() == 7);

  CHECK(k_dense_communities(cycle_graph(6), 3).empty());
}

TEST_CASE("dense hierarchy") {
  auto k5 = complete_graph(5);
  auto h = dense_hierarchy(k5);
  CHECK(h.k_max == 5);
  REQUIRE(h.levels.size() == 4);
  for (const auto& level : h.levels) CHECK(level.edges.size() == 10);

  auto tree = path_graph(6);
  auto ht = dense_hierarchy(tree);
  CHECK(ht.k_max == 2);
  REQUIRE(ht.levels.size() == 1);
  CHECK(ht.levels[0].edges.size() == 5);

  auto two = two_k5_at_vertex();
  auto h2 = dense_hierarchy(two);
  CHECK(h2.k_max == 5);
  for (const auto& level : h2.levels) CHECK(level.edges.size() == 20);

  // nesting: every level's edge set contains the next one, every edge
  // meets the support threshold measured inside its own level, and
  // every community has at least k vertices
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_graph(10, 0.5, rng);
    auto hh = dense_hierarchy(g);
    for (size_t i = 1; i < hh.levels.size(); ++i) {
      for (const Edge& e : hh.levels[i].edges) {
        const auto& prev = hh.levels[i - 1].edges;
        CHECK(std::find(prev.begin(), prev.end(), e) != prev.end());
      }
    }
    for (const auto& level : hh.levels) {
      Graph dk(g.vertex_count());
      for (const Edge& e : level.edges) dk.add_edge(e.u, e.v);
      for (const Edge& e : level.edges)
        CHECK(dk.common_neighbor_count(e.u, e.v) >= level.k - 2);
      for (const auto& comm : level.communities) CHECK(static_cast<int>(comm.size()) >= level.k);
    }
  }
}

TEST_CASE("brute-force oracle equals peeling") {
  auto g = shared_triangle_cliques();
  auto oracle = brute_force_k_dense(g, 5);
  CHECK(oracle.union_graph == k_dense_subgraph(g, 5));
  // both embedded K_5 vertex sets appear among the sub-communities
  std::vector<int> first = {0, 1, 2, 3, 4};
  std::vector<int> second = {0, 1, 2, 5, 6};
  bool has_first = false, has_second = false;
  for (const auto& s : oracle.sub_communities) {
    if (s == first) has_first = true;
    if (s == second) has_second = true;
  }
  CHECK(has_first);
  CHECK(has_second);

  CHECK(brute_force_k_dense(cycle_graph(4), 3).sub_communities.empty());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = random_graph(8, 0.5, rng);
    for (int k = 2; k <= 8; ++k)
      CHECK(brute_force_k_dense(r, k).union_graph == k_dense_subgraph(r, k));
  }
  CHECK_THROWS_AS(brute_force_k_dense(empty_graph(17), 3), std::invalid_argument);
}

TEST_CASE("cores") {
  CHECK(k_core(path_graph(7), 3).vertex_count() == 0);
  CHECK(k_core_vertices(complete_graph(5), 5).size() == 5);
  CHECK(core_number(complete_graph(6)) == 6);
  CHECK(core_number(path_graph(5)) == 2);
  CHECK(core_number(empty_graph(0)) == 0);
  CHECK(core_number(empty_graph(3)) == 1);
}

TEST_CASE("clique numbers") {
  CHECK(clique_number(octahedron()) == 3);
  CHECK(clique_number(delete_edge(complete_graph(7), 0, 1)) == 6);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(empty_graph(4)) == 1);

  auto cliques = maximal_cliques(octahedron());
  CHECK(cliques.size() == 8);
  for (const auto& c : cliques) CHECK(c.size() == 3);
}

TEST_CASE("connectivity values") {
  CHECK(edge_connectivity(two_k5_at_vertex()) == 4);
  CHECK(edge_connectivity(cycle_graph(8)) == 2);
  CHECK(edge_connectivity(path_graph(4)) == 1);
  CHECK(edge_connectivity(disjoint_copies(complete_graph(3), 2)) == 0);

  CHECK(vertex_connectivity(two_k5_at_vertex()) == 1);
  CHECK(vertex_connectivity(complete_graph(6)) == 5);
  CHECK(vertex_connectivity(delete_edge(complete_graph(6), 1, 2)) == 4);
  CHECK(vertex_connectivity(cartesian_product(cycle_graph(4), cycle_graph(4))) == 4);
}
