#include <random>
#include <stdexcept>

#include "doctest.h"
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

}  // namespace

TEST_CASE("from_edge_list builds the triangle") {
  auto g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g == complete_graph(3));
  validate_graph(g);
}

TEST_CASE("loops are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Edge(1, 1), std::invalid_argument);
}

TEST_CASE("symmetric duplicates collapse") {
  auto g = Graph::from_edges(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("out-of-range endpoints are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("disjoint union shifts labels and adds edge counts") {
  auto g = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(connected_components(g).size() == 2);

  auto h = disjoint_union(g, empty_graph(0));
  CHECK(h == g);

  // three disjoint K_4: 3 * C(4,2) edges
  auto q = disjoint_copies(complete_graph(4), 3);
  CHECK(q.vertex_count() == 12);
  CHECK(q.edge_count() == 18);
  CHECK(connected_components(q).size() == 3);
}

TEST_CASE("join adds all cross edges") {
  // K_3 + 2K_2: 3 + 2 + 3*4 edges
  auto two_pairs = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto g = join(complete_graph(3), two_pairs);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 17);

  // K_2 + 2K_2
  auto h = join(complete_graph(2), two_pairs);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 11);

  // octahedron: C_4 joined with two isolated vertices
  auto oct = join(cycle_graph(4), empty_graph(2));
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
}

TEST_CASE("identify_vertices merges hubs") {
  auto k5 = complete_graph(5);
  auto two = identify_vertices({{&k5, 0}, {&k5, 0}});
  CHECK(two.graph.vertex_count() == 9);
  CHECK(two.graph.edge_count() == 20);
  validate_graph(two.graph);

  auto single = identify_vertices({{&k5, 3}});
  CHECK(single.graph == k5);

  auto k3 = complete_graph(3);
  auto hub = identify_vertices({{&k3, 0}, {&k3, 0}, {&k3, 0}});
  CHECK(hub.graph.vertex_count() == 7);
  CHECK(hub.graph.edge_count() == 9);
  CHECK(hub.graph.degree(0) == 6);

  // label maps: every input's chosen vertex lands on the shared hub,
  // the rest stay distinct
  REQUIRE(hub.label_maps.size() == 3);
  CHECK(hub.label_maps[0] == std::vector<int>{0, 1, 2});
  CHECK(hub.label_maps[1][0] == 0);
  CHECK(hub.label_maps[2][0] == 0);
  CHECK(hub.label_maps[1][1] == 3);
  CHECK(hub.label_maps[2][2] == 6);

  CHECK_THROWS_AS(identify_vertices({}), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices({{&k3, 5}}), std::invalid_argument);
}

TEST_CASE("complement basics") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_graph(8, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).edge_count() == 28 - g.edge_count());
  }

  // complement of K_3 ∪ 11 K_2 ∪ K_1 on 26 vertices
  Graph h(26);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(1, 2);
  for (int p = 0; p < 11; ++p) h.add_edge(3 + 2 * p, 4 + 2 * p);
  auto g = complement(h);
  CHECK(g.vertex_count() == 26);
  CHECK(g.edge_count() == 311);
}

TEST_CASE("cartesian product of cycles") {
  auto torus = cartesian_product(cycle_graph(4), cycle_graph(4));
  CHECK(torus.vertex_count() == 16);
  CHECK(torus.edge_count() == 32);
  for (int v = 0; v < 16; ++v) CHECK(torus.degree(v) == 4);
  for (const Edge& e : torus.edges()) CHECK(torus.common_neighbor_count(e.u, e.v) == 0);

  auto big = cartesian_product(torus, cycle_graph(4));
  CHECK(big.vertex_count() == 64);
  for (int v = 0; v < 64; ++v) CHECK(big.degree(v) == 6);
}

TEST_CASE("induced subgraphs and deletions") {
  auto empty = induced_subgraph(complete_graph(4), std::vector<int>{});
  CHECK(empty.graph.vertex_count() == 0);

  auto tri = induced_subgraph(complete_graph(5), std::vector<int>{0, 1, 2});
  CHECK(tri.graph == complete_graph(3));
  CHECK(tri.labels == std::vector<int>{0, 1, 2});

  auto kne = delete_edge(complete_graph(6), 0, 1);
  CHECK(kne.edge_count() == 14);
  CHECK_THROWS_AS(delete_edge(kne, 0, 1), std::invalid_argument);

  auto dropped = delete_vertex(complete_graph(5), 2);
  CHECK(dropped.graph == complete_graph(4));
  CHECK(dropped.labels == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("connectivity basics") {
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(empty_graph(0)));
  CHECK(is_connected(empty_graph(1)));
  CHECK_FALSE(is_connected(empty_graph(2)));
  CHECK(connected_components(empty_graph(0)).empty());
  CHECK(connected_components(disjoint_copies(complete_graph(3), 2)).size() == 2);
}

TEST_CASE("algebra invariants on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(6, 0.5, rng);
    auto h = random_graph(5, 0.5, rng);
    CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + 30);
    CHECK(disjoint_union(g, h).edge_count() == g.edge_count() + h.edge_count());
    validate_graph(join(g, h));
    validate_graph(cartesian_product(g, h));
  }
}

TEST_CASE("vertex partition disjointness") {
  VertexPartition ok{{{0, 1}, {2}, {3, 4}}};
  CHECK(ok.disjoint());
  VertexPartition bad{{{0, 1}, {1, 2}}};
  CHECK_FALSE(bad.disjoint());
}
