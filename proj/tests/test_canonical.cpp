#include <algorithm>
#include <stdexcept>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "kdense/canonical.hpp"
#include "kdense/graph.hpp"

using namespace kdense;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// isomorphism by brute force over all permutations; the independent
// oracle for the canonical machinery
bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permuted(g, perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.vertex_count() == 0;
}

std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Graph> out;
  const int pairs = n * (n - 1) / 2;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(42);
  std::vector<Graph> samples = {cycle_graph(5), path_graph(6), complete_graph(4),
                                Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}})};
  for (const Graph& g : samples) {
    auto base = canonical_form(g);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(permuted(g, perm)) == base);
    }
  }
}

TEST_CASE("star and path on four vertices differ") {
  auto star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(are_isomorphic(star, path_graph(4)));
  CHECK(canonical_form(star) != canonical_form(path_graph(4)));
}

TEST_CASE("canonical equality matches brute-force isomorphism on 4 vertices") {
  auto graphs = all_labeled_graphs(4);
  std::set<std::string> forms;
  for (const Graph& g : graphs) forms.insert(canonical_form(g).graph6);
  CHECK(forms.size() == 11);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<size_t> pick(0, graphs.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph& a = graphs[pick(rng)];
    const Graph& b = graphs[pick(rng)];
    CHECK(are_isomorphic(a, b) == brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical equality matches brute-force isomorphism on sparse 6-vertex pairs") {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 60; ++trial) {
    Graph a(6), b(6);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        if (coin(rng)) a.add_edge(u, v);
        if (coin(rng)) b.add_edge(u, v);
      }
    CHECK(are_isomorphic(a, b) == brute_isomorphic(a, b));
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(are_isomorphic(a, permuted(a, perm)));
  }
}

TEST_CASE("canonical graphs carry the maximal code labeling") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g(7);
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (coin(rng)) g.add_edge(u, v);
    auto canon = canonical_graph(g);
    CHECK(is_max_code_labeled(canon));
    CHECK(are_isomorphic(g, canon));
  }
}

TEST_CASE("cartesian product with a single vertex is an isomorphism") {
  auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(are_isomorphic(cartesian_product(g, complete_graph(1)), g));
}

TEST_CASE("canonical form rejects oversized graphs") {
  CHECK_THROWS_AS(canonical_form(empty_graph(33)), std::invalid_argument);
}
