#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Predicted shape of a construction; verified against the built graph
// before the graph is handed out.
struct Certificate {
  int n = 0;
  long m = 0;
  std::optional<int> k_star;
  bool connected = false;
};

struct ConstructionResult {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  Graph graph;
  Certificate certificate;
};

// Two copies of K_k sharing k-r vertices (r = 0 collapses to one K_k).
// n = k+r, m = C(k,2) + C(r,2) + r(k-r), density index k.
ConstructionResult glued_cliques(int k, int r);

// k*-dense graph on n vertices with q*C(k,2) + C(r,2) + r(k-r) edges
// where n = kq + r: q-1 (or q) disjoint K_k plus one glued component.
// Usually disconnected.
ConstructionResult disconnected_min_family(int k, int n);

// Connected k*-dense graph on n vertices: blocks identified at one hub
// vertex, where n-1 = (k-1)q + r; the first block is glued_cliques(k,r)
// when r > 0 and K_k otherwise, the remaining q-1 blocks are K_k.
// m = q*C(k,2) + C(r,2) + r(k-r).
ConstructionResult clique_chain(int k, int n);

// Minimum-edge witnesses for k in {2,3,4}: a path; triangles (plus one
// 5-edge block for even n) at a hub; a chain of K_4 blocks over the
// small base cases.
ConstructionResult min_edge_construction(int k, int n);

enum class FormulaStatus { proven, conjecture, upper_bound_only };

struct FormulaValue {
  long value = 0;
  FormulaStatus status = FormulaStatus::proven;
};

// q*C(k,2) + C(r,2) + r(k-r) with n-1 = q(k-1) + r: the exact minimum
// for k <= 4, conjectured for 5 <= k <= 7, an upper bound only beyond.
FormulaValue min_edge_formula(int k, int n);

// n + k - 3 + C(n-2,2); also exact at n = k and n = k+1.
long max_edge_formula(int k, int n);

// Complement of K_{n-k} plus a near-perfect matching; connected,
// k*-dense, C(n,2) - C(n-k,2) - floor(k/2) edges. Needs n-k >= 2.
ConstructionResult complement_construction(int k, int n);

// Maximum-edge witness: K_{n-2} plus adjacent u, v attached to the
// blocks of an A/B/C partition with |B| = k-2. Exactly
// n + k - 3 + C(n-2,2) edges.
ConstructionResult max_edge_construction(int k, int n);
VertexPartition max_edge_partition(int k, int n);

// Connected k*-dense graph with exactly a edges, for k in {2,3,4} and
// min_edge <= a <= max_edge. k = 2 and 3 grow a minimum base by
// lexicographic edge additions that keep a designated witness edge at
// its multiplicity; k = 4 is found by exhaustive search (n <= 9).
ConstructionResult realization(int k, int n, long a);

// Certified catalog: C_4 torus powers (low density, high connectivity),
// cut-vertex clique pairs, the octahedron.
std::vector<ConstructionResult> special_examples();

}  // namespace kdense
