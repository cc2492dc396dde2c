#include "kdense/checks.hpp"

#include <algorithm>
#include <string>

#include "kdense/cliques.hpp"
#include "kdense/connectivity.hpp"
#include "kdense/density.hpp"

namespace kdense {

namespace {

bool vertex_in_clique_of_size(const Graph& g, int v, int k) {
  // deg(v) == k-1 here, so the neighborhood must itself be complete
  auto nbrs = g.neighbors(v);
  if (static_cast<int>(nbrs.size()) < k - 1) return false;
  for (size_t i = 0; i < nbrs.size(); ++i)
    for (size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.has_edge(nbrs[i], nbrs[j])) return false;
  return true;
}

}  // namespace

bool PropositionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropositionCheck& c) { return c.pass; });
}

PropositionReport check_propositions(const Graph& g) {
  PropositionReport report;
  report.k_star = density_index(g);
  const int n = g.vertex_count();

  if (!report.k_star) return report;
  const int k = *report.k_star;

  {
    PropositionCheck c;
    c.id = "min-degree";
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) < k - 1) {
        c.pass = false;
        c.witness = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    PropositionCheck c;
    c.id = "low-degree-vertex-clique";
    c.applicable = false;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != k - 1) continue;
      c.applicable = true;
      if (!vertex_in_clique_of_size(g, v, k)) {
        c.pass = false;
        c.witness = "vertex " + std::to_string(v) + " has degree k-1 but no clique around it";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    PropositionCheck c;
    c.id = "vertex-deletion-density";
    c.applicable = n > 1 && k >= 3;
    if (c.applicable) {
      for (int v = 0; v < n; ++v) {
        auto rest = delete_vertex(g, v);
        if (rest.graph.vertex_count() == 0 || rest.graph.has_isolated_vertex()) {
          c.skipped.push_back(v);
          continue;
        }
        auto ks = density_index(rest.graph);
        if (!ks || *ks < k - 1) {
          c.pass = false;
          c.witness = "deleting vertex " + std::to_string(v) + " drops density below " + std::to_string(k - 1);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    PropositionCheck c;
    c.id = "min-degree-densification";
    c.applicable = false;
    const int delta = g.min_degree();
    for (int kk = 2; kk <= n; ++kk) {
      if (delta < (n + kk + 1) / 2 - 1) continue;  // ceil((n+kk)/2) - 1
      c.applicable = true;
      if (!is_k_dense(g, kk)) {
        c.pass = false;
        c.witness = "min degree " + std::to_string(delta) + " but not " + std::to_string(kk) + "-dense";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    PropositionCheck c;
    c.id = "edge-connectivity";
    c.applicable = is_connected(g);
    if (c.applicable) {
      int lambda = edge_connectivity(g);
      if (lambda < k - 1) {
        c.pass = false;
        c.witness = "edge connectivity " + std::to_string(lambda) + " below " + std::to_string(k - 1);
      }
    }
    report.checks.push_back(std::move(c));
  }

  return report;
}

std::vector<std::string> classify_special(const Graph& g) {
  std::vector<std::string> labels;
  const int n = g.vertex_count();
  auto ks = density_index(g);

  if (!ks) {
    if (g.has_isolated_vertex()) labels.push_back("has-isolated-vertex");
    labels.push_back("not-dense");
    return labels;
  }
  if (*ks == 2) labels.push_back("2*-dense");
  if (n >= 3 && *ks == n - 1) labels.push_back("(n-1)*-dense");
  if (*ks == n) labels.push_back("n*-dense");
  return labels;
}

HierarchyReport hierarchy_report(const Graph& g) {
  HierarchyReport r;
  if (g.vertex_count() <= 64) r.omega = clique_number(g);
  r.k_star = density_index(g);
  r.core_number = core_number(g);
  return r;
}

}  // namespace kdense
