#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

struct PropositionCheck {
  std::string id;
  bool applicable = true;  // false when the hypothesis never fires
  bool pass = true;
  std::string witness;        // failure detail, empty when passing
  std::vector<int> skipped;   // vertices skipped (vertex-deletion check)
};

struct PropositionReport {
  std::optional<int> k_star;
  std::vector<PropositionCheck> checks;

  bool all_pass() const;
};

// Runs the structural checks tied to the density index k* of the graph
// (when defined):
//   min-degree                 every vertex has degree >= k*-1
//   low-degree-vertex-clique   a degree-(k*-1) vertex lies in a k*-clique
//   vertex-deletion-density    removing any vertex leaves density >= k*-1
//                              (vertices whose removal isolates another
//                              vertex are skipped and recorded)
//   min-degree-densification   min degree >= ceil((n+k)/2)-1 forces
//                              k-density, tested for k = 2..n
//   edge-connectivity          connected graphs are (k*-1)-edge-connected
PropositionReport check_propositions(const Graph& g);

// Labels among: "2*-dense", "n*-dense", "(n-1)*-dense",
// "has-isolated-vertex", "not-dense". Multiple labels can apply.
std::vector<std::string> classify_special(const Graph& g);

struct HierarchyReport {
  std::optional<int> omega;    // clique number (absent beyond 64 vertices)
  std::optional<int> k_star;
  int core_number = 0;
};

HierarchyReport hierarchy_report(const Graph& g);

}  // namespace kdense
