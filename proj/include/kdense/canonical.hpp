#pragma once

#include <cstdint>
#include <string>

#include "kdense/graph.hpp"

namespace kdense {

// Canonical forms are computed by a backtracking search for the vertex
// ordering that maximizes the upper-triangle adjacency bit string (read
// column by column), with twin-vertex pruning. Two graphs are isomorphic
// exactly when their forms are equal. Supported for n <= 32; intended
// for n <= 12 — beyond that regular graphs can get slow.
struct CanonicalForm {
  std::string graph6;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// True when the graph's own labeling already attains the maximal code.
// The enumerator accepts exactly these labelings.
bool is_max_code_labeled(const Graph& g);

namespace detail {

inline constexpr int kCanonMaxN = 32;

void graph_to_rows32(const Graph& g, std::uint32_t* rows);
Graph rows32_to_graph(int n, const std::uint32_t* rows);

bool is_max_code(int n, const std::uint32_t* rows);
void max_code_rows(int n, const std::uint32_t* rows, std::uint32_t* out);

}  // namespace detail

}  // namespace kdense
