#pragma once

#include "kdense/graph.hpp"

namespace kdense {

// Exact global minimum edge cut (0 for disconnected or trivial input),
// computed by unit-capacity max-flow from a fixed vertex to every other.
int edge_connectivity(const Graph& g);

// Exact minimum vertex cut; n-1 for complete graphs, 0 for disconnected
// or trivial input. Uses vertex-split max-flow over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

}  // namespace kdense
