#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kdense/graph.hpp"

namespace kdense {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 text format: a size header (one byte n+63 for n <= 62, or '~'
// followed by three bytes for larger n), then the upper adjacency
// triangle read column by column, packed 6 bits per byte, each offset
// by 63. Encoding and decoding are bit-exact round trips.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain edge-list format: first line "n m", then m lines "u v" with
// 0-based endpoints. '#' starts a comment. Duplicate edges collapse
// (counted via the optional stats), loops are rejected.
struct EdgeListStats {
  long duplicates_collapsed = 0;
};
Graph parse_edge_list(std::string_view text, EdgeListStats* stats = nullptr);
std::string to_edge_list(const Graph& g);

// Auto-detects the format from the first non-space byte: '@'..'~'
// means graph6, anything else is parsed as an edge list.
Graph parse_graph_auto(std::string_view text, EdgeListStats* stats = nullptr);

}  // namespace kdense
