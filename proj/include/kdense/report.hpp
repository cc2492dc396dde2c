#pragma once

#include <json.hpp>

#include "kdense/constructions.hpp"
#include "kdense/extremal.hpp"
#include "kdense/graph.hpp"

namespace kdense {

// Full analysis document: size, degrees, density index, multiplicity
// histogram, communities per level, clique/core hierarchy and the
// structural check results.
nlohmann::json analysis_report(const Graph& g);

// Per-level decomposition document.
nlohmann::json decomposition_report(const Graph& g);

nlohmann::json certificate_json(const ConstructionResult& c);
nlohmann::json record_json(const ExtremalRecord& rec, bool timings = false);
nlohmann::json conjecture_json(const std::vector<ConjectureRow>& rows, bool timings = false);
nlohmann::json table_json(const std::vector<TableRow>& rows, bool timings = false);

// DOT rendering with per-edge multiplicity labels; edges below the
// k-2 threshold are grayed out when k is given.
std::string to_dot(const Graph& g, int k = 0);

}  // namespace kdense
