#include "kdense/report.hpp"

#include <sstream>

#include "kdense/checks.hpp"
#include "kdense/density.hpp"
#include "kdense/graph_io.hpp"

namespace kdense {

namespace {

nlohmann::json community_lists(const std::vector<std::vector<int>>& comms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : comms) arr.push_back(c);
  return arr;
}

double round3(double x) { return static_cast<long>(x * 1000 + 0.5) / 1000.0; }

}  // namespace

nlohmann::json analysis_report(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  doc["degree_min"] = g.min_degree();
  doc["degree_max"] = g.max_degree();

  auto ks = density_index(g);
  doc["k_star"] = ks ? nlohmann::json(*ks) : nlohmann::json(nullptr);

  nlohmann::json hist = nlohmann::json::object();
  if (g.edge_count() > 0) {
    auto mults = all_multiplicities(g);
    doc["multiplicity_min"] = mults.min();
    for (const auto& [value, count] : mults.histogram()) hist[std::to_string(value)] = count;
  } else {
    doc["multiplicity_min"] = nullptr;
  }
  doc["multiplicity_histogram"] = hist;

  nlohmann::json per_k = nlohmann::json::object();
  for (const auto& level : dense_hierarchy(g).levels)
    per_k[std::to_string(level.k)] = community_lists(level.communities);
  doc["communities_per_k"] = per_k;

  auto h = hierarchy_report(g);
  doc["hierarchy"] = {{"omega", h.omega ? nlohmann::json(*h.omega) : nlohmann::json(nullptr)},
                      {"core", h.core_number}};

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : check_propositions(g).checks) {
    nlohmann::json item = {{"id", c.id}, {"pass", c.pass}, {"applicable", c.applicable}};
    item["witness"] = c.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.witness);
    if (!c.skipped.empty()) item["skipped"] = c.skipped;
    checks.push_back(std::move(item));
  }
  doc["proposition_checks"] = checks;
  doc["labels"] = classify_special(g);
  return doc;
}

nlohmann::json decomposition_report(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  auto decomp = dense_hierarchy(g);
  doc["k_max"] = decomp.k_max;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : decomp.levels) {
    nlohmann::json item;
    item["k"] = level.k;
    item["vertices"] = level.vertices;
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : level.edges) edges.push_back({e.u, e.v});
    item["edges"] = edges;
    item["communities"] = community_lists(level.communities);
    levels.push_back(std::move(item));
  }
  doc["levels"] = levels;
  return doc;
}

nlohmann::json certificate_json(const ConstructionResult& c) {
  nlohmann::json doc;
  doc["name"] = c.name;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : c.params) params[key] = value;
  doc["params"] = params;
  doc["graph6"] = to_graph6(c.graph);
  doc["certificate"] = {
      {"n", c.certificate.n},
      {"m", c.certificate.m},
      {"k_star", c.certificate.k_star ? nlohmann::json(*c.certificate.k_star) : nlohmann::json(nullptr)},
      {"connected", c.certificate.connected},
      {"verified", true}};
  return doc;
}

nlohmann::json record_json(const ExtremalRecord& rec, bool timings) {
  nlohmann::json doc;
  doc["k"] = rec.k;
  doc["n"] = rec.n;
  doc["kind"] = rec.kind;
  doc["values"] = rec.values;
  doc["witnesses"] = rec.witnesses;
  doc["method"] = rec.method;
  doc["nodes"] = rec.nodes;
  doc["seconds"] = timings ? round3(rec.seconds) : 0.0;
  doc["status"] = rec.conclusive ? "certified" : "inconclusive";
  return doc;
}

nlohmann::json conjecture_json(const std::vector<ConjectureRow>& rows, bool timings) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json doc;
    doc["k"] = r.k;
    doc["n"] = r.n;
    doc["exhaustive"] = r.exhaustive ? nlohmann::json(*r.exhaustive) : nlohmann::json(nullptr);
    doc["predicted"] = r.predicted;
    doc["verdict"] = r.verdict;
    doc["witness"] = r.witness;
    doc["nodes"] = r.nodes;
    doc["seconds"] = timings ? round3(r.seconds) : 0.0;
    arr.push_back(std::move(doc));
  }
  return arr;
}

nlohmann::json table_json(const std::vector<TableRow>& rows, bool timings) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json doc;
    doc["k"] = r.k;
    doc["n"] = r.n;
    doc["kind"] = r.kind;
    doc["value"] = r.value;
    doc["method"] = r.method;
    doc["witness_g6"] = r.witness;
    doc["nodes"] = r.nodes;
    doc["seconds"] = timings ? round3(r.seconds) : 0.0;
    arr.push_back(std::move(doc));
  }
  return arr;
}

std::string to_dot(const Graph& g, int k) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    int mult = g.common_neighbor_count(e.u, e.v);
    out << "  " << e.u << " -- " << e.v << " [label=" << mult;
    if (k >= 2 && mult < k - 2) out << ", color=gray, style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kdense
