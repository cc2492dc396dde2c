// Command-line front end: analysis, decomposition, constructions,
// exhaustive searches and table generation for the k-dense toolkit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "kdense/canonical.hpp"
#include "kdense/checks.hpp"
#include "kdense/constructions.hpp"
#include "kdense/density.hpp"
#include "kdense/extremal.hpp"
#include "kdense/graph.hpp"
#include "kdense/graph_io.hpp"
#include "kdense/report.hpp"
#include "kdense/threads.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitInconclusive = 4;

struct InputOptions {
  std::string file;
  std::string g6;
  std::string el;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.file, "input file, or - for stdin");
  cmd->add_option("--g6", in.g6, "inline graph6 string");
  cmd->add_option("--el", in.el, "inline edge list");
}

kdense::Graph load_graph(const InputOptions& in) {
  using kdense::ParseError;
  int sources = !in.file.empty() + !in.g6.empty() + !in.el.empty();
  if (sources != 1) throw ParseError("provide exactly one input (file, --g6 or --el)");
  if (!in.g6.empty()) return kdense::from_graph6(in.g6);

  kdense::EdgeListStats stats;
  kdense::Graph g;
  if (!in.el.empty()) {
    g = kdense::parse_edge_list(in.el, &stats);
  } else {
    std::string text;
    if (in.file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(in.file);
      if (!f) throw ParseError("cannot open " + in.file);
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    g = kdense::parse_graph_auto(text, &stats);
  }
  if (stats.duplicates_collapsed > 0)
    std::cerr << "warning: collapsed " << stats.duplicates_collapsed << " duplicate edges\n";
  return g;
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw kdense::ParseError("cannot write " + out_path);
  f << text;
}

kdense::BudgetOptions parse_budget(const std::string& budget, bool force) {
  kdense::BudgetOptions b;
  b.force = force;
  if (budget.empty()) return b;
  if (budget.back() == 's') {
    b.time_budget_seconds = std::stod(budget.substr(0, budget.size() - 1));
  } else {
    b.node_budget = std::stol(budget);
  }
  return b;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string graph_payload(const kdense::Graph& g, const std::string& format) {
  if (format == "el") return kdense::to_edge_list(g);
  return kdense::to_graph6(g);
}

int run(int argc, char** argv) {
  kdense::apply_thread_env();

  CLI::App app{"k-dense graph analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "density report for one graph");
  InputOptions analyze_in;
  add_input_flags(analyze, analyze_in);
  std::string analyze_format = "json";
  int analyze_k = 0;
  analyze->add_option("--format", analyze_format, "json|dot|text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  analyze->add_option("--k", analyze_k, "threshold used to color dot edges");

  // ---- decompose ----
  auto* decompose = app.add_subcommand("decompose", "per-level dense subgraphs and communities");
  InputOptions decompose_in;
  add_input_flags(decompose, decompose_in);
  std::string decompose_format = "json";
  int decompose_k = 0;
  decompose->add_option("--format", decompose_format, "json|dot|text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  decompose->add_option("--k", decompose_k, "threshold used to color dot edges");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a cataloged graph with its certificate");
  std::string recipe;
  construct->add_option("name", recipe, "recipe name (see --list)")->required(false);
  bool list_recipes = false;
  construct->add_flag("--list", list_recipes, "list recipe names");
  int ck = 0, cn = 0, cr = -1, ccopies = 1;
  long ca = -1;
  construct->add_option("--k", ck);
  construct->add_option("--n", cn);
  construct->add_option("--r", cr);
  construct->add_option("--a", ca);
  construct->add_option("--copies", ccopies);
  std::string construct_format = "g6";
  construct->add_option("--format", construct_format, "g6|el|json")
      ->check(CLI::IsMember({"g6", "el", "json"}));

  // ---- search ----
  auto* search = app.add_subcommand("search", "exhaustive extremal edge-count search");
  std::string search_kind;
  search->add_option("kind", search_kind, "min|max")->required()->check(CLI::IsMember({"min", "max"}));
  int sk = 0, sn = 0;
  search->add_option("--k", sk)->required();
  search->add_option("--n", sn)->required();
  std::string search_budget;
  bool search_force = false;
  search->add_option("--budget", search_budget, "node count, or seconds with an s suffix");
  search->add_flag("--force", search_force, "lift the default size guard");
  std::string search_format = "json";
  search->add_option("--format", search_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "feasible edge counts for one (k, n)");
  int zk = 0, zn = 0;
  scan->add_option("--k", zk)->required();
  scan->add_option("--n", zn)->required();
  std::string scan_budget;
  bool scan_force = false;
  scan->add_option("--budget", scan_budget);
  scan->add_flag("--force", scan_force);
  std::string scan_format = "json";
  scan->add_option("--format", scan_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the structural checks");
  std::string verify_what;
  verify->add_option("what", verify_what, "propositions")->required()
      ->check(CLI::IsMember({"propositions"}));
  InputOptions verify_in;
  InputOptions* verify_in_ptr = &verify_in;
  verify->add_option("--input", verify_in_ptr->file, "input file, or - for stdin");
  verify->add_option("--g6", verify_in_ptr->g6, "inline graph6 string");
  verify->add_option("--el", verify_in_ptr->el, "inline edge list");

  // ---- tables ----
  auto* tables = app.add_subcommand("tables", "extremal edge-count tables");
  std::string tk = "2..4", tn = "4..8";
  tables->add_option("--k", tk, "k range, e.g. 2..4");
  tables->add_option("--n", tn, "n range, e.g. 4..8");
  std::vector<std::string> kinds = {"min", "max"};
  tables->add_option("--kind", kinds, "min max scan bounds conjecture")->delimiter(',');
  std::string tables_budget;
  bool tables_force = false, timings = false;
  tables->add_option("--budget", tables_budget);
  tables->add_flag("--force", tables_force);
  tables->add_flag("--timings", timings, "emit measured seconds (not byte-reproducible)");
  std::string tables_format = "csv";
  tables->add_option("--format", tables_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) {
    auto g = load_graph(analyze_in);
    if (analyze_format == "dot") {
      write_out(out_path, kdense::to_dot(g, analyze_k));
    } else if (analyze_format == "text") {
      auto doc = kdense::analysis_report(g);
      std::ostringstream text;
      text << "n=" << doc["n"] << " m=" << doc["m"] << " k*="
           << (doc["k_star"].is_null() ? std::string("undefined") : doc["k_star"].dump())
           << " omega=" << doc["hierarchy"]["omega"].dump() << " core=" << doc["hierarchy"]["core"]
           << '\n';
      write_out(out_path, text.str());
    } else {
      write_out(out_path, kdense::analysis_report(g).dump(2));
    }
    return kExitOk;
  }

  if (decompose->parsed()) {
    auto g = load_graph(decompose_in);
    if (decompose_format == "dot") {
      write_out(out_path, kdense::to_dot(g, decompose_k));
    } else if (decompose_format == "text") {
      auto doc = kdense::decomposition_report(g);
      std::ostringstream text;
      for (const auto& level : doc["levels"])
        text << "k=" << level["k"] << " vertices=" << level["vertices"].size()
             << " edges=" << level["edges"].size() << " communities=" << level["communities"].size()
             << '\n';
      write_out(out_path, text.str());
    } else {
      write_out(out_path, kdense::decomposition_report(g).dump(2));
    }
    return kExitOk;
  }

  if (construct->parsed()) {
    const std::vector<std::string> names = {
        "glued-cliques",  "disconnected-family", "clique-chain", "min-edge", "max-edge",
        "complement",     "realization",         "torus-product", "cut-vertex-pair",
        "octahedron",     "special"};
    if (list_recipes) {
      std::ostringstream text;
      for (const auto& n : names) text << n << '\n';
      write_out(out_path, text.str());
      return kExitOk;
    }
    if (recipe.empty()) throw CLI::ValidationError("construct", "missing recipe name");

    if (recipe == "special") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& item : kdense::special_examples()) arr.push_back(kdense::certificate_json(item));
      write_out(out_path, arr.dump(2));
      return kExitOk;
    }

    kdense::ConstructionResult result;
    if (recipe == "glued-cliques") {
      result = kdense::glued_cliques(ck, cr < 0 ? 0 : cr);
    } else if (recipe == "disconnected-family") {
      result = kdense::disconnected_min_family(ck, cn);
    } else if (recipe == "clique-chain") {
      result = kdense::clique_chain(ck, cn);
    } else if (recipe == "min-edge") {
      result = kdense::min_edge_construction(ck, cn);
    } else if (recipe == "max-edge") {
      result = kdense::max_edge_construction(ck, cn);
    } else if (recipe == "complement") {
      result = kdense::complement_construction(ck, cn);
    } else if (recipe == "realization") {
      if (ca < 0) throw CLI::ValidationError("construct", "realization needs --a");
      result = kdense::realization(ck, cn, ca);
    } else if (recipe == "torus-product") {
      auto catalog = kdense::special_examples();
      if (ccopies < 1 || ccopies > 3)
        throw CLI::ValidationError("construct", "torus-product supports --copies 1..3");
      result = catalog[ccopies - 1];
    } else if (recipe == "cut-vertex-pair") {
      if (ck < 3 || ck > 7)
        throw CLI::ValidationError("construct", "cut-vertex-pair supports --k 3..7");
      result = kdense::special_examples()[3 + (ck - 3)];
    } else if (recipe == "octahedron") {
      result = kdense::special_examples().back();
    } else {
      throw CLI::ValidationError("construct", "unknown recipe " + recipe);
    }

    if (construct_format == "json") {
      write_out(out_path, kdense::certificate_json(result).dump(2));
    } else {
      write_out(out_path, graph_payload(result.graph, construct_format));
    }
    return kExitOk;
  }

  if (search->parsed()) {
    auto budget = parse_budget(search_budget, search_force);
    auto rec = (search_kind == "min") ? kdense::search_min_edges(sk, sn, budget)
                                      : kdense::search_max_edges(sk, sn, budget);
    if (search_format == "csv") {
      write_out(out_path, kdense::render_csv(kdense::record_rows(rec)));
    } else {
      write_out(out_path, kdense::record_json(rec).dump(2));
    }
    return rec.conclusive ? kExitOk : kExitInconclusive;
  }

  if (scan->parsed()) {
    auto budget = parse_budget(scan_budget, scan_force);
    auto rec = kdense::realization_scan(zk, zn, budget);
    if (scan_format == "csv") {
      write_out(out_path, kdense::render_csv(kdense::record_rows(rec)));
    } else {
      write_out(out_path, kdense::record_json(rec).dump(2));
    }
    return rec.conclusive ? kExitOk : kExitInconclusive;
  }

  if (verify->parsed()) {
    auto g = load_graph(verify_in);
    auto report = kdense::check_propositions(g);
    nlohmann::json doc;
    doc["k_star"] = report.k_star ? nlohmann::json(*report.k_star) : nlohmann::json(nullptr);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : report.checks) {
      nlohmann::json item = {{"id", c.id}, {"pass", c.pass}, {"applicable", c.applicable}};
      item["witness"] = c.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.witness);
      if (!c.skipped.empty()) item["skipped"] = c.skipped;
      arr.push_back(std::move(item));
    }
    doc["proposition_checks"] = arr;
    doc["all_pass"] = report.all_pass();
    write_out(out_path, doc.dump(2));
    return kExitOk;
  }

  if (tables->parsed()) {
    auto [klo, khi] = parse_range(tk);
    auto [nlo, nhi] = parse_range(tn);
    kdense::TableOptions opt;
    opt.k_lo = klo;
    opt.k_hi = khi;
    opt.n_lo = nlo;
    opt.n_hi = nhi;
    opt.kinds = kinds;
    opt.budget = parse_budget(tables_budget, tables_force);
    auto rows = kdense::build_tables(opt);
    if (tables_format == "json") {
      write_out(out_path, kdense::table_json(rows, timings).dump(2));
    } else {
      write_out(out_path, kdense::render_csv(rows, timings));
    }
    bool inconclusive = false;
    for (const auto& row : rows)
      if (row.method == "inconclusive") inconclusive = true;
    return inconclusive ? kExitInconclusive : kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    // CLI11_PARSE already reported; reachable only for manual throws
    return kExitUsage;
  } catch (const kdense::CertificateError& e) {
    std::cerr << "certificate error: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const kdense::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
