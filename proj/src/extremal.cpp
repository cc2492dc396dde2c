#include "kdense/extremal.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "kdense/constructions.hpp"
#include "kdense/enumerate.hpp"
#include "kdense/graph_io.hpp"

namespace kdense {

namespace {

long choose2(long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

void check_range(const char* who, int k, int n, int guard, bool force) {
  if (k < 2 || k > n) throw std::invalid_argument(std::string(who) + ": need 2 <= k <= n");
  if (n > 12) throw std::invalid_argument(std::string(who) + ": supports at most 12 vertices");
  if (n > guard && !force)
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " above the default guard " + std::to_string(guard) +
                                "; pass force with an explicit budget");
}

int degree_floor_edges(int k, int n) {
  // every vertex needs degree >= k-1; connectivity needs n-1 edges
  const long dl = (static_cast<long>(n) * (k - 1) + 1) / 2;
  return static_cast<int>(std::max(dl, static_cast<long>(n - 1)));
}

struct LevelScan {
  std::vector<std::string> witnesses;
  long nodes = 0;
  double seconds = 0;
  bool complete = true;
  bool feasible() const { return !witnesses.empty(); }
};

// all witnesses (graph6 of the canonical labeling) at exactly m edges
LevelScan scan_level(int k, int n, int m, const BudgetOptions& b, long nodes_used,
                     double seconds_used) {
  SearchConstraints c;
  c.n = n;
  c.m_lo = m;
  c.m_hi = m;
  c.k = k;
  c.connected_only = true;
  if (b.node_budget >= 0) c.node_budget = std::max<long>(0, b.node_budget - nodes_used);
  if (b.time_budget_seconds >= 0)
    c.time_budget_seconds = std::max(0.0, b.time_budget_seconds - seconds_used);

  LevelScan out;
  EnumerationStats stats = enumerate_graphs(c, [&](const Graph& g) {
    out.witnesses.push_back(to_graph6(g));
    return true;
  });
  out.nodes = stats.nodes;
  out.seconds = stats.seconds;
  out.complete = stats.complete;
  return out;
}

void cap_witnesses(std::vector<std::string>& w) {
  std::sort(w.begin(), w.end());
  if (w.size() > static_cast<size_t>(kWitnessCap)) w.resize(kWitnessCap);
}

}  // namespace

ExtremalRecord search_min_edges(int k, int n, const BudgetOptions& b) {
  check_range("search_min_edges", k, n, kMinSearchGuardN, b.force);
  ExtremalRecord rec;
  rec.k = k;
  rec.n = n;
  rec.kind = "min";

  const int top = static_cast<int>(choose2(n));
  for (int m = degree_floor_edges(k, n); m <= top; ++m) {
    LevelScan scan = scan_level(k, n, m, b, rec.nodes, rec.seconds);
    rec.nodes += scan.nodes;
    rec.seconds += scan.seconds;
    if (!scan.complete) {
      rec.conclusive = false;
      return rec;
    }
    if (scan.feasible()) {
      rec.values = {m};
      rec.witnesses = std::move(scan.witnesses);
      cap_witnesses(rec.witnesses);
      return rec;
    }
  }
  rec.conclusive = true;  // exhaustively infeasible at every m
  return rec;
}

ExtremalRecord search_max_edges(int k, int n, const BudgetOptions& b) {
  check_range("search_max_edges", k, n, kMaxSearchGuardN, b.force);
  ExtremalRecord rec;
  rec.k = k;
  rec.n = n;
  rec.kind = "max";

  const int floor = degree_floor_edges(k, n);
  for (int m = static_cast<int>(choose2(n)); m >= floor; --m) {
    LevelScan scan = scan_level(k, n, m, b, rec.nodes, rec.seconds);
    rec.nodes += scan.nodes;
    rec.seconds += scan.seconds;
    if (!scan.complete) {
      rec.conclusive = false;
      return rec;
    }
    if (scan.feasible()) {
      rec.values = {m};
      rec.witnesses = std::move(scan.witnesses);
      cap_witnesses(rec.witnesses);
      return rec;
    }
  }
  return rec;
}

ExtremalRecord realization_scan(int k, int n, const BudgetOptions& b) {
  check_range("realization_scan", k, n, kScanGuardN, b.force);
  ExtremalRecord rec;
  rec.k = k;
  rec.n = n;
  rec.kind = "realization-set";

  const int top = static_cast<int>(choose2(n));
  for (int m = degree_floor_edges(k, n); m <= top; ++m) {
    LevelScan scan = scan_level(k, n, m, b, rec.nodes, rec.seconds);
    rec.nodes += scan.nodes;
    rec.seconds += scan.seconds;
    if (!scan.complete) {
      rec.conclusive = false;
      return rec;
    }
    if (scan.feasible()) {
      rec.values.push_back(m);
      if (rec.witnesses.size() < static_cast<size_t>(kWitnessCap)) {
        std::sort(scan.witnesses.begin(), scan.witnesses.end());
        rec.witnesses.push_back(scan.witnesses.front());
      }
    }
  }
  return rec;
}

std::vector<ConjectureRow> conjecture_check(int k_lo, int k_hi, int n_hi, const BudgetOptions& b) {
  std::vector<ConjectureRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int n = k; n <= n_hi; ++n) {
      ConjectureRow row;
      row.k = k;
      row.n = n;
      row.predicted = min_edge_formula(k, n).value;
      ExtremalRecord rec = search_min_edges(k, n, b);
      row.nodes = rec.nodes;
      row.seconds = rec.seconds;
      if (!rec.conclusive || rec.values.empty()) {
        row.verdict = "inconclusive";
      } else {
        row.exhaustive = rec.values.front();
        row.witness = rec.witnesses.empty() ? "" : rec.witnesses.front();
        row.verdict = (*row.exhaustive == row.predicted) ? "match" : "mismatch";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<TableRow> record_rows(const ExtremalRecord& rec) {
  TableRow row;
  row.k = rec.k;
  row.n = rec.n;
  row.kind = rec.kind;
  row.method = rec.conclusive ? rec.method : "inconclusive";
  std::ostringstream vals;
  for (size_t i = 0; i < rec.values.size(); ++i) {
    if (i) vals << ';';
    vals << rec.values[i];
  }
  row.value = vals.str();
  std::ostringstream wit;
  for (size_t i = 0; i < rec.witnesses.size(); ++i) {
    if (i) wit << ';';
    wit << rec.witnesses[i];
  }
  row.witness = wit.str();
  row.nodes = rec.nodes;
  row.seconds = rec.seconds;
  return {row};
}

std::vector<TableRow> conjecture_rows(const std::vector<ConjectureRow>& rows) {
  std::vector<TableRow> out;
  for (const auto& r : rows) {
    TableRow row;
    row.k = r.k;
    row.n = r.n;
    row.kind = "conjecture";
    row.value = (r.exhaustive ? std::to_string(*r.exhaustive) : std::string("-")) + ";" +
                std::to_string(r.predicted) + ";" + r.verdict;
    row.method = r.exhaustive ? "exhaustive" : "inconclusive";
    row.witness = r.witness;
    row.nodes = r.nodes;
    row.seconds = r.seconds;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableRow> build_tables(const TableOptions& opt) {
  std::vector<TableRow> out;
  auto wants = [&](const std::string& kind) {
    return std::find(opt.kinds.begin(), opt.kinds.end(), kind) != opt.kinds.end();
  };

  for (int k = opt.k_lo; k <= opt.k_hi; ++k) {
    for (int n = std::max(k, opt.n_lo); n <= opt.n_hi; ++n) {
      if (wants("min")) {
        if (n <= opt.exhaustive_min_max_n && k <= 12) {
          auto rows = record_rows(search_min_edges(k, n, opt.budget));
          out.insert(out.end(), rows.begin(), rows.end());
        } else {
          TableRow row;
          row.k = k;
          row.n = n;
          row.kind = "min";
          auto f = min_edge_formula(k, n);
          row.value = std::to_string(f.value);
          row.method = std::string("construction-only:") +
                       (f.status == FormulaStatus::proven        ? "proven"
                        : f.status == FormulaStatus::conjecture  ? "conjecture"
                                                                 : "upper-bound-only");
          row.witness = to_graph6(clique_chain(k, n).graph);
          out.push_back(std::move(row));
        }
      }
      if (wants("max")) {
        if (n <= opt.exhaustive_max_max_n) {
          auto rows = record_rows(search_max_edges(k, n, opt.budget));
          out.insert(out.end(), rows.begin(), rows.end());
        } else {
          TableRow row;
          row.k = k;
          row.n = n;
          row.kind = "max";
          row.value = std::to_string(max_edge_formula(k, n));
          row.method = "construction-only:proven";
          row.witness = to_graph6(max_edge_construction(k, n).graph);
          out.push_back(std::move(row));
        }
      }
      if (wants("scan") && n <= kScanGuardN) {
        auto rows = record_rows(realization_scan(k, n, opt.budget));
        out.insert(out.end(), rows.begin(), rows.end());
      }
      if (wants("bounds")) {
        TableRow chain;
        chain.k = k;
        chain.n = n;
        chain.kind = "min-upper-bound";
        chain.method = "construction:clique-chain";
        auto cc = clique_chain(k, n);
        chain.value = std::to_string(cc.certificate.m);
        chain.witness = to_graph6(cc.graph);
        out.push_back(std::move(chain));
        if (n - k >= 2) {
          TableRow comp;
          comp.k = k;
          comp.n = n;
          comp.kind = "min-upper-bound";
          comp.method = "construction:complement";
          auto cd = complement_construction(k, n);
          comp.value = std::to_string(cd.certificate.m);
          comp.witness = to_graph6(cd.graph);
          out.push_back(std::move(comp));
        }
      }
    }
  }

  if (wants("conjecture")) {
    auto rows = conjecture_rows(conjecture_check(std::max(5, opt.k_lo), std::min(7, opt.k_hi),
                                                 opt.n_hi, opt.budget));
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string render_csv(const std::vector<TableRow>& rows, bool timings) {
  std::ostringstream out;
  out << "k,n,kind,value,method,witness_g6,nodes,seconds\n";
  for (const auto& r : rows) {
    char sec[32];
    std::snprintf(sec, sizeof sec, "%.3f", timings ? r.seconds : 0.0);
    out << r.k << ',' << r.n << ',' << r.kind << ',' << r.value << ',' << r.method << ','
        << r.witness << ',' << r.nodes << ',' << sec << '\n';
  }
  return out.str();
}

}  // namespace kdense
