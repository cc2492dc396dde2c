#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense {

struct BudgetOptions {
  long node_budget = -1;           // canonicity tests; -1 unlimited
  double time_budget_seconds = -1;
  bool force = false;              // lift the default size guards
};

inline constexpr int kWitnessCap = 32;
inline constexpr int kMinSearchGuardN = 9;   // density-filtered sweeps
inline constexpr int kMaxSearchGuardN = 7;   // descending max sweeps
inline constexpr int kScanGuardN = 9;

struct ExtremalRecord {
  int k = 0;
  int n = 0;
  std::string kind;                    // "min" | "max" | "realization-set"
  std::vector<long> values;            // one value, or the feasible edge counts
  std::vector<std::string> witnesses;  // canonical graph6, capped, sorted
  std::string method = "exhaustive";   // or "construction-only"
  long nodes = 0;
  double seconds = 0;
  bool conclusive = true;
};

// Ascending sweep over the edge count from the degree-floor bound
// ceil(n(k-1)/2); the first m admitting a connected graph with density
// index k is the minimum. Every m is tested — no bisection, since
// feasibility is not known to be monotone.
ExtremalRecord search_min_edges(int k, int n, const BudgetOptions& b = {});

// Descending sweep from C(n,2); the first feasible m is the maximum.
ExtremalRecord search_max_edges(int k, int n, const BudgetOptions& b = {});

// The exact set of edge counts realized by connected graphs with
// density index k on n vertices, with one witness per count.
ExtremalRecord realization_scan(int k, int n, const BudgetOptions& b = {});

struct ConjectureRow {
  int k = 0;
  int n = 0;
  std::optional<long> exhaustive;
  long predicted = 0;
  std::string verdict;  // "match" | "mismatch" | "inconclusive"
  std::string witness;
  long nodes = 0;
  double seconds = 0;
};

// Exhaustive minimum vs the closed-form prediction for each (k, n).
std::vector<ConjectureRow> conjecture_check(int k_lo, int k_hi, int n_hi,
                                            const BudgetOptions& b = {});

struct TableRow {
  int k = 0;
  int n = 0;
  std::string kind;
  std::string value;
  std::string method;
  std::string witness;
  long nodes = 0;
  double seconds = 0;
};

struct TableOptions {
  int k_lo = 2, k_hi = 4;
  int n_lo = 4, n_hi = 8;
  std::vector<std::string> kinds = {"min", "max"};  // min max scan bounds conjecture
  BudgetOptions budget;
  // guards for switching from exhaustive search to construction values
  int exhaustive_min_max_n = 8;
  int exhaustive_max_max_n = 7;
};

std::vector<TableRow> build_tables(const TableOptions& opt);

// CSV with header k,n,kind,value,method,witness_g6,nodes,seconds.
// Timings are zeroed by default so identical runs are byte-identical.
std::string render_csv(const std::vector<TableRow>& rows, bool timings = false);

std::vector<TableRow> record_rows(const ExtremalRecord& rec);
std::vector<TableRow> conjecture_rows(const std::vector<ConjectureRow>& rows);

}  // namespace kdense
