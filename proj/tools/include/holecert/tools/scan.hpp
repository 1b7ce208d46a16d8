#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "holecert/corpus.hpp"
#include "holecert/exact.hpp"

namespace holecert::tools {

enum class ScanMode { Exhaustive, Random };

struct ScanConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  ScanMode mode = ScanMode::Exhaustive;
  std::size_t samples = 100;
  corpus::Rational p{1, 2};
  std::uint64_t seed = 0;
  std::size_t hole_cap = 3;
  SolveBudget budget;
  std::size_t threads = 0;  // 0 picks the hardware concurrency
};

// Empty when the config is usable, else the reason it is not.
std::optional<std::string> validate(const ScanConfig& config);

// Parses "A..B" or "A".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

enum class RowStatus { Ok, Violation, BudgetExhausted };

struct ScanRow {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t holes = 0;
  bool capped = false;
  std::optional<std::size_t> cert_k;   // set when holes <= 2 and certify finished
  std::optional<bool> fallback;
  std::optional<std::size_t> exact_k;  // set when the exact search finished
  RowStatus status = RowStatus::Ok;
  bool conjecture_exceeded = false;    // more than 2 holes and exact k > holes + 1
  std::string detail;                  // why the row is a violation
  std::string code;                    // corpus::edge_code of the graph
};

struct ScanSummary {
  std::vector<ScanRow> rows;
  std::size_t violations = 0;
  std::size_t fallbacks = 0;
  std::size_t budget_exhausted = 0;
  std::size_t conjecture_exceeded = 0;
  // (hole count, exact k) -> instances; hole count cap + 1 stands for "more".
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> distribution;

  bool clean() const { return violations == 0 && budget_exhausted == 0; }
};

// Evaluates one graph: hole count, certificate (holes <= 2), exact k, checks.
ScanRow scan_one(const Graph& g, const ScanConfig& config);

// Runs the whole corpus. Instances are evaluated in parallel and collected in
// index order, so the result depends on the config only.
ScanSummary run_scan(const ScanConfig& config);

void write_table(std::ostream& os, const ScanConfig& config, const ScanSummary& summary);

}  // namespace holecert::tools
