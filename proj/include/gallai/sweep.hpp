#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/paths.hpp"
#include "gallai/patterns.hpp"
#include "gallai/report.hpp"

namespace gallai {

enum class SweepMode { GallaiMinimum, Theorem1, Theorem4, Theorem5, Problem2 };
std::string_view to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view text);

struct SweepOptions {
  int min_n = 1;
  int max_n = 8;
  int jobs = 1;
  PathOptions paths;
  // Pairs (K1_3, S) to test; empty means every pair of the mode.
  std::vector<PatternName> pairs;
  // problem2: tuple size and budget.
  int k = 3;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
  // theorem5: run the block-case claim diagnostics.
  bool claims = true;
};

struct SweepViolation {
  std::size_t index = 0;  // position in the input stream
  std::string graph6;
  std::string pair;       // "K1_3:S" or empty
  std::string verdict;
};

struct SweepOrderSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> in_class;  // per pair
  std::map<std::string, std::uint64_t> outcomes;
};

struct SweepResult {
  SweepMode mode = SweepMode::GallaiMinimum;
  std::vector<SweepOrderSummary> orders;  // increasing n
  std::vector<SweepViolation> violations;  // any entry is an alarm
  std::vector<SweepViolation> findings;    // recorded, not asserted
  std::uint64_t decode_errors = 0;
  std::vector<std::string> decode_messages;
  double runtime_seconds = 0;

  std::uint64_t total() const;
  std::uint64_t outcome(std::string_view key) const;  // summed over orders
  std::uint64_t in_class(std::string_view pair) const;
};

// Every connected graph of order min_n..max_n from the builtin enumerator.
SweepResult sweep_builtin(SweepMode mode, const SweepOptions& options);
// One graph6 per line; bad lines are counted and reported, the sweep goes on.
SweepResult sweep_graph6(std::istream& in, SweepMode mode, const SweepOptions& options);
SweepResult sweep_graphs(const std::vector<Graph>& graphs, SweepMode mode, const SweepOptions& options);

// Summary without runtime is byte-identical for any job count.
Json to_json(const SweepResult& r, bool with_runtime = true);
// Rows "n,key,count" plus violations as "violation,<graph6>,<pair>,<verdict>".
std::string to_csv(const SweepResult& r);

}  // namespace gallai
