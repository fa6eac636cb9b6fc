#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/bound.hpp"

namespace hecke {

/// Inclusive integer range, written "a..b" or "a".
struct Range {
  std::int64_t lo;
  std::int64_t hi;

  /// Throws std::invalid_argument on malformed text or lo > hi.
  static Range parse(std::string_view text);
  friend bool operator==(const Range&, const Range&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "g,N,p,c_g,gsp_order,signed_product,sigma_count,rep_sum_bound,total";

/// Rows in (g, N, p) lexicographic order.
struct SweepTable {
  std::vector<BoundBreakdown> rows;
  friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

struct SweepResult {
  SweepTable table;
  std::uint64_t skipped = 0;  // cells violating a hypothesis (composite p, p | N, ...)
};

/// Evaluates every admissible cell of the grid. Cells run on up to `jobs`
/// threads (0 = hardware concurrency); row order is fixed regardless.
SweepResult build_sweep(const Range& g, const Range& N, const Range& p, unsigned jobs = 0);

void write_csv(std::ostream& out, const SweepTable& table);
SweepTable read_csv(std::istream& in);

/// One JSON object per line with the nine CSV keys; every value a string.
void write_jsonl(std::ostream& out, const SweepTable& table);
SweepTable read_jsonl(std::istream& in);

/// Single JSON object (pretty-printed) for one breakdown.
std::string breakdown_json(const BoundBreakdown& row, int indent = 2);
std::vector<std::string> breakdown_cells(const BoundBreakdown& row);

/// Rebuilds a row from its nine cells and checks the breakdown invariants
/// (total = sigma_count * rep_sum_bound, sigma_count = c_g * gsp * product).
/// Throws std::invalid_argument when they fail.
BoundBreakdown breakdown_from_cells(const std::vector<std::string>& cells);

}  // namespace hecke
