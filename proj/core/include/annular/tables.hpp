#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "annular/numtheory.hpp"

namespace annular {

/// Inclusive integer range written "lo..hi" (or a single "v").
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Range parse(std::string_view text);
  std::vector<std::uint64_t> values() const;
};

/// Labeled grid of exact counts. Zero cells print blank unless asked.
struct CountTable {
  std::string name;    // "maximal", "ann" or "total"
  std::string corner;  // header of the label column, e.g. "n\k"
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  std::vector<std::vector<ExactInt>> cells;

  bool is_blank(std::size_t row, std::size_t col) const { return cells[row][col] == 0; }
};

/// |Ann_k(2n+k, k)| with rows n and columns k. threads == 0 picks the
/// hardware concurrency; the result does not depend on it.
CountTable maximal_table(Range n, Range k, unsigned threads = 0);

/// |Ann(n, m)| for 0 <= n, m <= max.
CountTable ann_table(std::uint64_t max, unsigned threads = 0);

/// |Ann(2n)| for 0 <= n <= max, as one row.
CountTable total_table(std::uint64_t max, unsigned threads = 0);

std::string to_csv(const CountTable& table, bool zeros = false);

/// {"schema":"annular-table/1","table":...,"corner":...,"rows":[...],
///  "cols":[...],"cells":[["1",...],...]} with exact values as strings.
std::string to_json(const CountTable& table);
CountTable table_from_json(std::string_view json);

}  // namespace annular
