#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaidx/families.hpp"

namespace gaidx {

/// Grid of A/B (table 1) or C/D (table 2) values. Rows are p (or r), column
/// groups are q (or k); cells with row < column are empty.
struct ComparisonTable {
  int which = 1;
  int row_first = 0;
  int row_last = 0;
  int col_first = 0;
  int col_last = 0;
  std::vector<std::vector<std::optional<PendantCyclePair>>> cells;  // [row][col]

  const std::optional<PendantCyclePair>& at(int row, int col) const {
    return cells.at(row - row_first).at(col - col_first);
  }
};

/// Row/column ranges that reproduce the published layouts:
/// table 1 is p = 2..7 by q = 2..4, table 2 is r = 2..13 by k = 2..5.
ComparisonTable default_table(int which);

/// Throws DomainError when `which` is not 1 or 2, a range is empty, or a
/// column leaves the domain of the functions (q >= 0, k >= 1).
ComparisonTable compute_table(int which, int row_first, int row_last, int col_first, int col_last);

/// CSV with a header row and 4-decimal values; empty cells are "-".
void write_table_csv(std::ostream& out, const ComparisonTable& table);
/// Fixed-width text rendering of the same content.
void write_table_text(std::ostream& out, const ComparisonTable& table);

/// Fixed-point formatting with `digits` decimals, correctly rounded.
std::string format_fixed(double value, int digits);

}  // namespace gaidx
