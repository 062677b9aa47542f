#include "gaidx/tables.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "gaidx/error.hpp"

namespace gaidx {

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string out(buf);
  if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

ComparisonTable default_table(int which) {
  if (which == 1) return compute_table(1, 2, 7, 2, 4);
  if (which == 2) return compute_table(2, 2, 13, 2, 5);
  throw DomainError("table must be 1 or 2, got " + std::to_string(which));
}

ComparisonTable compute_table(int which, int row_first, int row_last, int col_first, int col_last) {
  if (which != 1 && which != 2) throw DomainError("table must be 1 or 2, got " + std::to_string(which));
  if (row_first > row_last || col_first > col_last) throw DomainError("empty table range");
  const int min_col = which == 1 ? 0 : 1;
  if (col_first < min_col) {
    throw DomainError("table " + std::to_string(which) + " columns start at " +
                      std::to_string(min_col));
  }
  if (row_last > 100000 || col_last > 100000) throw DomainError("table range too large");
  ComparisonTable t{which, row_first, row_last, col_first, col_last, {}};
  for (int row = row_first; row <= row_last; ++row) {
    auto& line = t.cells.emplace_back();
    for (int col = col_first; col <= col_last; ++col) {
      if (row < col) {
        line.push_back(std::nullopt);
      } else {
        line.push_back(which == 1 ? compare_AB(row, col) : compare_CD(row, col));
      }
    }
  }
  return t;
}

namespace {

std::vector<std::string> header(const ComparisonTable& t) {
  const char* row = t.which == 1 ? "p" : "r";
  const char* a = t.which == 1 ? "A" : "C";
  const char* b = t.which == 1 ? "B" : "D";
  std::vector<std::string> cols{row};
  for (int c = t.col_first; c <= t.col_last; ++c) {
    cols.push_back(std::string(a) + "(" + row + "," + std::to_string(c) + ")");
    cols.push_back(std::string(b) + "(" + row + "," + std::to_string(c) + ")");
  }
  return cols;
}

std::vector<std::string> row_cells(const ComparisonTable& t, int row) {
  std::vector<std::string> cols{std::to_string(row)};
  for (int c = t.col_first; c <= t.col_last; ++c) {
    const auto& cell = t.at(row, c);
    cols.push_back(cell ? format_fixed(cell->pendant, 4) : "-");
    cols.push_back(cell ? format_fixed(cell->cycle, 4) : "-");
  }
  return cols;
}

}  // namespace

void write_table_csv(std::ostream& out, const ComparisonTable& table) {
  auto emit = [&](const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
  };
  emit(header(table));
  for (int row = table.row_first; row <= table.row_last; ++row) emit(row_cells(table, row));
}

void write_table_text(std::ostream& out, const ComparisonTable& table) {
  auto emit = [&](const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << std::setw(i == 0 ? 4 : 9) << cols[i] << (i + 1 < cols.size() ? " " : "");
    }
    out << '\n';
  };
  emit(header(table));
  for (int row = table.row_first; row <= table.row_last; ++row) emit(row_cells(table, row));
}

}  // namespace gaidx
