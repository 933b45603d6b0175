#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert::cli {

struct TableRow {
  std::string_view word;
  std::string_view clan;
  int coefficient;
};

/// Golden rows for one product: every w of length l(u)+l(v), the clan w
/// carries the pair's orbit to, and the structure constant.
struct ReferenceTable {
  std::string_view name;
  GroupType type;
  int rank;
  std::string_view u;
  std::string_view v;
  std::span<const TableRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();

struct RowMismatch {
  std::string word;
  std::string expected_clan;
  std::string actual_clan;
  int expected_coefficient;
  std::uint64_t actual_coefficient;
};

struct TableCheck {
  std::string name;
  std::size_t rows = 0;
  std::size_t nonzero = 0;
  /// Problems that are not per-row mismatches: unreduced words, repeated
  /// elements, or elements of the right length missing from the table.
  std::vector<std::string> problems;
  std::vector<RowMismatch> mismatches;
  double seconds = 0;

  bool ok() const { return problems.empty() && mismatches.empty(); }
};

/// Recomputes every row and compares it with the golden data.
TableCheck check_table(const ReferenceTable& table);

}  // namespace schubert::cli
