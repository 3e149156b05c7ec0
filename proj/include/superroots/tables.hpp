#pragma once

#include "superroots/affine.hpp"

#include <string>
#include <vector>

namespace superroots {

/// Root classification and parity tables for the untwisted affine types,
/// transcribed entry by entry as printed. Used only for golden comparison;
/// runtime classification never reads them.
struct PrintedTable {
  std::vector<Root> imaginary, real, nonsingular;  // finite directions
  std::vector<Root> even, odd;
  /// Printed entries naming a symbol the basis does not have.
  std::vector<std::string> out_of_basis;
};

PrintedTable printed_table(const AffineTypeId& type);

struct GoldenMismatch {
  Root root;
  std::string field;  // "kind" or "parity"
  std::string table;
  std::string computed;
};

struct GoldenReport {
  std::string type;
  std::size_t roots_checked = 0;
  std::size_t kind_mismatches = 0;
  std::size_t parity_mismatches = 0;
  std::vector<GoldenMismatch> mismatches;
  /// Finite directions printed in the table that are not in Ṙ.
  std::vector<std::string> table_entries_not_in_R;
  std::vector<std::string> out_of_basis;
  bool passed() const { return mismatches.empty(); }
};

/// Compares classify() and parity() with the printed tables on |k| <= K.
GoldenReport compare_with_tables(const AffineRootSystem& system, std::int64_t K);

}  // namespace superroots
