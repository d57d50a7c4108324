// Verification of the composition tables: for every ordered operand pair
// instantiable in the window, the predicted closed-form right-hand side
// is compared against the actual composition.  Rows where the source
// text's prediction is contradicted by computation carry a correction
// note; such rows report as findings, and the printed prediction is
// re-evaluated so that every documented correction is itself verified to
// be necessary.
#pragma once

#include "idealops/monoid.hpp"
#include "idealops/report.hpp"

namespace idealops {

struct TableExpected {
  enum class Kind { op_table, not_closure, not_semiprime };
  Kind kind = Kind::op_table;
  std::optional<ClosureOp> op;

  static TableExpected of(ClosureOp o) {
    return TableExpected{Kind::op_table, std::move(o)};
  }
  static TableExpected nc() { return {Kind::not_closure, std::nullopt}; }
  static TableExpected ns() { return {Kind::not_semiprime, std::nullopt}; }
};

std::string to_string(const TableExpected& e);

// prediction for one cell: row id, corrected expectation, optional
// erratum note plus the printed expectation (nullopt when the printed
// parameters are not even constructible)
struct CellPrediction {
  std::string row;
  TableExpected expected;
  const char* note = nullptr;
  std::optional<TableExpected> printed;   // only set when note != nullptr
  bool printed_constructible = true;
};

// table ids: DVR, DED, M1..M6, L1..L6 (L-tables have .a/.b directions)
std::vector<std::string> table_ids(Family fam);

Report verify_table(const std::string& table_id, const Window& w);
Report verify_all_tables(const Window& w);

}  // namespace idealops
