#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamb/constants.hpp"
#include "lamb/table.hpp"

namespace lamb {

enum class Gate {
  Relative,  // |ours - reference| / |reference| <= tolerance
  Absolute,  // |ours - reference| <= tolerance
  Info,      // reported, never fails
};

struct ReportRow {
  std::string case_id;   // "II", "a" ... "h"
  std::string quantity;  // what is compared, e.g. "rad H(2S - 2P1/2)"
  std::string scheme;    // zeta scheme label, "-" when independent of it
  int criterion = 0;     // acceptance group, 0 for info rows
  Gate gate = Gate::Info;
  double tolerance = 0.0;
  double ours_hz = 0.0;
  double reference_hz = 0.0;  // published value being reproduced
  std::optional<double> experiment_hz;

  double gap() const;  // relative or absolute according to gate
  bool pass() const;
  /// 100 (ours - experiment)/experiment when an experiment is attached.
  std::optional<double> discrepancy_percent() const;
};

/// Every published level difference, with the composition encoded once.
std::vector<ReportRow> report_cases(const PhysicalConstants& c);

/// Columns: case, quantity, scheme, criterion, ours_hz, reference_hz,
/// gap, tolerance, status, experiment_hz, discrepancy_percent.
Table report_table(const std::vector<ReportRow>& rows);

bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace lamb
