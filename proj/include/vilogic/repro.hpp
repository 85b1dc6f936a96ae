#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vilogic {

struct ReproOptions {
  /// Directory holding the proof corpus and instance batches (the layout
  /// under tests/data).  The translation suite needs it; everything else
  /// is self-contained.
  std::string data_dir;
  /// Trims the heavy enumerations to a fraction of their full size.
  bool quick = false;
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ReproReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the full reproduction suite: the nine acceptance checks plus the
/// narrative facts the catalog is expected to exhibit.
ReproReport run_repro(const ReproOptions& options);

/// One line per check: "<name>: PASS/FAIL - detail".
void print_report(const ReproReport& report, std::ostream& out);

}  // namespace vilogic
