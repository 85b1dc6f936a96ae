// Acceptance suite: runs every reproduction check at full size and prints
// one verdict line per check.  Exits nonzero on any failure.
#include <iostream>

#include "vilogic/repro.hpp"

int main() {
  vilogic::ReproOptions options;
  options.data_dir = VILOGIC_TEST_DATA;
  vilogic::ReproReport report = vilogic::run_repro(options);
  vilogic::print_report(report, std::cout);
  return report.all_pass() ? 0 : 1;
}
