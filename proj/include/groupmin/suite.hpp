#ifndef GROUPMIN_SUITE_HPP
#define GROUPMIN_SUITE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace groupmin {

struct SuiteRow {
  std::string id;
  std::string claim;
  bool asserted = true;  // reported-only rows never fail the suite
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;

  bool all_passed() const {
    for (const auto& r : rows)
      if (r.asserted && !r.pass) return false;
    return true;
  }
};

// Runs every worked-example and property check; rows come back in a
// fixed order regardless of runtime.
SuiteResult run_example_suite();

// One line per row; timings are printed only when requested so reports
// stay byte-identical across runs.
void print_suite(std::ostream& out, const SuiteResult& result, bool timings);

}  // namespace groupmin

#endif
