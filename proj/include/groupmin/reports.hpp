#ifndef GROUPMIN_REPORTS_HPP
#define GROUPMIN_REPORTS_HPP

#include <cstddef>
#include <string>

#include "groupmin/dfa.hpp"
#include "groupmin/perm_group.hpp"

namespace groupmin {

struct ReportOptions {
  std::size_t element_cap = kDefaultElementCap;
  std::size_t subset_limit = 12;  // degree bound for 2^n sweeps
  bool json = false;
  bool ubm = false;            // product: run the brute-force UBM sweep
  bool boolean_table = false;  // product: per-operation complexities
};

// Single-DFA analysis: accessibility, connectivity, minimality, and for
// permutation DFAs the transition-group facts and uniform-minimality
// verdicts by both routes.
std::string analyze_report(const Dfa& d, const ReportOptions& opts);

// Pair analysis: similarity, accessibility conditions, stabilizer
// summaries, certificate verdicts, optional UBM sweep and per-operation
// state complexities.
std::string product_report(const Dfa& a, const Dfa& ap,
                           const ReportOptions& opts);

}  // namespace groupmin

#endif
