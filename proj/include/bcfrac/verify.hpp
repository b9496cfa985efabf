// Part of bcfrac, a bicomplex fractional calculus library.
// SPDX-License-Identifier: Apache-2.0

#ifndef BCFRAC_VERIFY_HPP
#define BCFRAC_VERIFY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace bcfrac::verify {

/// Outcome of one identity check. `errors` holds one entry per grid size for
/// grid-refinement checks (the last one is judged against `threshold`) or a
/// single entry otherwise. `empirical_order` is log2(e_h / e_{h/2}) for the
/// finest pair, NaN when not applicable.
struct CheckResult {
  std::string name;
  std::string suite;
  std::vector<int> grids;
  std::vector<double> errors;
  double empirical_order = std::numeric_limits<double>::quiet_NaN();
  double threshold;
  double order_floor;  // 0 when the check has no order requirement
  bool require_decreasing = false;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

struct Options {
  std::vector<int> grids = {257, 513, 1025, 2049};
  std::uint64_t seed = 0xB1C0;
  double tol = 1e-12;  // kernel/function series tolerance
};

/// Suites: algebra, ml, operators, laplace, cauchy, or all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

bool all_passed(const std::vector<CheckResult>& checks);

/// Machine-readable report (JSON), echoing configuration and environment.
std::string report_json(const std::vector<CheckResult>& checks, const std::string& suite,
                        const Options& opt);

/// One line per check, human-readable.
std::string report_text(const std::vector<CheckResult>& checks);

}  // namespace bcfrac::verify

#endif
