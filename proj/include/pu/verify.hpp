#pragma once

#include <string>
#include <vector>

// Verification battery behind `puosc verify-all`: eleven numbered suites,
// each a list of named checks with a one-line measured-vs-bound detail.
// A suite passes when every check passes; the battery passes when every
// suite does.  Checks either assert an exact identity (integer algebra,
// machine-level cancellation) or a numerical bound with the tolerance
// pinned here, next to the computation it protects.

namespace pu::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool pass = true;
  double seconds = 0.0;
};

struct VerifyConfig {
  unsigned long long seed = 12345;  // roundtrip / sampling draws
  int nmax_fock = 20;               // mode-operator truncation
  int nmax_algebra = 40;            // equal-frequency algebra truncation
  int jordan_max = 64;              // largest invariant subspace analysed
  int scan_points = 400;            // radial grid of the limit scan
  double scan_pmax = 10.0;
  int scan_final_total = 2000;  // last n1 + n2 of the limit schedule
  unsigned max_threads = 0;     // 0 = hardware concurrency
  bool inject_failure = false;  // corrupt one tolerance to demonstrate failure reporting
};

inline constexpr int kSuiteCount = 11;

// id in [1, kSuiteCount]; throws std::domain_error otherwise.
SuiteResult run_suite(int id, const VerifyConfig& cfg = {});
std::vector<SuiteResult> run_all(const VerifyConfig& cfg = {});
bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace pu::verify
