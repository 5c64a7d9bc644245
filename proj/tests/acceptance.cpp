#include <cstdio>
#include <string>

#include "pu/verify.hpp"

// Acceptance gate, one criterion per invocation: `pu_acceptance N`.
// Criteria 1..11 run the matching verification suite and fail if any check
// fails; criterion 12 runs the full battery and demands a clean aggregate.

namespace {

void print_checks(const pu::verify::SuiteResult& s) {
  for (const auto& c : s.checks)
    std::printf("  [%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  int n = 0;
  if (argc == 2) {
    try {
      n = std::stoi(argv[1]);
    } catch (...) {
      n = 0;
    }
  }
  if (n < 1 || n > 12) {
    std::fprintf(stderr, "usage: %s <criterion, 1..12>\n", argv[0]);
    return 2;
  }

  const pu::verify::VerifyConfig cfg;
  if (n <= pu::verify::kSuiteCount) {
    const pu::verify::SuiteResult s = pu::verify::run_suite(n, cfg);
    print_checks(s);
    std::printf("criterion %d: %s (%.2f s)\n", n, s.pass ? "PASS" : "FAIL", s.seconds);
    return s.pass ? 0 : 1;
  }

  const std::vector<pu::verify::SuiteResult> all = pu::verify::run_all(cfg);
  double total = 0.0;
  for (const auto& s : all) {
    total += s.seconds;
    std::printf("suite %2d: %-52s [%s] (%.2f s)\n", s.id, s.title.c_str(),
                s.pass ? "PASS" : "FAIL", s.seconds);
  }
  const bool ok = pu::verify::all_pass(all);
  std::printf("criterion 12: %s (%.2f s)\n", ok ? "PASS" : "FAIL", total);
  return ok ? 0 : 1;
}
