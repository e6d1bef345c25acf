// Acceptance run: criteria 1..10 at full (day-4) scale, one PASS/FAIL line each.

#include <cstdio>
#include <map>

#include "tricgt/verify.hpp"

using namespace tricgt;

namespace {

// Seconds allowed per criterion. Criteria 3 and 5 also share one combined budget.
const std::map<int, double> kLimits{{1, 1}, {2, 10}, {6, 30}, {7, 300}, {9, 120}};
constexpr double kScanBudget = 900;

}  // namespace

int main() {
  VerifyOptions opts;
  opts.full = true;
  opts.seed = 42;
  Context ctx;

  int failures = 0;
  double scan_seconds = 0;
  for (const auto& spec : verification_checks()) {
    if (spec.criterion == 0) continue;
    auto r = run_check(spec, ctx, opts);
    std::string detail = r.detail;
    if (auto it = kLimits.find(spec.criterion); it != kLimits.end() && r.seconds >= it->second) {
      r.passed = false;
      detail += "; over the " + std::to_string(static_cast<int>(it->second)) + " s limit";
    }
    if (spec.criterion == 3 || spec.criterion == 5) {
      scan_seconds += r.seconds;
      if (spec.criterion == 5 && scan_seconds >= kScanBudget) {
        r.passed = false;
        detail += "; criteria 3 and 5 together over 900 s";
      }
    }
    failures += !r.passed;
    std::printf("%s criterion %-2d %-22s %8.2fs  %s\n", r.passed ? "PASS" : "FAIL", spec.criterion, r.name.c_str(),
                r.seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
