// The reproduction suite behind `tricgt verify` and the acceptance binary.
//
// Checks 1..10 are the acceptance criteria; the rest are further claims about
// Nim, infinity and the corollary chain. Quick mode stays at day 3 wherever a
// check has a day-4 variant; full mode runs the day-4 scans as well.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricgt/context.hpp"

namespace tricgt {

struct VerifyOptions {
  bool full = false;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CheckSpec {
  std::string_view name;
  std::string_view title;
  // Acceptance criterion number, 0 for supplementary checks.
  int criterion;
  std::function<CheckResult(Context&, const VerifyOptions&)> run;
};

std::span<const CheckSpec> verification_checks();

// Runs one check, timing it and turning exceptions into failures.
CheckResult run_check(const CheckSpec& spec, Context& ctx, const VerifyOptions& opts);

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

// Expression strings used in the round-trip check.
std::span<const std::string_view> sample_expressions();

}  // namespace tricgt
