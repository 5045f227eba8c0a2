#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zeropath {

// One property of a suite, aggregated over all trials that exercised it.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // trial counts, plus the first failure witness
};

struct SuiteResult {
  std::string suite;
  int trials = 0;  // random trials run (0 for purely structural suites)
  std::vector<CheckResult> checks;

  bool pass() const;
  int failures() const;
};

struct VerifyOptions {
  int trials = 0;          // 0 keeps the suite default
  std::uint64_t seed = 1;  // base seed for instance generation
};

// windmill, gadget, split, duality, wall, linkage, tangle.
const std::vector<std::string>& suite_names();

// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt = {});

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt = {});

}  // namespace zeropath
