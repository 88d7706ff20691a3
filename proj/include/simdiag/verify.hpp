#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simdiag/enumerated_group.hpp"
#include "simdiag/report.hpp"

namespace simdiag {

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t order_cap = kDefaultOrderCap;
  std::uint64_t point_cap = kDefaultPointCap;
  std::uint32_t cn_cap = 64;
  std::uint64_t table_cap = 25000;
};

struct CheckResult {
  std::string id;
  std::string claim;     // the identity being checked, in mathematical form
  std::string expected;
  std::string computed;
  std::string status;    // "pass" | "fail" | "skip"
  int criterion = 0;     // acceptance criterion this check belongs to (0 = none)
};

// Suites: "widths", "covering", "diagonal", "characters", "all".
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt);

Json verify_json(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace simdiag
