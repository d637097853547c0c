#pragma once

#include <string>
#include <vector>

namespace cohomap {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Invariant suites: "halfangle", "su3", "sphere", "cpm", "theory".
/// "all" concatenates every suite. Throws std::invalid_argument for
/// unknown names.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

const std::vector<std::string>& verify_suite_names();

}  // namespace cohomap
