#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polytree::verify {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
  /// One line per check, then the overall verdict.
  std::string to_text() const;
};

/// Suites: "planar", "polytopes", "reduced", "all". Throws std::invalid_argument
/// for an unknown suite and std::out_of_range unless 3 <= n_max <= 6.
/// The report does not depend on `jobs`.
VerificationReport run_suite(const std::string& suite, int n_max, int jobs = 1);

VerificationReport run_planar(int n_max, int jobs = 1);
VerificationReport run_polytopes(int n_max);
VerificationReport run_reduced(int n_max);

}  // namespace polytree::verify
