#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "inell/parallelogram.hpp"

namespace inell {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  /// Replaces the closed-form optimal inscribed parameter in the angle
  /// property. Used for negative controls.
  std::function<double(const Parallelogram&)> v_epsilon_override;
};

struct PropertyOutcome {
  std::string name;
  double threshold = 0;
  int passed = 0;
  int total = 0;
  double worst = 0;
  std::vector<std::string> failures;  // first few, with reproduction parameters

  bool ok() const { return passed == total; }
};

struct VerifyReport {
  std::vector<PropertyOutcome> properties;

  bool all_passed() const;
};

/// Seeded randomized invariant suites across all modules.
VerifyReport run_verification(const VerifyOptions& options);

/// One line per property: status, pass count, worst metric vs threshold;
/// failures listed beneath.
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace inell
