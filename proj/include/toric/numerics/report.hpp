#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace toric::numerics {

/// Outcome of a sampled numerical check. `passed` follows the check's own
/// rule: max_residual below tolerance, or min_margin above zero.
struct VerificationReport {
  std::string check;
  std::size_t samples = 0;
  double max_residual = 0;
  double min_margin = 0;
  bool passed = false;
  double fd_step = 0;
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> values;  // check-specific extras
};

}  // namespace toric::numerics
