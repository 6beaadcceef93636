#ifndef KICKFREEZE_VERIFICATION_HPP
#define KICKFREEZE_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kickfreeze {

struct CheckResult {
  std::string name;
  bool passed;
  /// Worst observed value against its threshold.
  std::string detail;
};

/// Randomized invariant suite behind the `verify` subcommand.
std::vector<CheckResult> run_verification(std::uint64_t seed, int draws = 200);

}  // namespace kickfreeze

#endif  // KICKFREEZE_VERIFICATION_HPP
