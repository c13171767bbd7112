#ifndef RIFFLE_VERIFY_HPP
#define RIFFLE_VERIFY_HPP

#include <string>
#include <vector>

namespace riffle {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays the closed forms, recursions and worked examples against the
/// enumeration oracles. Enumeration-heavy checks run up to
/// min(max_n, their own cap); the rest are fixed-size.
std::vector<CheckResult> run_verification_suite(int max_n);

}  // namespace riffle

#endif  // RIFFLE_VERIFY_HPP
