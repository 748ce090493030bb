#ifndef HK_VERIFY_HPP
#define HK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace hk {

struct VerifyOptions {
  int n_max = -1;            // -1 keeps each case's default range
  double budget_scale = 1.0;
};

struct CaseResult {
  bool pass = false;
  std::string details;
  double ms = 0;
};

struct VerificationCase {
  std::string id;
  std::string title;
  std::function<CaseResult(const VerifyOptions&)> run;
};

// The registered checks, in reporting order. The first twelve form the
// release gate; later entries are extra selectable sweeps.
const std::vector<VerificationCase>& verification_cases();

// Runs every case whose id starts with the selector (empty = all), in a
// worker pool; results come back in registration order. Throws
// std::invalid_argument if the selector matches nothing.
std::vector<std::pair<const VerificationCase*, CaseResult>> run_verification(
    const std::string& selector, const VerifyOptions& opts, bool parallel = true);

}  // namespace hk

#endif
