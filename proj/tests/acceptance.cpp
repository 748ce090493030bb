// Acceptance suite: runs the twelve release criteria at their default
// parameters and prints one line per criterion. Exit code is the number
// of failing criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "hk/verify.hpp"

int main() {
  const std::vector<std::string> gate = {
      "catalan",     "strictness",  "idempotents", "jtrivial", "classification",
      "cross-engine", "chain-monoid", "reps",       "regular",  "words",
      "structure",   "modules"};
  hk::VerifyOptions opts;
  int failed = 0;
  int index = 0;
  for (const std::string& id : gate) {
    auto results = hk::run_verification(id, opts, false);
    for (const auto& [vc, res] : results) {
      if (vc->id != id) continue;
      ++index;
      std::printf("[%2d/12] %-16s %-4s %9.0f ms  %s\n", index, vc->id.c_str(),
                  res.pass ? "PASS" : "FAIL", res.ms, vc->title.c_str());
      if (!res.pass) {
        std::printf("        %s\n", res.details.c_str());
        ++failed;
      }
    }
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed;
}
