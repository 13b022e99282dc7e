#ifndef AVCURVES_VERIFY_HPP_
#define AVCURVES_VERIFY_HPP_

#include <string>
#include <vector>

namespace avc {

// Built-in regression fixtures: every published value the library models
// (fixed-point tables, census counts, decomposition chains, partition
// registries, elliptic cover reports) recomputed and compared against its
// expected value.  Powers the `verify-paper` command.

struct FixtureResult {
  std::string id;      // stable descriptive identifier
  bool passed = false;
  std::string detail;  // empty on success; expected/actual mismatches on failure
};

// Runs the complete registry in a deterministic order.
std::vector<FixtureResult> run_fixtures();

bool all_passed(const std::vector<FixtureResult>& results);

}  // namespace avc

#endif  // AVCURVES_VERIFY_HPP_
