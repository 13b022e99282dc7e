#ifndef AVCURVES_ERRORS_HPP_
#define AVCURVES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace avc {

// Bad input reachable from the public API / CLI (exit code 1).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency violation: a mathematical fact the engine relies on
// failed to hold at runtime (exit code 3).  Never a user error.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw invariant_error(what);
}

}  // namespace avc

#endif  // AVCURVES_ERRORS_HPP_
