#ifndef AVCURVES_THETA_HPP_
#define AVCURVES_THETA_HPP_

#include <cstdint>
#include <string>

#include "avcurves/polarization.hpp"

namespace avc {

// Parity and symmetry machinery for translated line bundles: eigensystem
// profiles of symmetric linear systems, symmetry / symmetric-theta-structure
// tests after translation, and the parity of the descended bundle that
// controls the eigenvalue of a translated curve class under [-1]*.

enum class Parity { even, odd };
enum class StsStatus { has_sts, no_sts };

std::string to_string(Parity p);
std::string to_string(StsStatus s);

// Eigenvalue of the translated curve class under [-1]*: +1 for an even
// descended bundle, -1 for an odd one.
inline int eigenvalue_of(Parity p) { return p == Parity::even ? +1 : -1; }

// Dimensions of the (+/-)-eigensystems of h^0(A, L) and the sizes of the
// corresponding halves of the 16-point 2-torsion (fix_minus = #A[2]^- =
// #Fix of [-1] on curves of the + system, and vice versa).
struct LinearSystemProfile {
  std::int64_t h_plus = 0;
  std::int64_t h_minus = 0;
  std::int64_t fix_minus = 0;
  std::int64_t fix_plus = 0;

  friend bool operator==(const LinearSystemProfile&,
                         const LinearSystemProfile&) = default;
};

// The exact eigensystem table.  For d odd a symmetric theta structure always
// exists; requesting the no-sts column there is a domain error.
LinearSystemProfile profile_lookup(std::int64_t d, StsStatus sts, Parity parity);

// True iff the translate of L by y is again symmetric: 2y in K(L).
bool symmetric_after_translate(const PolarizationContext& ctx,
                               const TorsionPoint& y);

// Whether the symmetric translate carries a symmetric theta structure:
// has_sts iff y in A[2] + K(L).  Requires symmetric_after_translate(y).
StsStatus sts_after_translate(const PolarizationContext& ctx,
                              const TorsionPoint& y);

// Parity of the descended translated bundle on A/X for a halving y of a
// subgroup element (y in K(L), 2y in X): even iff pi(-y) lies in
// {0, w1, w2}, odd iff pi(-y) = w1 + w2.  Any other value is impossible and
// raises an internal invariant violation.
Parity translated_M_parity(const QuotientModel& q, const TorsionPoint& y);

}  // namespace avc

#endif  // AVCURVES_THETA_HPP_
