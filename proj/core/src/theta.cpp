#include "avcurves/theta.hpp"

#include <fmt/format.h>

namespace avc {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(StsStatus s) {
  return s == StsStatus::has_sts ? "sts" : "no-sts";
}

LinearSystemProfile profile_lookup(std::int64_t d, StsStatus sts,
                                   Parity parity) {
  require(d >= 1, "eigensystem profile needs d >= 1");
  if (d % 2 == 1) {
    require(sts == StsStatus::has_sts,
            "a symmetric theta structure always exists for odd d");
    if (parity == Parity::even) return {(d + 1) / 2, (d - 1) / 2, 6, 10};
    return {(d - 1) / 2, (d + 1) / 2, 10, 6};
  }
  if (sts == StsStatus::no_sts) return {d / 2, d / 2, 8, 8};
  if (parity == Parity::even) return {d / 2 + 1, d / 2 - 1, 4, 12};
  return {d / 2 - 1, d / 2 + 1, 12, 4};
}

bool symmetric_after_translate(const PolarizationContext& ctx,
                               const TorsionPoint& y) {
  return ctx.kernel().contains(2 * y);
}

StsStatus sts_after_translate(const PolarizationContext& ctx,
                              const TorsionPoint& y) {
  require(symmetric_after_translate(ctx, y),
          "translate is not symmetric: 2y lies outside K(L)");
  // y in A[2] + K(L) iff 2y is a double of a kernel point.
  FiniteSubgroup doubled = span({2 * ctx.k1(), 2 * ctx.k2()});
  return doubled.contains(2 * y) ? StsStatus::has_sts : StsStatus::no_sts;
}

Parity translated_M_parity(const QuotientModel& q, const TorsionPoint& y) {
  require(q.base().kernel().contains(y), "halving must lie in K(L)");
  require(q.X().contains(2 * y), "halving must double into the subgroup");
  TorsionPoint z = q.project(-y);
  if (z.is_zero()) return Parity::even;
  if (q.w1() && z == *q.w1()) return Parity::even;
  if (q.w2() && z == *q.w2()) return Parity::even;
  if (q.w1() && q.w2() && z == q.project(*q.w1() + *q.w2()))
    return Parity::odd;
  throw invariant_error(fmt::format(
      "descended-bundle parity: pi(-y) = {} escaped the span of w1, w2",
      to_string(z)));
}

}  // namespace avc
