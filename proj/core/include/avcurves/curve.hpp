#ifndef AVCURVES_CURVE_HPP_
#define AVCURVES_CURVE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avcurves/theta.hpp"

namespace avc {

// The curve C: preimage of a smooth genus-2 member H of the quotient
// linear system under A -> A/X, for an order-d subgroup X of K(L).
// C has genus d+1 and automorphisms [-1] and t_x for x in X; this module
// classifies the fixed points of the involutions [-1] o t_x.

class CoverCurve {
 public:
  CoverCurve(PolarizationContext normalized, FiniteSubgroup X);

  const PolarizationContext& ctx() const { return ctx_; }
  const FiniteSubgroup& X() const { return X_; }
  const QuotientModel& quotient() const { return quotient_; }
  std::int64_t d() const { return ctx_.d(); }
  std::int64_t genus() const { return ctx_.d() + 1; }

 private:
  PolarizationContext ctx_;
  FiniteSubgroup X_;
  QuotientModel quotient_;
};

// Validates that the generators span an order-d subgroup of K(L), then
// normalizes the decomposition and builds the curve.  Generators use model
// coordinates; the (a, b)-integers-mod-d convention is handled by the CLI.
CoverCurve make_cover_curve(std::int64_t d,
                            const std::vector<TorsionPoint>& X_gens);
// Same, starting from an existing context (the subgroup must lie in its
// kernel).
CoverCurve make_cover_curve(const PolarizationContext& ctx,
                            const FiniteSubgroup& X);

// Which classification clause produced a fixed-point count.
enum class FixBranch {
  odd_degree,         // d odd: always 6
  no_kernel_halving,  // x has no halving inside K(L): count 8
  even_parity,        // descended translate even: count 4
  odd_parity,         // descended translate odd: count 12
};

std::string to_string(FixBranch b);

struct FixReport {
  TorsionPoint x;
  std::int64_t count = 0;
  FixBranch branch = FixBranch::odd_degree;
  StsStatus sts = StsStatus::has_sts;   // of the translated bundle upstairs
  std::optional<Parity> parity;         // of the descended bundle, when sts
};

// #Fix_C([-1] o t_x) for x in X.  Evaluated through the translated
// line-bundle profile: the count is the fix_minus column of the eigensystem
// table at the translate's sts status and descended parity.  All halvings
// of x in K(L) must agree on parity; disagreement is an internal invariant
// violation.
FixReport fix_count(const CoverCurve& curve, const TorsionPoint& x);

// Genus of the quotient of a genus-g curve by an involution with r fixed
// points: (2g + 2 - r) / 4.  Rejects inconsistent ramification rather than
// rounding.
std::int64_t involution_quotient_genus(std::int64_t g, std::int64_t r);

// One row of the smooth-hyperelliptic-members census.
struct CensusRow {
  std::int64_t d = 0;
  std::int64_t count = 0;
  std::vector<std::string> derivation;
  bool external = false;  // realized by curves outside this construction
};

// The counts 1, 6, 9, 4 for d = 1..4, with the derivation recomputed (not
// hard-coded): hyperelliptic members correspond to involutions with 2d+4
// fixed points, counted over subgroup choices and kernel translates.
// d outside {1,2,3,4} is a domain error here; census_row covers all d.
CensusRow hyperelliptic_census(std::int64_t d);

// Census row for any d >= 1; zero beyond d = 4 (Bryan, Table 1).
CensusRow census_row(std::int64_t d);

}  // namespace avc

#endif  // AVCURVES_CURVE_HPP_
