#include "avcurves/curve.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace avc {

CoverCurve::CoverCurve(PolarizationContext normalized, FiniteSubgroup X)
    : ctx_(std::move(normalized)),
      X_(std::move(X)),
      quotient_(build_quotient(ctx_, X_)) {}

CoverCurve make_cover_curve(std::int64_t d,
                            const std::vector<TorsionPoint>& X_gens) {
  require(d >= 1, "polarization type (1,d) needs d >= 1");
  // An empty generator list means the trivial subgroup (the d = 1 case).
  const FiniteSubgroup X =
      X_gens.empty() ? span({TorsionPoint{}}) : span(X_gens);
  return make_cover_curve(PolarizationContext(d), X);
}

CoverCurve make_cover_curve(const PolarizationContext& ctx,
                            const FiniteSubgroup& X) {
  require(X.order() == ctx.d(),
          fmt::format("not a polarizing-degree subgroup: order {} != d = {}",
                      X.order(), ctx.d()));
  require(X.subgroup_of(ctx.kernel()), "subgroup lies outside K(L)");
  // Isotropy (checked inside) holds automatically at order d.
  return CoverCurve(normalize_decomposition(ctx, X), X);
}

std::string to_string(FixBranch b) {
  switch (b) {
    case FixBranch::odd_degree: return "odd-degree";
    case FixBranch::no_kernel_halving: return "no-kernel-halving";
    case FixBranch::even_parity: return "even-parity";
    case FixBranch::odd_parity: return "odd-parity";
  }
  return "?";
}

namespace {

// Some halving of x in the ambient divisible group (coordinates halved);
// used only to evidence the sts status of the translated bundle.
TorsionPoint halve_in_ambient(const TorsionPoint& x) {
  return {Rational01(x.c1.num, 2 * x.c1.den),
          Rational01(x.c2.num, 2 * x.c2.den)};
}

}  // namespace

FixReport fix_count(const CoverCurve& curve, const TorsionPoint& x) {
  require(curve.X().contains(x),
          fmt::format("translation offset {} lies outside the subgroup",
                      to_string(x)));
  const std::int64_t d = curve.d();
  FixReport report;
  report.x = x;
  report.sts = sts_after_translate(curve.ctx(), halve_in_ambient(x));

  auto halvings = halvings_in(x, curve.ctx().kernel());
  if (halvings.empty()) {
    // Translate by any ambient halving of x kills the symmetric theta
    // structure; the eigensystem halves evenly.
    ensure(d % 2 == 0, "kernel halvings cannot vanish for odd d");
    ensure(report.sts == StsStatus::no_sts,
           "missing kernel halving must force a no-sts translate");
    report.branch = FixBranch::no_kernel_halving;
    report.count = profile_lookup(d, StsStatus::no_sts, Parity::even).fix_minus;
    return report;
  }

  ensure(report.sts == StsStatus::has_sts,
         "kernel halving must witness an sts translate");
  std::optional<Parity> parity;
  for (const auto& y : halvings) {
    Parity p = translated_M_parity(curve.quotient(), y);
    if (!parity) parity = p;
    ensure(*parity == p, "halvings disagree on the descended parity");
  }
  report.parity = parity;
  report.count = profile_lookup(d, StsStatus::has_sts, *parity).fix_minus;
  if (d % 2 == 1) {
    report.branch = FixBranch::odd_degree;
    ensure(report.count == 6, "odd degree must yield 6 fixed points");
  } else {
    report.branch = *parity == Parity::even ? FixBranch::even_parity
                                            : FixBranch::odd_parity;
  }
  return report;
}

std::int64_t involution_quotient_genus(std::int64_t g, std::int64_t r) {
  require(g >= 0 && r >= 0, "genus and fixed-point count must be nonnegative");
  std::int64_t num = 2 * g + 2 - r;
  require(num >= 0 && num % 4 == 0,
          fmt::format("inconsistent ramification: genus {} with {} fixed "
                      "points admits no smooth involution quotient", g, r));
  return num / 4;
}

namespace {

// 2d+4 is the fixed-point count of a hyperelliptic involution on a curve
// of genus d+1.
std::int64_t hyperelliptic_fix_target(std::int64_t d) { return 2 * d + 4; }

}  // namespace

CensusRow hyperelliptic_census(std::int64_t d) {
  require(d >= 1 && d <= 4,
          "no smooth hyperelliptic curves counted: the census is nonzero "
          "only for 1 <= d <= 4 (Bryan, Table 1)");
  CensusRow row;
  row.d = d;
  PolarizationContext ctx(d);
  const std::int64_t target = hyperelliptic_fix_target(d);

  if (d == 3) {
    // The construction's counts are all 6 < 10; the census counts the
    // |K(L)| translates of a curve known externally.
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto curve = make_cover_curve(ctx, X);
      for (const auto& x : X.elements())
        ensure(fix_count(curve, x).count == 6,
               "odd-degree covers cannot be hyperelliptic");
    }
    row.count = ctx.kernel().order();
    row.external = true;
    row.derivation.push_back(fmt::format(
        "no involution [-1] o t_x reaches {} fixed points; the {} smooth "
        "hyperelliptic members are the |K(L)| = {} kernel translates of an "
        "externally known curve, not covers from this construction",
        target, row.count, row.count));
    return row;
  }

  // d = 1, 2, 4: count subgroup choices whose cover carries a hyperelliptic
  // involution, times the kernel translates of the resulting member.
  std::int64_t total = 0;
  for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
    auto curve = make_cover_curve(ctx, X);
    bool hyperelliptic = false;
    for (const auto& x : X.elements())
      if (fix_count(curve, x).count == target) hyperelliptic = true;
    if (hyperelliptic) {
      std::int64_t translates = ctx.kernel().order() / X.order();
      total += translates;
      row.derivation.push_back(fmt::format(
          "X = <{}>: an involution [-1] o t_x has {} = 2d+4 fixed points; "
          "counts |K(L)/X| = {} translates",
          [&] {
            std::string s;
            for (const auto& g : X.generators()) {
              if (!s.empty()) s += ", ";
              s += to_string(g);
            }
            return s;
          }(),
          target, translates));
    }
  }
  row.count = total;
  return row;
}

CensusRow census_row(std::int64_t d) {
  require(d >= 1, "census needs d >= 1");
  if (d <= 4) return hyperelliptic_census(d);
  CensusRow row;
  row.d = d;
  row.count = 0;
  row.derivation.push_back(
      "0 (Bryan, Table 1): no smooth hyperelliptic members beyond d = 4");
  return row;
}

}  // namespace avc
