#include "avcurves/curve.hpp"

#include <map>

#include "doctest.h"

using namespace avc;

namespace {

TorsionPoint ptd(std::int64_t a, std::int64_t b, std::int64_t d) {
  return {Rational01(a, d), Rational01(b, d)};
}

int v2(std::int64_t n) {
  int v = 0;
  while (n % 2 == 0) { n /= 2; ++v; }
  return v;
}

}  // namespace

TEST_CASE("make_cover_curve: shapes and validation") {
  auto c3 = make_cover_curve(3, {ptd(1, 0, 3)});
  CHECK(c3.genus() == 4);
  auto c4 = make_cover_curve(4, {ptd(2, 0, 4), ptd(0, 2, 4)});
  CHECK(c4.genus() == 5);
  CHECK_THROWS_AS(make_cover_curve(4, {ptd(1, 0, 4), ptd(0, 2, 4)}),
                  domain_error);  // order 8
  CHECK_THROWS_AS(make_cover_curve(4, {ptd(1, 0, 4), ptd(0, 1, 4)}),
                  domain_error);  // order 16
  CHECK_THROWS_AS(make_cover_curve(2, {ptd(1, 0, 4)}), domain_error);
}

TEST_CASE("fix_count: pinned tables") {
  auto c1 = make_cover_curve(1, {TorsionPoint{}});
  CHECK(fix_count(c1, TorsionPoint{}).count == 6);

  auto c2 = make_cover_curve(2, {ptd(1, 0, 2)});
  auto r0 = fix_count(c2, TorsionPoint{});
  CHECK(r0.count == 4);
  CHECK(r0.branch == FixBranch::even_parity);
  auto rx = fix_count(c2, ptd(1, 0, 2));
  CHECK(rx.count == 8);
  CHECK(rx.branch == FixBranch::no_kernel_halving);
  CHECK(rx.sts == StsStatus::no_sts);

  auto c3 = make_cover_curve(3, {ptd(1, 0, 3)});
  for (const auto& x : c3.X().elements()) {
    auto r = fix_count(c3, x);
    CHECK(r.count == 6);
    CHECK(r.branch == FixBranch::odd_degree);
  }

  auto klein = make_cover_curve(4, {ptd(2, 0, 4), ptd(0, 2, 4)});
  std::map<TorsionPoint, std::int64_t> expect = {
      {TorsionPoint{}, 4},
      {ptd(2, 0, 4), 4},
      {ptd(0, 2, 4), 4},
      {ptd(2, 2, 4), 12},
  };
  for (const auto& [x, want] : expect) CHECK(fix_count(klein, x).count == want);
  CHECK(fix_count(klein, ptd(2, 2, 4)).branch == FixBranch::odd_parity);

  auto cyc4 = make_cover_curve(4, {ptd(1, 0, 4)});
  CHECK(fix_count(cyc4, ptd(1, 0, 4)).count == 8);
  CHECK(fix_count(cyc4, ptd(2, 0, 4)).count == 4);
  CHECK(fix_count(cyc4, ptd(3, 0, 4)).count == 8);
  CHECK(fix_count(cyc4, TorsionPoint{}).count == 4);

  CHECK_THROWS_AS(fix_count(cyc4, ptd(0, 1, 4)), domain_error);
}

TEST_CASE("fix_count: all odd degrees give 6") {
  for (std::int64_t d : {1, 3, 5, 7, 9}) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto curve = make_cover_curve(ctx, X);
      for (const auto& x : X.elements()) {
        auto r = fix_count(curve, x);
        CHECK(r.count == 6);
        CHECK(r.branch == FixBranch::odd_degree);
      }
    }
  }
}

TEST_CASE("fix_count is even in x") {
  for (std::int64_t d = 1; d <= 8; ++d) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto curve = make_cover_curve(ctx, X);
      for (const auto& x : X.elements())
        CHECK(fix_count(curve, x).count == fix_count(curve, -x).count);
    }
  }
}

TEST_CASE("fix_count agrees with the structural classification, d <= 8") {
  for (std::int64_t d : {2, 4, 6, 8}) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto curve = make_cover_curve(ctx, X);
      auto [d1, d2] = X.invariant_factors();
      bool sylow2_cyclic = v2(d2) == 0;
      bool twelve_attained = false;
      for (const auto& x : X.elements()) {
        auto count = fix_count(curve, x).count;
        if (sylow2_cyclic) {
          // 8 iff the 2-primary part of x generates the Sylow-2 subgroup
          bool generates = v2(point_order(x)) == v2(d1);
          CHECK(count == (generates ? 8 : 4));
        } else {
          CHECK((count == 4 || count == 12));
          if (count == 12) twelve_attained = true;
        }
      }
      if (!sylow2_cyclic) CHECK(twelve_attained);
    }
  }
}

TEST_CASE("hyperelliptic involution exists iff some count hits 2d+4") {
  for (std::int64_t d = 1; d <= 8; ++d) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto curve = make_cover_curve(ctx, X);
      bool hit = false;
      for (const auto& x : X.elements())
        if (fix_count(curve, x).count == 2 * d + 4) hit = true;
      bool expected = d == 1 || d == 2 ||
                      (d == 4 && X.invariant_factors().second == 2);
      CHECK(hit == expected);
    }
  }
}

TEST_CASE("involution_quotient_genus") {
  CHECK(involution_quotient_genus(4, 6) == 1);
  CHECK(involution_quotient_genus(5, 12) == 0);
  CHECK(involution_quotient_genus(3, 4) == 1);
  CHECK(involution_quotient_genus(2, 6) == 0);
  for (std::int64_t d : {3, 5, 7, 9})
    CHECK(involution_quotient_genus(d + 1, 6) == (d - 1) / 2);
  CHECK_THROWS_AS(involution_quotient_genus(4, 5), domain_error);
  CHECK_THROWS_AS(involution_quotient_genus(1, 12), domain_error);
  CHECK_THROWS_AS(involution_quotient_genus(-1, 0), domain_error);
}

TEST_CASE("census: 1, 6, 9, 4") {
  CHECK(hyperelliptic_census(1).count == 1);
  CHECK(hyperelliptic_census(2).count == 6);
  CHECK(hyperelliptic_census(3).count == 9);
  CHECK(hyperelliptic_census(4).count == 4);
  for (std::int64_t d = 1; d <= 4; ++d) {
    auto row = hyperelliptic_census(d);
    CHECK(!row.derivation.empty());
    CHECK(row.external == (d == 3));
  }
  CHECK_THROWS_AS(hyperelliptic_census(5), domain_error);
  CHECK_THROWS_AS(hyperelliptic_census(0), domain_error);

  for (std::int64_t d = 5; d <= 12; ++d) {
    auto row = census_row(d);
    CHECK(row.count == 0);
    CHECK(!row.derivation.empty());
  }
  CHECK(census_row(2).count == 6);
}
