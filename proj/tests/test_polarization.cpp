#include "avcurves/polarization.hpp"

#include <set>

#include "doctest.h"

using namespace avc;

namespace {

TorsionPoint ptd(std::int64_t a, std::int64_t b, std::int64_t d) {
  return {Rational01(a, d), Rational01(b, d)};
}

std::vector<std::int64_t> divisors(std::int64_t d) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= d; ++n)
    if (d % n == 0) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("pairing: examples and exactness") {
  PolarizationContext c2(2);
  CHECK(commutator_pairing(c2, ptd(1, 0, 2), ptd(0, 1, 2)).exponent == 1);

  PolarizationContext c4(4);
  auto v = commutator_pairing(c4, ptd(2, 0, 4), ptd(0, 2, 4));
  CHECK(v.exponent == 0);  // 2*2 = 4 = 0 mod 4: the Klein group is isotropic
  CHECK(v.is_trivial());
  CHECK(commutator_pairing(c4, c4.k1(), c4.k2()).is_primitive());

  CHECK_THROWS_AS(commutator_pairing(c2, ptd(1, 0, 3), ptd(0, 1, 2)),
                  domain_error);
}

TEST_CASE("pairing: alternating, antisymmetric, bilinear") {
  for (std::int64_t d : {2, 3, 4, 6}) {
    PolarizationContext ctx(d);
    const auto& K = ctx.kernel().elements();
    for (const auto& p : K) {
      CHECK(commutator_pairing(ctx, p, p).is_trivial());
      for (const auto& q : K) {
        auto pq = commutator_pairing(ctx, p, q).exponent;
        auto qp = commutator_pairing(ctx, q, p).exponent;
        CHECK((pq + qp) % d == 0);
        for (const auto& r : K) {
          auto pr = commutator_pairing(ctx, p, r).exponent;
          auto sum = commutator_pairing(ctx, p + q, r).exponent;
          auto qr = commutator_pairing(ctx, q, r).exponent;
          CHECK(sum == (pr + qr) % d);
        }
      }
    }
  }
}

TEST_CASE("isotropy: examples") {
  PolarizationContext c4(4);
  CHECK(is_isotropic(c4, span({ptd(2, 0, 4), ptd(0, 2, 4)})));
  CHECK(is_isotropic(c4, span({ptd(1, 1, 4)})));
  CHECK(!is_isotropic(c4, span({ptd(1, 0, 4), ptd(0, 2, 4)})));  // order 8

  // cyclic subgroups are always isotropic (alternating form)
  for (std::int64_t d : {2, 3, 4, 6, 8}) {
    PolarizationContext ctx(d);
    for (const auto& p : ctx.kernel().elements())
      CHECK(is_isotropic(ctx, span({p})));
  }

  CHECK_THROWS_AS(is_isotropic(c4, span({ptd(1, 0, 3)})), domain_error);
}

TEST_CASE("every subgroup of order dividing d is isotropic") {
  for (std::int64_t d = 1; d <= 12; ++d) {
    PolarizationContext ctx(d);
    for (std::int64_t n : divisors(d))
      for (const auto& X : subgroups_of_order(ctx.kernel(), n))
        CHECK(is_isotropic(ctx, X));
  }
}

TEST_CASE("normalize_decomposition: pinned example") {
  PolarizationContext c4(4);
  auto X = span({ptd(1, 1, 4)});
  auto n = normalize_decomposition(c4, X);
  CHECK(n.k1() == ptd(1, 1, 4));
  CHECK(n.k2() == ptd(0, 1, 4));
  CHECK(span({n.k1()}) == X);
}

TEST_CASE("normalize_decomposition: compatible bases stay put") {
  PolarizationContext c4(4);
  auto klein = span({ptd(2, 0, 4), ptd(0, 2, 4)});
  auto n4 = normalize_decomposition(c4, klein);
  CHECK(n4.k1() == c4.k1());
  CHECK(n4.k2() == c4.k2());

  PolarizationContext c9(9);
  auto x33 = span({ptd(3, 0, 9), ptd(0, 3, 9)});
  auto n9 = normalize_decomposition(c9, x33);
  CHECK(n9.k1() == c9.k1());
  CHECK(n9.k2() == c9.k2());
}

TEST_CASE("normalize_decomposition: exhaustive success for d <= 12") {
  for (std::int64_t d = 1; d <= 12; ++d) {
    PolarizationContext ctx(d);
    for (std::int64_t n : divisors(d)) {
      for (const auto& X : subgroups_of_order(ctx.kernel(), n)) {
        auto norm = normalize_decomposition(ctx, X);
        auto [d1, d2] = X.invariant_factors();
        CHECK(commutator_pairing(norm, norm.k1(), norm.k2()).is_primitive());
        CHECK(norm.kernel() == ctx.kernel());
        CHECK(span({(d / d1) * norm.k1(), (d / d2) * norm.k2()}) == X);
      }
    }
  }
}

TEST_CASE("normalize_decomposition rejects bad subgroups") {
  PolarizationContext c4(4);
  CHECK_THROWS_AS(
      normalize_decomposition(c4, span({ptd(1, 0, 4), ptd(0, 2, 4)})),
      domain_error);  // order 8 does not divide 4
  CHECK_THROWS_AS(normalize_decomposition(c4, span({ptd(1, 0, 3)})),
                  domain_error);  // outside K(L)
}

TEST_CASE("pushforward_type") {
  PolarizationContext c4(4);
  CHECK(pushforward_type(c4, span({ptd(1, 1, 4)})) ==
        std::pair<std::int64_t, std::int64_t>{1, 1});
  PolarizationContext c6(6);
  CHECK(pushforward_type(c6, span({ptd(2, 0, 6)})) ==
        std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(pushforward_type(c6, span({TorsionPoint{}})) ==
        std::pair<std::int64_t, std::int64_t>{1, 6});

  CHECK_THROWS_AS(pushforward_type(c4, span({ptd(1, 0, 4), ptd(0, 2, 4)})),
                  domain_error);

  // principal exactly at full order
  for (std::int64_t d : {2, 3, 4, 6}) {
    PolarizationContext ctx(d);
    for (std::int64_t n : divisors(d))
      for (const auto& X : subgroups_of_order(ctx.kernel(), n))
        CHECK((pushforward_type(ctx, X).second == 1) == (n == d));
  }
}

TEST_CASE("quotient model: w points") {
  PolarizationContext c4(4);

  auto klein = span({ptd(2, 0, 4), ptd(0, 2, 4)});
  auto qk = build_quotient(normalize_decomposition(c4, klein), klein);
  REQUIRE(qk.w1().has_value());
  REQUIRE(qk.w2().has_value());
  CHECK(qk.order_in_quotient(c4.k1()) == 2);
  CHECK(*qk.w1() == qk.project(c4.k1()));
  CHECK(*qk.w2() == qk.project(c4.k2()));

  auto cyc = span({ptd(1, 0, 4)});
  auto qc = build_quotient(normalize_decomposition(c4, cyc), cyc);
  CHECK(!qc.w1().has_value());  // pi(k1) = 0
  CHECK(qc.order_in_quotient(c4.k2()) == 4);
  REQUIRE(qc.w2().has_value());
  CHECK(*qc.w2() == qc.project(2 * c4.k2()));

  for (const auto& x : klein.elements()) CHECK(qk.project(x).is_zero());
}

TEST_CASE("quotient model: projection is a homomorphism onto K(L)/X") {
  for (std::int64_t d : {2, 3, 4, 6}) {
    PolarizationContext ctx(d);
    for (std::int64_t n : divisors(d)) {
      for (const auto& X : subgroups_of_order(ctx.kernel(), n)) {
        auto norm = normalize_decomposition(ctx, X);
        auto q = build_quotient(norm, X);
        std::set<TorsionPoint> image;
        for (const auto& p : ctx.kernel().elements()) {
          image.insert(q.project(p));
          for (const auto& r : ctx.kernel().elements())
            CHECK(q.project(p + r) == q.project(q.project(p) + q.project(r)));
        }
        CHECK((std::int64_t)image.size() == d * d / n);
      }
    }
  }
}
