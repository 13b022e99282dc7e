#include "avcurves/theta.hpp"

#include <array>
#include <optional>
#include <set>

#include "doctest.h"

using namespace avc;

namespace {

TorsionPoint ptd(std::int64_t a, std::int64_t b, std::int64_t d) {
  return {Rational01(a, d), Rational01(b, d)};
}

// Split quadratic form on F_2^4 refining the symplectic form: with
// coordinates (a1, a2, b1, b2), q = a1 b1 + a2 b2.  The even bundles are
// its 10 zeros, the odd ones its 6 nonzeros.
int split_form(const std::array<int, 4>& v) {
  return (v[0] * v[2] + v[1] * v[3]) % 2;
}

}  // namespace

TEST_CASE("profile table: pinned rows") {
  CHECK(profile_lookup(3, StsStatus::has_sts, Parity::even) ==
        LinearSystemProfile{2, 1, 6, 10});
  CHECK(profile_lookup(3, StsStatus::has_sts, Parity::odd) ==
        LinearSystemProfile{1, 2, 10, 6});
  CHECK(profile_lookup(4, StsStatus::has_sts, Parity::even) ==
        LinearSystemProfile{3, 1, 4, 12});
  CHECK(profile_lookup(4, StsStatus::has_sts, Parity::odd) ==
        LinearSystemProfile{1, 3, 12, 4});
  CHECK(profile_lookup(4, StsStatus::no_sts, Parity::even) ==
        LinearSystemProfile{2, 2, 8, 8});
  CHECK_THROWS_AS(profile_lookup(3, StsStatus::no_sts, Parity::even),
                  domain_error);
}

TEST_CASE("profile table: row invariants") {
  for (std::int64_t d = 1; d <= 16; ++d) {
    for (auto parity : {Parity::even, Parity::odd}) {
      std::vector<StsStatus> cols = {StsStatus::has_sts};
      if (d % 2 == 0) cols.push_back(StsStatus::no_sts);
      for (auto sts : cols) {
        auto p = profile_lookup(d, sts, parity);
        CHECK(p.h_plus + p.h_minus == d);
        CHECK(p.fix_minus + p.fix_plus == 16);
        CHECK(p.h_plus >= 0);
        CHECK(p.h_minus >= 0);
      }
    }
  }
}

TEST_CASE("symmetric_after_translate") {
  PolarizationContext c2(2);
  for (const auto& y : c2.kernel().elements())
    CHECK(symmetric_after_translate(c2, y));
  CHECK(symmetric_after_translate(c2, {Rational01(1, 4), Rational01(0, 1)}));
  CHECK(!symmetric_after_translate(c2, {Rational01(1, 8), Rational01(0, 1)}));
  CHECK(!symmetric_after_translate(c2, {Rational01(1, 3), Rational01(0, 1)}));
}

TEST_CASE("sts_after_translate: pinned examples") {
  PolarizationContext c2(2);
  CHECK(sts_after_translate(c2, ptd(1, 0, 2)) == StsStatus::has_sts);
  CHECK(sts_after_translate(c2, {Rational01(1, 4), Rational01(0, 1)}) ==
        StsStatus::no_sts);
  PolarizationContext c4(4);
  CHECK(sts_after_translate(c4, ptd(1, 1, 4)) == StsStatus::has_sts);
  CHECK_THROWS_AS(
      sts_after_translate(c2, {Rational01(1, 8), Rational01(0, 1)}),
      domain_error);
}

TEST_CASE("sts translates match the coset structure of A[2] + K(L)") {
  for (std::int64_t d : {2, 3, 4, 6}) {
    PolarizationContext ctx(d);
    // All symmetric translates: y with 2y in K(L), i.e. the (1/2d)-lattice.
    auto half = span({{Rational01(1, 2 * d), Rational01(0, 1)},
                      {Rational01(0, 1), Rational01(1, 2 * d)}});
    std::int64_t sts_count = 0;
    for (const auto& y : half.elements()) {
      CHECK(symmetric_after_translate(ctx, y));
      if (sts_after_translate(ctx, y) == StsStatus::has_sts) ++sts_count;
    }
    // d odd: A[2] + K(L) swallows every symmetric translate; d even: a
    // quarter of them (index of 2K(L) in K(L) is 4).
    CHECK(sts_count == (d % 2 == 1 ? 4 * d * d : d * d));
  }
}

TEST_CASE("parity: pinned examples") {
  PolarizationContext c4(4);

  auto klein = span({ptd(2, 0, 4), ptd(0, 2, 4)});
  auto qk = build_quotient(normalize_decomposition(c4, klein), klein);
  CHECK(translated_M_parity(qk, ptd(1, 1, 4)) == Parity::odd);
  CHECK(eigenvalue_of(Parity::odd) == -1);

  auto cyc = span({ptd(1, 0, 4)});
  auto qc = build_quotient(normalize_decomposition(c4, cyc), cyc);
  CHECK(translated_M_parity(qc, ptd(1, 2, 4)) == Parity::even);

  // y in X: parity even, eigenvalue +1 (covers y = 0, the class of C itself)
  for (const auto& y : klein.elements())
    CHECK(translated_M_parity(qk, y) == Parity::even);
  CHECK(eigenvalue_of(translated_M_parity(qk, TorsionPoint{})) == +1);

  // 2y outside the subgroup / y outside K(L)
  CHECK_THROWS_AS(translated_M_parity(qc, ptd(0, 1, 4)), domain_error);
  CHECK_THROWS_AS(
      translated_M_parity(qk, {Rational01(1, 8), Rational01(0, 1)}),
      domain_error);
}

TEST_CASE("parity: halving independence, exhaustive for d <= 8") {
  for (std::int64_t d = 2; d <= 8; ++d) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto norm = normalize_decomposition(ctx, X);
      auto q = build_quotient(norm, X);
      for (const auto& x : X.elements()) {
        std::optional<Parity> first;
        for (const auto& y : halvings_in(x, ctx.kernel())) {
          auto p = translated_M_parity(q, y);
          if (!first) first = p;
          CHECK(*first == p);
        }
      }
    }
  }
}

TEST_CASE("split quadratic form oracle on F_2^4") {
  // The form has 10 zeros and 6 nonzeros: the even/odd bundle counts.
  int zeros = 0;
  for (int m = 0; m < 16; ++m) {
    std::array<int, 4> v = {m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
    if (split_form(v) == 0) ++zeros;
  }
  CHECK(zeros == 10);

  // Embedding w1 -> a1-axis, w2 -> b1-axis identifies the algorithm's
  // four-point classification with the form on the subspace <w1, w2>.
  auto embed = [](bool has_w1, bool has_w2) {
    std::array<int, 4> v = {0, 0, 0, 0};
    if (has_w1) v[0] = 1;
    if (has_w2) v[2] = 1;
    return v;
  };
  CHECK(split_form(embed(false, false)) == 0);  // 0 -> even
  CHECK(split_form(embed(true, false)) == 0);   // w1 -> even
  CHECK(split_form(embed(false, true)) == 0);   // w2 -> even
  CHECK(split_form(embed(true, true)) == 1);    // w1 + w2 -> odd

  // Cross-check the parity algorithm against the form, instance by
  // instance, over every curve-scale quotient for d <= 8.
  for (std::int64_t d = 2; d <= 8; ++d) {
    PolarizationContext ctx(d);
    for (const auto& X : subgroups_of_order(ctx.kernel(), d)) {
      auto norm = normalize_decomposition(ctx, X);
      auto q = build_quotient(norm, X);
      for (const auto& x : X.elements()) {
        for (const auto& y : halvings_in(x, ctx.kernel())) {
          TorsionPoint z = q.project(-y);
          bool has_w1 = q.w1() && z == *q.w1();
          bool has_w2 = q.w2() && z == *q.w2();
          bool is_sum = q.w1() && q.w2() && z == q.project(*q.w1() + *q.w2());
          REQUIRE((z.is_zero() || has_w1 || has_w2 || is_sum));
          auto expected =
              split_form(embed(is_sum || has_w1, is_sum || has_w2)) == 0
                  ? Parity::even
                  : Parity::odd;
          CHECK(translated_M_parity(q, y) == expected);
        }
      }
    }
  }
}
