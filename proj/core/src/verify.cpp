#include "avcurves/verify.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "avcurves/curve.hpp"
#include "avcurves/kani_rosen.hpp"

namespace avc {

namespace {

TorsionPoint pt(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                std::int64_t d2) {
  return TorsionPoint{Rational01(n1, d1), Rational01(n2, d2)};
}

struct Checker {
  std::string detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }

  template <typename T, typename U>
  void expect_eq(const T& actual, const U& expected, const std::string& what) {
    if (actual == static_cast<T>(expected)) return;
    expect(false, fmt::format("{}: expected {}, got {}", what, expected,
                              actual));
  }
};

FixtureResult run_one(const std::string& id,
                      const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, fmt::format("threw: {}", e.what()));
  }
  return FixtureResult{id, c.ok, c.detail};
}

std::int64_t mult_of(const IsogenyExpression& e, const std::string& fid) {
  for (const auto& [f, m] : e) {
    if (f.id == fid) return m;
  }
  return 0;
}

std::vector<FiniteSubgroup> shapes_of(std::int64_t d) {
  const FiniteSubgroup kernel =
      span({pt(1, d, 0, 1), pt(0, 1, 1, d)});
  return subgroups_of_order(kernel, d);
}

void fixture_fix_counts_odd(Checker& c) {
  for (std::int64_t d : {1, 3, 5, 7, 9}) {
    for (const FiniteSubgroup& X : shapes_of(d)) {
      const CoverCurve curve = make_cover_curve(d, X.generators());
      for (const TorsionPoint& x : curve.X().elements()) {
        c.expect_eq(fix_count(curve, x).count, 6,
                    fmt::format("d={} x={}", d, to_string(x)));
      }
    }
  }
}

void fixture_fix_counts_even_tables(Checker& c) {
  // d = 2: count 4 at the origin, 8 at the halving-free translate.
  const CoverCurve c2 = make_cover_curve(2, {pt(1, 2, 0, 1)});
  c.expect_eq(fix_count(c2, pt(0, 1, 0, 1)).count, 4, "d=2 x=0");
  c.expect_eq(fix_count(c2, pt(1, 2, 0, 1)).count, 8, "d=2 x=(1/2,0)");

  // d = 4 cyclic: 4 on 2X, 8 on the halving-free generators.
  const CoverCurve c4 = make_cover_curve(4, {pt(1, 4, 0, 1)});
  const std::map<std::string, std::int64_t> want4 = {
      {"(0,0)", 4}, {"(1/2,0)", 4}, {"(1/4,0)", 8}, {"(3/4,0)", 8}};
  for (const auto& [xs, n] : want4) {
    bool seen = false;
    for (const TorsionPoint& x : c4.X().elements()) {
      if (to_string(x) != xs) continue;
      seen = true;
      c.expect_eq(fix_count(c4, x).count, n,
                  fmt::format("d=4 cyclic x={}", xs));
    }
    c.expect(seen, fmt::format("d=4 cyclic missing element {}", xs));
  }

  // d = 4 Klein: 4 everywhere except 12 at the sum of the two generators.
  const CoverCurve ck = make_cover_curve(4, {pt(1, 2, 0, 1), pt(0, 1, 1, 2)});
  for (const TorsionPoint& x : ck.X().elements()) {
    const std::int64_t want = (x == pt(1, 2, 1, 2)) ? 12 : 4;
    c.expect_eq(fix_count(ck, x).count, want,
                fmt::format("d=4 Klein x={}", to_string(x)));
  }

  // Every even shape d <= 8: counts follow the halving/parity trichotomy
  // and the total over X is 6|X| (the quotient C/G is rational).
  for (std::int64_t d : {2, 4, 6, 8}) {
    for (const FiniteSubgroup& X : shapes_of(d)) {
      const CoverCurve curve = make_cover_curve(d, X.generators());
      std::int64_t total = 0;
      for (const TorsionPoint& x : curve.X().elements()) {
        const FixReport r = fix_count(curve, x);
        total += r.count;
        c.expect(r.count == 4 || r.count == 8 || r.count == 12,
                 fmt::format("d={} x={}: count {} outside {{4,8,12}}", d,
                             to_string(x), r.count));
      }
      c.expect_eq(total, 6 * d, fmt::format("d={} total over X", d));
    }
  }
}

void fixture_census(Checker& c) {
  const std::vector<std::int64_t> want = {1, 6, 9, 4};
  for (std::int64_t d = 1; d <= 4; ++d) {
    c.expect_eq(census_row(d).count, want[static_cast<std::size_t>(d - 1)],
                fmt::format("census d={}", d));
  }
  for (std::int64_t d = 5; d <= 12; ++d) {
    c.expect_eq(census_row(d).count, 0, fmt::format("census d={}", d));
  }
  c.expect(census_row(3).external, "census d=3 external flag");
}

void fixture_decomposition_chains(Checker& c) {
  // Odd degrees: J(C) ~ A x M^2 with dim M = (d-1)/2.
  for (std::int64_t d : {3, 5, 7, 9}) {
    const Decomposition dec = decompose(make_cover_curve(d, {pt(1, d, 0, 1)}));
    c.expect_eq(to_string(dec.expression),
                std::string("A x J(C/<-1>)^2"),
                fmt::format("odd d={} expression", d));
    c.expect_eq(dimension_of(dec.expression), d + 1,
                fmt::format("odd d={} dimension", d));
  }

  // Even degrees 2, 4, 6: the two- and three-factor chains.
  const Decomposition d2 = decompose(make_cover_curve(2, {pt(1, 2, 0, 1)}));
  c.expect_eq(to_string(d2.expression), std::string("A x J(C/<-1>)"),
              "d=2 expression");
  const Decomposition d4 = decompose(make_cover_curve(4, {pt(1, 4, 0, 1)}));
  c.expect_eq(to_string(d4.expression),
              std::string("A x J(C/<-1>) x J(C/<-1 t(1/4,0)>)"),
              "d=4 cyclic expression");
  const Decomposition d6 = decompose(make_cover_curve(6, {pt(1, 6, 0, 1)}));
  c.expect_eq(to_string(d6.expression),
              std::string("A x J(C/<-1>) x J(C/<-1 t(1/2,0)>)"),
              "d=6 expression");
  c.expect_eq(mult_of(d6.expression, "J(C/<-1>)"), 1, "d=6 central factor");

  // d = 4 Klein: three elliptic curves.
  const Decomposition dk =
      decompose(make_cover_curve(4, {pt(1, 2, 0, 1), pt(0, 1, 1, 2)}));
  c.expect_eq(to_string(dk.expression),
              std::string("A x J(C/<t(0,1/2), -1>) x J(C/<t(1/2,0), -1>) x "
                          "J(C/<t(1/2,1/2), -1 t(0,1/2)>)"),
              "d=4 Klein expression");
}

void fixture_nine_product(Checker& c) {
  const CoverCurve curve =
      make_cover_curve(9, {pt(1, 3, 0, 1), pt(0, 1, 1, 3)});
  const Decomposition dec = decompose(curve);
  const std::vector<std::string> lines = {
      "J(C/<t(0,1/3), -1>)", "J(C/<t(1/3,0), -1>)", "J(C/<t(1/3,1/3), -1>)",
      "J(C/<t(1/3,2/3), -1>)"};
  c.expect_eq(mult_of(dec.expression, "A"), 1, "nine-product surface factor");
  for (const std::string& id : lines) {
    c.expect_eq(mult_of(dec.expression, id), 2,
                fmt::format("nine-product factor {}", id));
  }
  c.expect_eq(dimension_of(dec.expression), 10, "nine-product dimension");

  // Companion: the central quotient splits into the four elliptic curves.
  bool companion = false;
  for (const auto& [id, expr] : dec.derived) {
    if (id != "J(C/<-1>)") continue;
    companion = true;
    for (const std::string& lid : lines) {
      c.expect_eq(mult_of(expr, lid), 1,
                  fmt::format("companion multiplicity of {}", lid));
    }
  }
  c.expect(companion, "companion rule for J(C/<-1>) missing");

  // The four-line relation balances 48 = 48.
  bool audited = false;
  for (const Relation& rel : dec.relations) {
    if (mult_of(rel.lhs, "A") != 9) continue;
    audited = true;
    c.expect_eq(dimension_of(rel.lhs), 48, "four-line relation lhs dim");
    c.expect_eq(dimension_of(rel.rhs), 48, "four-line relation rhs dim");
  }
  c.expect(audited, "four-line relation missing");
}

void fixture_partition_registry(Checker& c) {
  for (std::int64_t d = 2; d <= 10; ++d) {
    AutGroup G(make_cover_curve(d, {pt(1, d, 0, 1)}));
    const auto parts = find_partitions(G);
    c.expect_eq(parts.size(), std::size_t{1},
                fmt::format("dihedral d={} partition count", d));
    if (!parts.empty()) {
      c.expect(parts[0].parts[0] == G.translation_subgroup(),
               fmt::format("dihedral d={}: first part is X", d));
      c.expect_eq(parts[0].parts.size(), static_cast<std::size_t>(d + 1),
                  fmt::format("dihedral d={} part count", d));
    }
  }
  c.expect_eq(
      find_partitions(span({pt(1, 2, 0, 1), pt(0, 1, 1, 2)})).size(),
      std::size_t{1}, "Klein partition count");
  const auto p33 = find_partitions(span({pt(1, 3, 0, 1), pt(0, 1, 1, 3)}));
  c.expect_eq(p33.size(), std::size_t{1}, "(Z/3)^2 partition count");
  if (!p33.empty()) {
    c.expect_eq(p33[0].size(), std::size_t{4}, "(Z/3)^2 line count");
  }
  for (std::int64_t n = 2; n <= 12; ++n) {
    c.expect(find_partitions(span({pt(1, n, 0, 1)})).empty(),
             fmt::format("cyclic Z/{} admits no partition", n));
  }
}

void fixture_dimension_balance(Checker& c) {
  for (std::int64_t d = 2; d <= 8; ++d) {
    for (const FiniteSubgroup& X : shapes_of(d)) {
      const CoverCurve curve = make_cover_curve(d, X.generators());
      const Decomposition dec = decompose(curve);
      for (const Relation& rel : dec.relations) {
        c.expect_eq(dimension_of(rel.lhs), dimension_of(rel.rhs),
                    fmt::format("d={} relation [{}]", d, rel.provenance));
      }
      c.expect_eq(dimension_of(dec.expression), curve.genus(),
                  fmt::format("d={} expression dimension", d));
    }
  }
}

void fixture_elliptic_covers(Checker& c) {
  const EllipticCoverReport r4 = elliptic_cover_report(4, 2, 2);
  c.expect_eq(r4.intermediate_genus, 3, "(4,2,2) intermediate genus");
  c.expect(r4.degree_d_witness_found, "(4,2,2) witness");
  c.expect_eq(r4.cover_degree, 4, "(4,2,2) cover degree");
  c.expect_eq(r4.prym_dim, 2, "(4,2,2) Prym dimension");

  const EllipticCoverReport r6 = elliptic_cover_report(6, 3, 2);
  c.expect_eq(r6.intermediate_genus, 4, "(6,3,2) intermediate genus");
  c.expect(r6.degree_d_witness_found, "(6,3,2) witness");
  c.expect_eq(r6.cover_degree, 6, "(6,3,2) cover degree");
  c.expect_eq(r6.prym_dim, 3, "(6,3,2) Prym dimension");

  const EllipticCoverReport r8 = elliptic_cover_report(8, 4, 2);
  c.expect_eq(r8.intermediate_genus, 5, "(8,4,2) intermediate genus");
  c.expect(r8.degree_d_witness_found, "(8,4,2) witness");
  c.expect_eq(r8.cover_degree, 8, "(8,4,2) cover degree");
  c.expect_eq(r8.prym_dim, 4, "(8,4,2) Prym dimension");
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  std::vector<FixtureResult> out;
  out.push_back(
      run_one("fix-counts-odd-degrees-all-six", fixture_fix_counts_odd));
  out.push_back(
      run_one("fix-counts-even-degree-tables", fixture_fix_counts_even_tables));
  out.push_back(run_one("census-small-degrees", fixture_census));
  out.push_back(
      run_one("decomposition-chains-d2-to-d9", fixture_decomposition_chains));
  out.push_back(run_one("nine-product-four-elliptics", fixture_nine_product));
  out.push_back(run_one("partition-registry", fixture_partition_registry));
  out.push_back(
      run_one("relation-dimension-balance", fixture_dimension_balance));
  out.push_back(run_one("elliptic-cover-reports", fixture_elliptic_covers));
  return out;
}

bool all_passed(const std::vector<FixtureResult>& results) {
  for (const FixtureResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace avc
