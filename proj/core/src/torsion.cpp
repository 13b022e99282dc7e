#include "avcurves/torsion.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace avc {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Euclidean remainder in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Rational01::Rational01(std::int64_t n, std::int64_t d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  n = mod_floor(n, d);
  std::int64_t g = gcd64(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
  if (num == 0) den = 1;
}

Rational01 operator+(const Rational01& a, const Rational01& b) {
  std::int64_t d = lcm64(a.den, b.den);
  return Rational01(a.num * (d / a.den) + b.num * (d / b.den), d);
}

Rational01 operator-(const Rational01& a) { return Rational01(-a.num, a.den); }

Rational01 operator*(std::int64_t k, const Rational01& a) {
  return Rational01(k * a.num, a.den);
}

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
  return {a.c1 + b.c1, a.c2 + b.c2};
}
TorsionPoint operator-(const TorsionPoint& a) { return {-a.c1, -a.c2}; }
TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b) {
  return a + (-b);
}
TorsionPoint operator*(std::int64_t k, const TorsionPoint& p) {
  return {k * p.c1, k * p.c2};
}

std::string to_string(const Rational01& r) {
  return r.num == 0 ? "0" : fmt::format("{}/{}", r.num, r.den);
}

std::string to_string(const TorsionPoint& p) {
  return fmt::format("({},{})", to_string(p.c1), to_string(p.c2));
}

std::int64_t point_order(const TorsionPoint& p) {
  return lcm64(p.c1.den, p.c2.den);
}

bool FiniteSubgroup::contains(const TorsionPoint& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool FiniteSubgroup::subgroup_of(const FiniteSubgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool operator<(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

namespace {

// Invariant factors (d1, d2), d2 | d1, of the subgroup of (Q/Z)^2 generated
// by points v_i/D: the group is L/(D Z^2) for the lattice L spanned by the
// v_i together with (D,0) and (0,D).  With the Smith normal form of that
// row set equal to diag(s1, s2), s1 | s2, the quotient is
// Z/(D/s1) x Z/(D/s2).  The determinantal-divisor formulas below give s1,
// s2 without explicit row reduction.
std::pair<std::int64_t, std::int64_t> invariant_factors_of(
    const std::vector<TorsionPoint>& gens) {
  std::int64_t D = 1;
  for (const auto& g : gens) D = lcm64(D, point_order(g));
  if (D == 1) return {1, 1};

  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  for (const auto& g : gens) {
    rows.push_back({g.c1.num * (D / g.c1.den), g.c2.num * (D / g.c2.den)});
  }
  rows.push_back({D, 0});
  rows.push_back({0, D});

  std::int64_t s1 = 0;  // gcd of all entries
  for (auto [a, b] : rows) s1 = gcd64(s1, gcd64(a, b));

  std::int64_t g2 = 0;  // gcd of all 2x2 minors
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      std::int64_t m = rows[i].first * rows[j].second - rows[i].second * rows[j].first;
      g2 = gcd64(g2, m < 0 ? -m : m);
    }
  std::int64_t s2 = g2 / s1;
  return {D / s1, D / s2};
}

}  // namespace

FiniteSubgroup span(const std::vector<TorsionPoint>& gens) {
  require(!gens.empty(), "span of an empty generator list");

  // Exhaustive closure from 0 under the generators.
  std::set<TorsionPoint> seen;
  std::vector<TorsionPoint> frontier;
  seen.insert(TorsionPoint{});
  frontier.push_back(TorsionPoint{});
  while (!frontier.empty()) {
    TorsionPoint p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      TorsionPoint q = p + g;
      if (seen.insert(q).second) frontier.push_back(q);
    }
  }

  FiniteSubgroup out;
  out.elements_.assign(seen.begin(), seen.end());
  out.generators_ = gens;
  auto [d1, d2] = invariant_factors_of(gens);
  out.d1_ = d1;
  out.d2_ = d2;
  ensure(d1 * d2 == out.order() && d2 >= 1 && d1 % d2 == 0,
         fmt::format("invariant factors ({},{}) disagree with group order {}",
                     d1, d2, out.order()));
  return out;
}

std::vector<FiniteSubgroup> subgroups_of_order(const FiniteSubgroup& ambient,
                                               std::int64_t n) {
  require(n >= 1 && ambient.order() % n == 0,
          fmt::format("subgroup order {} does not divide ambient order {}", n,
                      ambient.order()));
  if (n == 1) return {FiniteSubgroup{}};

  std::set<std::vector<TorsionPoint>> seen;
  std::vector<FiniteSubgroup> out;
  const auto& elems = ambient.elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    if (n % point_order(elems[i]) != 0) continue;
    for (size_t j = i; j < elems.size(); ++j) {
      // |span{a,b}| is a multiple of lcm(ord a, ord b).
      if (n % lcm64(point_order(elems[i]), point_order(elems[j])) != 0) continue;
      FiniteSubgroup h = span({elems[i], elems[j]});
      if (h.order() != n) continue;
      if (seen.insert(h.elements()).second) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorsionPoint> halvings_in(const TorsionPoint& x,
                                      const FiniteSubgroup& ambient) {
  require(ambient.contains(x),
          fmt::format("halvings of {} requested outside its group", to_string(x)));
  std::vector<TorsionPoint> out;
  for (const auto& y : ambient.elements())
    if (2 * y == x) out.push_back(y);
  return out;
}

}  // namespace avc
