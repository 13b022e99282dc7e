#ifndef AVCURVES_TORSION_HPP_
#define AVCURVES_TORSION_HPP_

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "avcurves/errors.hpp"

namespace avc {

// Exact arithmetic for finite subgroups of (Q/Z)^2, the ambient model for
// the torsion of an abelian surface.  All values are immutable after
// construction and all operations are pure.

// A rational number in [0,1), always stored reduced.
struct Rational01 {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational01() = default;
  // Reduces n/d modulo 1 into [0,1); d may be any nonzero integer.
  Rational01(std::int64_t n, std::int64_t d);

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Rational01&, const Rational01&) = default;
};

Rational01 operator+(const Rational01& a, const Rational01& b);
Rational01 operator-(const Rational01& a);
Rational01 operator*(std::int64_t k, const Rational01& a);

// A point of (Q/Z)^2: coordinates with respect to the fixed decomposition.
struct TorsionPoint {
  Rational01 c1, c2;

  TorsionPoint() = default;
  TorsionPoint(Rational01 a, Rational01 b) : c1(a), c2(b) {}

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;

  // Canonical ordering key (denominators first, then numerators); used for
  // every sorted element list, making deduplication and equality bit-exact.
  std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> key() const {
    return {c1.den, c2.den, c1.num, c2.num};
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    return a.key() < b.key();
  }
};

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
TorsionPoint operator-(const TorsionPoint& a);
TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b);
TorsionPoint operator*(std::int64_t k, const TorsionPoint& p);

std::string to_string(const Rational01& r);
std::string to_string(const TorsionPoint& p);

// Least n >= 1 with n*p = 0; the lcm of the coordinate denominators.
std::int64_t point_order(const TorsionPoint& p);

// A finite subgroup of (Q/Z)^2 in canonical form: sorted element list plus
// invariant factors (d1, d2) with d2 | d1 and d1*d2 = order.
class FiniteSubgroup {
 public:
  FiniteSubgroup() : elements_{TorsionPoint{}}, generators_{TorsionPoint{}},
                     d1_(1), d2_(1) {}

  const std::vector<TorsionPoint>& elements() const { return elements_; }
  const std::vector<TorsionPoint>& generators() const { return generators_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  std::pair<std::int64_t, std::int64_t> invariant_factors() const { return {d1_, d2_}; }
  bool is_cyclic() const { return d2_ == 1; }

  bool contains(const TorsionPoint& p) const;
  bool subgroup_of(const FiniteSubgroup& other) const;

  friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const FiniteSubgroup& a, const FiniteSubgroup& b);

 private:
  friend FiniteSubgroup span(const std::vector<TorsionPoint>& gens);
  std::vector<TorsionPoint> elements_;   // sorted by TorsionPoint::key
  std::vector<TorsionPoint> generators_;
  std::int64_t d1_, d2_;
};

// Smallest subgroup containing all generators.  Invariant factors are
// computed by Smith-normal-form reduction of the generator lattice.
FiniteSubgroup span(const std::vector<TorsionPoint>& gens);

// All distinct subgroups of `ambient` with exactly n elements, deduplicated
// by canonical element set and returned in a deterministic order.  Every
// subgroup of (Q/Z)^2 needs at most two generators, so enumeration over
// spans of element pairs is exhaustive.
std::vector<FiniteSubgroup> subgroups_of_order(const FiniteSubgroup& ambient,
                                               std::int64_t n);

// { y in ambient : 2y = x }.  Empty iff x is not a double in the ambient
// group; otherwise has exactly |ambient[2]| members.
std::vector<TorsionPoint> halvings_in(const TorsionPoint& x,
                                      const FiniteSubgroup& ambient);

}  // namespace avc

#endif  // AVCURVES_TORSION_HPP_
