#include "avcurves/polarization.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace avc {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t PairingValue::order() const {
  return modulus / std::gcd(exponent, modulus);
}

PolarizationContext::PolarizationContext(std::int64_t d)
    : PolarizationContext(d, TorsionPoint{Rational01(1, d), Rational01(0, 1)},
                          TorsionPoint{Rational01(0, 1), Rational01(1, d)}) {}

PolarizationContext::PolarizationContext(std::int64_t d, TorsionPoint k1,
                                         TorsionPoint k2)
    : d_(d), k1_(k1), k2_(k2) {
  require(d >= 1, "polarization type (1,d) needs d >= 1");
  require(point_order(k1) == d || (d == 1 && k1.is_zero()),
          "decomposition generator k1 must have order d");
  require(point_order(k2) == d || (d == 1 && k2.is_zero()),
          "decomposition generator k2 must have order d");
  kernel_ = span({k1_, k2_});
  require(kernel_.order() == d * d,
          "decomposition generators must span K(L) of order d^2");
  for (std::int64_t a = 0; a < d; ++a)
    for (std::int64_t b = 0; b < d; ++b)
      coords_.emplace(a * k1_ + b * k2_, std::make_pair(a, b));
}

std::pair<std::int64_t, std::int64_t> PolarizationContext::basis_coords(
    const TorsionPoint& p) const {
  auto it = coords_.find(p);
  require(it != coords_.end(),
          fmt::format("point {} lies outside K(L)", to_string(p)));
  return it->second;
}

PairingValue commutator_pairing(const PolarizationContext& ctx,
                                const TorsionPoint& p, const TorsionPoint& q) {
  auto [a, al] = ctx.basis_coords(p);
  auto [b, be] = ctx.basis_coords(q);
  return {mod_floor(a * be - b * al, ctx.d()), ctx.d()};
}

bool is_isotropic(const PolarizationContext& ctx, const FiniteSubgroup& X) {
  require(X.subgroup_of(ctx.kernel()),
          "isotropy is only defined for subgroups of K(L)");
  const auto& el = X.elements();
  for (size_t i = 0; i < el.size(); ++i)
    for (size_t j = i + 1; j < el.size(); ++j)
      if (!commutator_pairing(ctx, el[i], el[j]).is_trivial()) return false;
  return true;
}

PolarizationContext normalize_decomposition(const PolarizationContext& ctx,
                                            const FiniteSubgroup& X) {
  require(X.subgroup_of(ctx.kernel()), "subgroup lies outside K(L)");
  require(is_isotropic(ctx, X), "no pushforward polarization: subgroup is "
                                "not isotropic for the commutator pairing");
  const std::int64_t d = ctx.d();
  require(d % X.order() == 0,
          "subgroup order must divide d for a compatible decomposition");
  auto [d1, d2] = X.invariant_factors();

  if (d == 1) return ctx;

  // Fast path: the current basis is already compatible.
  if (span({(d / d1) * ctx.k1(), (d / d2) * ctx.k2()}) == X) return ctx;

  // Candidate first generators: order d, and (d/d1) k1' must generate the
  // larger cyclic factor of X.
  std::vector<TorsionPoint> firsts, order_d;
  for (const auto& p : ctx.kernel().elements()) {
    if (point_order(p) != d) continue;
    order_d.push_back(p);
    if (X.contains((d / d1) * p)) firsts.push_back(p);
  }
  for (const auto& c1 : firsts) {
    for (const auto& c2 : order_d) {
      if (!commutator_pairing(ctx, c1, c2).is_primitive()) continue;
      if (span({c1, c2}).order() != d * d) continue;
      if (span({(d / d1) * c1, (d / d2) * c2}) != X) continue;
      return PolarizationContext(d, c1, c2);
    }
  }
  throw domain_error(
      "no decomposition of K(L) is compatible with the subgroup");
}

std::pair<std::int64_t, std::int64_t> pushforward_type(
    const PolarizationContext& ctx, const FiniteSubgroup& X) {
  require(X.subgroup_of(ctx.kernel()), "subgroup lies outside K(L)");
  require(ctx.d() % X.order() == 0,
          fmt::format("no pushforward polarization: subgroup order {} does "
                      "not divide d = {}", X.order(), ctx.d()));
  require(is_isotropic(ctx, X), "no pushforward polarization: subgroup is "
                                "not isotropic for the commutator pairing");
  return {1, ctx.d() / X.order()};
}

QuotientModel::QuotientModel(PolarizationContext base, FiniteSubgroup X)
    : base_(std::move(base)), X_(std::move(X)) {
  require(X_.subgroup_of(base_.kernel()), "subgroup lies outside K(L)");
  auto [d1, d2] = X_.invariant_factors();
  const std::int64_t d = base_.d();
  require(span({(d / d1) * base_.k1(), (d / d2) * base_.k2()}) == X_,
          "quotient model needs a decomposition compatible with the subgroup");
  auto half_point = [&](const TorsionPoint& k) -> std::optional<TorsionPoint> {
    std::int64_t m = order_in_quotient(k);
    if (m % 2 != 0) return std::nullopt;
    return project((m / 2) * k);
  };
  w1_ = half_point(base_.k1());
  w2_ = half_point(base_.k2());
}

TorsionPoint QuotientModel::project(const TorsionPoint& p) const {
  TorsionPoint best = p;
  for (const auto& x : X_.elements()) {
    TorsionPoint q = p + x;
    if (q < best) best = q;
  }
  return best;
}

std::int64_t QuotientModel::order_in_quotient(const TorsionPoint& p) const {
  std::int64_t n = point_order(p);
  for (std::int64_t m = 1; m <= n; ++m)
    if (n % m == 0 && X_.contains(m * p)) return m;
  ensure(false, "order in quotient not found below the point order");
  return 0;
}

QuotientModel build_quotient(const PolarizationContext& ctx,
                             const FiniteSubgroup& X) {
  return QuotientModel(ctx, X);
}

}  // namespace avc
