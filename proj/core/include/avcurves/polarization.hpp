#ifndef AVCURVES_POLARIZATION_HPP_
#define AVCURVES_POLARIZATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "avcurves/torsion.hpp"

namespace avc {

// Polarization data for a (1,d)-polarized abelian surface A: the kernel
// K(L) = <k1> + <k2> of the polarization isogeny with its commutator
// pairing, isotropy tests, decomposition normalization, and the quotient
// model of A/X with the projection pi.
//
// Model axioms (fixed by the construction, not derived): L is symmetric,
// even, of characteristic zero, and carries a symmetric theta structure.

// A value of the commutator pairing: zeta^exponent for a fixed primitive
// d-th root of unity zeta.  Stored exactly as an integer exponent mod d.
struct PairingValue {
  std::int64_t exponent = 0;  // in [0, d)
  std::int64_t modulus = 1;   // d

  bool is_trivial() const { return exponent == 0; }
  // Order of the root of unity: least m with m*exponent = 0 mod d.
  std::int64_t order() const;
  bool is_primitive() const { return order() == modulus; }
  friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

class PolarizationContext {
 public:
  // Default decomposition generators k1 = (1/d, 0), k2 = (0, 1/d).
  explicit PolarizationContext(std::int64_t d);
  PolarizationContext(std::int64_t d, TorsionPoint k1, TorsionPoint k2);

  std::int64_t d() const { return d_; }
  const TorsionPoint& k1() const { return k1_; }
  const TorsionPoint& k2() const { return k2_; }
  const FiniteSubgroup& kernel() const { return kernel_; }  // K(L)

  static constexpr bool l_even = true;
  static constexpr bool l_has_sts = true;
  static constexpr bool characteristic_zero = true;

  // Coordinates (a, b) in [0,d)^2 with p = a*k1 + b*k2; domain error if
  // p is outside K(L).
  std::pair<std::int64_t, std::int64_t> basis_coords(const TorsionPoint& p) const;

 private:
  std::int64_t d_;
  TorsionPoint k1_, k2_;
  FiniteSubgroup kernel_;
  std::map<TorsionPoint, std::pair<std::int64_t, std::int64_t>> coords_;
};

// Commutator pairing e((a,b),(a',b')) = zeta^(a*b' - a'*b) in the basis
// coordinates of the context's decomposition.
PairingValue commutator_pairing(const PolarizationContext& ctx,
                                const TorsionPoint& p, const TorsionPoint& q);

// True iff every pair of elements of X pairs trivially.  X must lie in K(L).
bool is_isotropic(const PolarizationContext& ctx, const FiniteSubgroup& X);

// A context with new generators k1', k2' such that the pairing of k1', k2'
// is primitive of order d, <k1'> + <k2'> = K(L) (direct), and
// X = <(d/d1) k1'> + <(d/d2) k2'> for X's invariant factors (d1, d2).
// Returns the input context unchanged when it is already compatible.
// Throws domain_error when no compatible basis exists (never observed for
// isotropic X of order dividing d; verified exhaustively in tests).
PolarizationContext normalize_decomposition(const PolarizationContext& ctx,
                                            const FiniteSubgroup& X);

// The polarization type (1, d/|X|) of A/X.  X must be isotropic of order
// dividing d; the quotient is principally polarized iff |X| = d.
std::pair<std::int64_t, std::int64_t> pushforward_type(
    const PolarizationContext& ctx, const FiniteSubgroup& X);

// The quotient A/X with the projection pi.  Cosets are represented by
// their canonically least member, so quotient elements compare exactly.
class QuotientModel {
 public:
  QuotientModel(PolarizationContext base, FiniteSubgroup X);

  const PolarizationContext& base() const { return base_; }
  const FiniteSubgroup& X() const { return X_; }

  // Canonical representative of p + X.
  TorsionPoint project(const TorsionPoint& p) const;
  // Least n >= 1 with n*p in X (the order of pi(p) in A/X).
  std::int64_t order_in_quotient(const TorsionPoint& p) const;

  // w_i = (m_i/2) * pi(k_i) where m_i is the order of pi(k_i), defined only
  // when m_i is even; the unique order-2 element of <pi(k_i)>.
  const std::optional<TorsionPoint>& w1() const { return w1_; }
  const std::optional<TorsionPoint>& w2() const { return w2_; }

 private:
  PolarizationContext base_;
  FiniteSubgroup X_;
  std::optional<TorsionPoint> w1_, w2_;
};

// Quotient model on a context already normalized for X (the projection and
// the w_i are only meaningful in a compatible basis).
QuotientModel build_quotient(const PolarizationContext& ctx,
                             const FiniteSubgroup& X);

}  // namespace avc

#endif  // AVCURVES_POLARIZATION_HPP_
