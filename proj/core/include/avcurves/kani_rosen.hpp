#ifndef AVCURVES_KANI_ROSEN_HPP_
#define AVCURVES_KANI_ROSEN_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "avcurves/curve.hpp"

namespace avc {

// The automorphism subgroup G = <-1> x| X of the cover curve, its subgroup
// lattice and partitions, Kani-Rosen isogeny relations, and the reduction
// of those relations into maximally split Jacobian decompositions.

// An automorphism of the curve: t_shift (sign +1) or [-1] o t_shift
// (sign -1), acting as p -> sign * (p + shift).
struct AutElement {
  int sign = +1;
  TorsionPoint shift;

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

// (f o g)(p) = f(g(p)).
AutElement compose(const AutElement& f, const AutElement& g);
AutElement inverse_of(const AutElement& f);
std::string to_string(const AutElement& a);

// A subgroup of an AutGroup: sorted element indices into its table.
using SubgroupIdx = std::vector<int>;

class AutGroup {
 public:
  explicit AutGroup(CoverCurve curve);

  const CoverCurve& curve() const { return curve_; }
  const std::vector<AutElement>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }

  int index_of(const AutElement& a) const;
  int mul(int a, int b) const { return mul_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }

  SubgroupIdx closure(const std::vector<int>& gens) const;
  // All subgroups, sorted ascending by (order, index list); computed once.
  const std::vector<SubgroupIdx>& subgroups() const;
  SubgroupIdx translation_subgroup() const;  // X inside G
  // Canonical representative of the conjugacy class of H.
  SubgroupIdx conjugacy_canonical(const SubgroupIdx& H) const;
  // The elements of H that are translations, as a torsion subgroup.
  FiniteSubgroup translations_in(const SubgroupIdx& H) const;
  std::string label(const SubgroupIdx& H) const;  // "<t(1/2,0), -1>"

  // Fixed-point count of [-1] o t_x by shift index into X (precomputed).
  std::int64_t fix_count_of_shift(const TorsionPoint& x) const;

  std::vector<SubgroupIdx> conjugates_of(const SubgroupIdx& H) const;

 private:
  CoverCurve curve_;
  std::vector<AutElement> elements_;
  std::vector<int> mul_, inv_;
  std::map<TorsionPoint, std::int64_t> fix_;
  mutable std::vector<SubgroupIdx> subgroups_;  // lazy
};

struct Partition {
  std::vector<SubgroupIdx> parts;
};

// All partitions of G into >= 2 nontrivial proper subgroups with pairwise
// trivial intersections covering G, up to reordering; deterministic order.
// Refuses groups larger than max_group_order.
std::vector<Partition> find_partitions(const AutGroup& G,
                                       std::int64_t max_group_order = 200);
// Same search over an abelian torsion subgroup.
std::vector<std::vector<FiniteSubgroup>> find_partitions(
    const FiniteSubgroup& A, std::int64_t max_group_order = 200);

// Genus of C/H together with the conjugacy-canonical identity of the
// quotient.  H factors as translations T = H n X and at most one flip
// coset; the genus comes from the translation quotient (d/|T| + 1) and,
// when flips are present, the induced involution's fixed points summed
// over the coset and divided by |T|.
struct QuotientClass {
  std::int64_t genus = 0;
  std::string id;          // "C/<...>" for the canonical conjugate
  SubgroupIdx canonical;
};
QuotientClass subgroup_quotient_genus(const AutGroup& G, const SubgroupIdx& H);

enum class FactorKind { surface, jac_quotient, elliptic, trivial, remainder };

struct IsogenyFactor {
  FactorKind kind = FactorKind::trivial;
  std::int64_t dim = 0;
  std::string id;

  friend bool operator==(const IsogenyFactor&, const IsogenyFactor&) = default;
  // Display/storage order: A first, then higher dimension, then id.
  friend bool operator<(const IsogenyFactor& a, const IsogenyFactor& b) {
    auto ka = std::make_tuple(a.kind != FactorKind::surface, -a.dim, a.id);
    auto kb = std::make_tuple(b.kind != FactorKind::surface, -b.dim, b.id);
    return ka < kb;
  }
};

// J_{C/H} as a canonical factor: the translation-full subgroup gives the
// surface class A (the Jacobian of the genus-2 member), genus 1 gives an
// elliptic class, genus 0 the trivial class.
IsogenyFactor factor_for(const AutGroup& G, const SubgroupIdx& H);

using IsogenyExpression = std::map<IsogenyFactor, std::int64_t>;

std::int64_t dimension_of(const IsogenyExpression& e);
std::string to_string(const IsogenyExpression& e);

struct Relation {
  IsogenyExpression lhs, rhs;
  std::string provenance;
};
std::string to_string(const Relation& r);

// The isogeny relation of a partition G = H_1 u ... u H_t:
//   J_C^{t-1} x J_{C/G}^{|G|}  ~  prod_i J_{C/H_i}^{|H_i|},
// with genus-0 factors dropped and conjugate quotients merged.  Dimension
// balance is asserted; an unbalanced relation is an internal error.
Relation relation_from_partition(const AutGroup& G, const Partition& p);

struct Refinement {
  std::string factor_id;
  std::vector<std::string> covers;  // elliptic class ids peeled, in order
  std::int64_t remainder_dim = 0;   // Prym dimension left behind
};

enum class Verdict { completely_decomposable, undetermined };
std::string to_string(Verdict v);

struct DecomposeOptions {
  bool assume_A_split = false;
  std::int64_t max_group_order = 200;
  int jobs = 1;
};

struct Decomposition {
  // Exact decomposition of J_C derived from the relation system.
  IsogenyExpression expression;
  // The relations fed to the eliminator, in deterministic order.
  std::vector<Relation> relations;
  // Fully expanded definitions for the other quotient classes that were
  // eliminated (e.g. J_{C/<-1>} ~ prod E_i), most informative first.
  std::vector<std::pair<std::string, IsogenyExpression>> derived;
  // Elliptic covers peeled off residual factors of dimension >= 2.
  std::vector<Refinement> refinements;
  std::vector<std::string> assumptions;
  Verdict verdict = Verdict::undetermined;
  // The pieces after refinement: (id, dim, multiplicity).
  std::vector<std::tuple<std::string, std::int64_t, std::int64_t>> final_pieces;
};

// Gathers Kani-Rosen relations from partitions of G/T and X/T for every
// translation subgroup T <= X, eliminates the quotient classes by exact
// rational reduction, then peels elliptic covers off residual factors.
Decomposition decompose(const CoverCurve& curve,
                        const DecomposeOptions& opts = {});

struct EllipticCoverReport {
  std::int64_t d = 0, j = 0, k = 0;
  std::vector<TorsionPoint> X_gens;
  TorsionPoint x1, x2;
  std::int64_t intermediate_genus = 0;  // of C~ = C/<t_x1>; equals j+1
  std::string intermediate_id;
  IsogenyExpression intermediate_jacobian;
  bool degree_d_witness_found = false;
  std::string witness_id;
  std::int64_t witness_genus = 0;
  std::int64_t cover_degree = 0;  // degree of C -> elliptic quotient
  std::int64_t prym_dim = 0;      // dim J_C - dim J_C~
};

// For X = Z/j x Z/k with d = j*k: builds the intermediate curve
// C~ = C/<t_x1> of genus j+1, decomposes its Jacobian, and exhibits an
// elliptic quotient of C by an order-d subgroup (cover of degree d).  If
// no order-d subgroup has a genus-1 quotient, reports the best elliptic
// cover found with its actual degree.
EllipticCoverReport elliptic_cover_report(std::int64_t d, std::int64_t j,
                                          std::int64_t k);

}  // namespace avc

#endif  // AVCURVES_KANI_ROSEN_HPP_
