#include <algorithm>
#include <iterator>
#include <set>

#include <fmt/format.h>

#include "avcurves/errors.hpp"
#include "avcurves/kani_rosen.hpp"
#include "group_table.hpp"

namespace avc {

// (s1,a1) o (s2,a2): p -> s1*(s2*(p+a2)+a1) = s1*s2*(p + a2 + s2*a1).
AutElement compose(const AutElement& f, const AutElement& g) {
  return {f.sign * g.sign, g.shift + std::int64_t{g.sign} * f.shift};
}

AutElement inverse_of(const AutElement& f) {
  return {f.sign, std::int64_t{-f.sign} * f.shift};
}

std::string to_string(const AutElement& a) {
  const bool trivial_shift = a.shift == TorsionPoint{};
  if (a.sign == +1) return trivial_shift ? "1" : "t" + to_string(a.shift);
  return trivial_shift ? "-1" : "-1 t" + to_string(a.shift);
}

AutGroup::AutGroup(CoverCurve curve) : curve_(std::move(curve)) {
  const auto& xs = curve_.X().elements();  // sorted, identity first
  for (const auto& x : xs) elements_.push_back({+1, x});
  for (const auto& x : xs) elements_.push_back({-1, x});
  const int n = order();
  ensure(n == 2 * curve_.d(), "automorphism group must have order 2d");

  mul_.assign(static_cast<std::size_t>(n) * n, -1);
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
    }
    inv_[a] = index_of(inverse_of(elements_[a]));
  }

  for (const auto& x : xs) fix_.emplace(x, fix_count(curve_, x).count);
}

int AutGroup::index_of(const AutElement& a) const {
  const auto& xs = curve_.X().elements();
  auto it = std::lower_bound(xs.begin(), xs.end(), a.shift);
  ensure(it != xs.end() && *it == a.shift,
         "automorphism shift must lie in the translation subgroup");
  const int base = a.sign == +1 ? 0 : static_cast<int>(xs.size());
  return base + static_cast<int>(it - xs.begin());
}

SubgroupIdx AutGroup::closure(const std::vector<int>& gens) const {
  std::set<int> have = {0};
  std::vector<int> frontier = {0};
  for (int g : gens) {
    require(g >= 0 && g < order(), "generator index out of range");
    if (have.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    std::vector<int> snapshot(have.begin(), have.end());
    for (int a : frontier) {
      for (int b : snapshot) {
        for (int c : {mul(a, b), mul(b, a), inv(a)}) {
          if (have.insert(c).second) next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  return SubgroupIdx(have.begin(), have.end());
}

const std::vector<SubgroupIdx>& AutGroup::subgroups() const {
  if (!subgroups_.empty()) return subgroups_;
  std::set<SubgroupIdx> seen;
  seen.insert(SubgroupIdx{0});
  std::vector<SubgroupIdx> frontier = {SubgroupIdx{0}};
  while (!frontier.empty()) {
    std::vector<SubgroupIdx> next;
    for (const auto& H : frontier) {
      for (int g = 1; g < order(); ++g) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        std::vector<int> gens = H;
        gens.push_back(g);
        auto bigger = closure(gens);
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  subgroups_.assign(seen.begin(), seen.end());
  std::sort(subgroups_.begin(), subgroups_.end(),
            [](const SubgroupIdx& a, const SubgroupIdx& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return subgroups_;
}

SubgroupIdx AutGroup::translation_subgroup() const {
  SubgroupIdx t(static_cast<std::size_t>(curve_.d()));
  for (int i = 0; i < curve_.d(); ++i) t[i] = i;
  return t;
}

std::vector<SubgroupIdx> AutGroup::conjugates_of(const SubgroupIdx& H) const {
  std::set<SubgroupIdx> out;
  for (int g = 0; g < order(); ++g) {
    SubgroupIdx c;
    c.reserve(H.size());
    for (int h : H) c.push_back(mul(mul(g, h), inv(g)));
    std::sort(c.begin(), c.end());
    out.insert(std::move(c));
  }
  return {out.begin(), out.end()};
}

SubgroupIdx AutGroup::conjugacy_canonical(const SubgroupIdx& H) const {
  auto conj = conjugates_of(H);
  return conj.front();  // set order is lexicographic; sizes all equal
}

FiniteSubgroup AutGroup::translations_in(const SubgroupIdx& H) const {
  std::vector<TorsionPoint> pts;
  for (int h : H) {
    if (elements_[h].sign == +1) pts.push_back(elements_[h].shift);
  }
  return span(pts);
}

std::string AutGroup::label(const SubgroupIdx& H) const {
  if (H.size() == 1) return "<1>";
  std::vector<std::string> gens;
  SubgroupIdx have = {0};
  for (int h : H) {
    if (std::binary_search(have.begin(), have.end(), h)) continue;
    gens.push_back(to_string(elements_[h]));
    std::vector<int> g(have.begin(), have.end());
    g.push_back(h);
    have = closure(g);
    if (have.size() == H.size()) break;
  }
  return fmt::format("<{}>", fmt::join(gens, ", "));
}

std::int64_t AutGroup::fix_count_of_shift(const TorsionPoint& x) const {
  auto it = fix_.find(x);
  ensure(it != fix_.end(), "fixed-point table lookup outside X");
  return it->second;
}

std::vector<Partition> find_partitions(const AutGroup& G,
                                       std::int64_t max_group_order) {
  require(G.order() <= max_group_order,
          fmt::format("partition search refused: group order {} exceeds the "
                      "configured bound {}",
                      G.order(), max_group_order));
  internal::TableGroup t;
  t.n = G.order();
  t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) t.mul[a * t.n + b] = G.mul(a, b);
  }
  std::vector<Partition> out;
  for (auto& p : internal::table_partitions(t)) {
    Partition q;
    for (auto& part : p) q.parts.push_back(SubgroupIdx(part.begin(), part.end()));
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::vector<FiniteSubgroup>> find_partitions(
    const FiniteSubgroup& A, std::int64_t max_group_order) {
  require(A.order() <= max_group_order,
          fmt::format("partition search refused: group order {} exceeds the "
                      "configured bound {}",
                      A.order(), max_group_order));
  const auto& els = A.elements();
  const int n = static_cast<int>(els.size());
  internal::TableGroup t;
  t.n = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  auto idx = [&](const TorsionPoint& p) {
    auto it = std::lower_bound(els.begin(), els.end(), p);
    return static_cast<int>(it - els.begin());
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.mul[a * n + b] = idx(els[a] + els[b]);
  }
  std::vector<std::vector<FiniteSubgroup>> out;
  for (auto& p : internal::table_partitions(t)) {
    std::vector<FiniteSubgroup> parts;
    for (auto& part : p) {
      std::vector<TorsionPoint> pts;
      for (int e : part) pts.push_back(els[e]);
      parts.push_back(span(pts));
    }
    out.push_back(std::move(parts));
  }
  return out;
}

QuotientClass subgroup_quotient_genus(const AutGroup& G, const SubgroupIdx& H) {
  require(!H.empty(), "subgroup must contain the identity");
  for (int h : H) {
    require(h >= 0 && h < G.order(), "subgroup index out of range");
  }
  const std::int64_t d = G.curve().d();
  FiniteSubgroup T = G.translations_in(H);
  const std::int64_t m = T.order();
  std::vector<int> flips;
  for (int h : H) {
    if (G.elements()[h].sign == -1) flips.push_back(h);
  }
  ensure(m + static_cast<std::int64_t>(flips.size()) ==
             static_cast<std::int64_t>(H.size()),
         "subgroup splits into translations and flips");
  ensure(d % m == 0, "translation part order divides d");

  QuotientClass out;
  out.canonical = G.conjugacy_canonical(H);
  out.id = "C/" + G.label(out.canonical);

  const std::int64_t base_genus = d / m + 1;
  if (flips.empty()) {
    out.genus = base_genus;
    return out;
  }
  ensure(flips.size() == static_cast<std::size_t>(m),
         "flip coset matches the translation part in size");
  std::int64_t total = 0;
  for (int f : flips) total += G.fix_count_of_shift(G.elements()[f].shift);
  ensure(total % m == 0,
         "lifted fixed-point total must be divisible by the translation "
         "part order");
  out.genus = involution_quotient_genus(base_genus, total / m);
  return out;
}

IsogenyFactor factor_for(const AutGroup& G, const SubgroupIdx& H) {
  QuotientClass qc = subgroup_quotient_genus(G, H);
  IsogenyFactor f;
  f.dim = qc.genus;
  if (G.translations_in(H).order() == G.curve().d() &&
      H.size() == static_cast<std::size_t>(G.curve().d())) {
    // H = X exactly: the quotient is the genus-2 member whose Jacobian is
    // isogenous to the surface itself.
    f.kind = FactorKind::surface;
    f.id = "A";
    ensure(qc.genus == 2, "the full translation quotient has genus 2");
    return f;
  }
  if (H.size() == 1 && G.curve().d() > 1) {
    f.kind = FactorKind::jac_quotient;
    f.id = "J(C)";
    return f;
  }
  f.id = "J(" + qc.id + ")";
  if (qc.genus == 0) {
    f.kind = FactorKind::trivial;
  } else if (qc.genus == 1) {
    f.kind = FactorKind::elliptic;
  } else {
    f.kind = FactorKind::jac_quotient;
  }
  return f;
}

}  // namespace avc
