#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "avcurves/errors.hpp"
#include "avcurves/kani_rosen.hpp"
#include "group_table.hpp"

namespace avc {

namespace {

// Exact rational arithmetic for the elimination step; magnitudes stay tiny.
struct Frac {
  long long n = 0, d = 1;
};

Frac norm(Frac f) {
  ensure(f.d != 0, "zero denominator in relation arithmetic");
  if (f.d < 0) {
    f.n = -f.n;
    f.d = -f.d;
  }
  const long long g = std::gcd(f.n < 0 ? -f.n : f.n, f.d);
  if (g > 1) {
    f.n /= g;
    f.d /= g;
  }
  if (f.n == 0) f.d = 1;
  return f;
}

Frac operator+(Frac a, Frac b) {
  return norm({a.n * b.d + b.n * a.d, a.d * b.d});
}
Frac operator*(Frac a, Frac b) { return norm({a.n * b.n, a.d * b.d}); }
Frac operator/(Frac a, Frac b) {
  ensure(b.n != 0, "division by zero in relation arithmetic");
  return norm({a.n * b.d, a.d * b.n});
}
Frac operator-(Frac a) { return {-a.n, a.d}; }

using Row = std::map<std::string, Frac>;

void row_add(Row& r, const std::string& id, Frac c) {
  auto it = r.find(id);
  if (it == r.end()) {
    if (c.n != 0) r.emplace(id, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.n == 0) r.erase(it);
}

void add_factor(IsogenyExpression& e, const IsogenyFactor& f,
                std::int64_t mult) {
  if (f.dim == 0 || mult == 0) return;  // genus-0 quotients carry nothing
  e[f] += mult;
}

// One T-relative Kani-Rosen relation: for subgroups T <= H_i <= S with
// {H_i/T} partitioning S/T into t parts,
//   J_{C/T}^{t-1} x J_{C/S}^{|S/T|}  ~  prod_i J_{C/H_i}^{|H_i/T|}.
// Conjugate quotients merge into one factor; genus-0 factors are dropped.
Relation make_relation(const AutGroup& G, const SubgroupIdx& T,
                       const SubgroupIdx& S,
                       const std::vector<SubgroupIdx>& lifted_parts) {
  const auto m = static_cast<std::int64_t>(T.size());
  const auto t = static_cast<std::int64_t>(lifted_parts.size());
  const std::int64_t s_over_t = static_cast<std::int64_t>(S.size()) / m;
  const IsogenyFactor fT = factor_for(G, T);
  const IsogenyFactor fS = factor_for(G, S);

  Relation rel;
  add_factor(rel.lhs, fT, t - 1);
  add_factor(rel.lhs, fS, s_over_t);
  std::int64_t lhs_dim = (t - 1) * fT.dim + s_over_t * fS.dim;
  std::int64_t rhs_dim = 0;
  std::vector<std::string> part_labels;
  for (const auto& H : lifted_parts) {
    const IsogenyFactor fH = factor_for(G, H);
    const std::int64_t h = static_cast<std::int64_t>(H.size()) / m;
    add_factor(rel.rhs, fH, h);
    rhs_dim += h * fH.dim;
    part_labels.push_back(G.label(H));
  }
  rel.provenance =
      fmt::format("partition of {}/{} into [{}]", G.label(S), G.label(T),
                  fmt::join(part_labels, ", "));
  ensure(lhs_dim == rhs_dim,
         fmt::format("isogeny relation fails the dimension balance ({})",
                     rel.provenance));
  return rel;
}

// Partitions of the quotient group S/T, lifted back to subgroups of G.
std::vector<std::vector<SubgroupIdx>> lifted_quotient_partitions(
    const AutGroup& G, const SubgroupIdx& T, const SubgroupIdx& S) {
  std::vector<std::vector<SubgroupIdx>> out;
  const auto m = T.size();
  if (S.size() / m < 4) return out;  // groups this small have no partitions

  // Coset representatives: the minimal element index of each coset of T.
  std::map<int, int> rep_of;
  std::vector<int> reps;
  for (int s : S) {
    if (rep_of.count(s)) continue;
    int rep = s;
    std::vector<int> coset;
    for (int t : T) {
      const int e = G.mul(s, t);
      coset.push_back(e);
      rep = std::min(rep, e);
    }
    for (int e : coset) rep_of[e] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  ensure(!reps.empty() && reps.front() == 0, "identity coset must come first");
  std::map<int, int> local;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    local[reps[i]] = static_cast<int>(i);
  }

  internal::TableGroup q;
  q.n = static_cast<int>(reps.size());
  q.mul.resize(static_cast<std::size_t>(q.n) * q.n);
  for (int a = 0; a < q.n; ++a) {
    for (int b = 0; b < q.n; ++b) {
      q.mul[a * q.n + b] = local.at(rep_of.at(
          G.mul(reps[static_cast<std::size_t>(a)],
                reps[static_cast<std::size_t>(b)])));
    }
  }

  for (const auto& partition : internal::table_partitions(q)) {
    std::vector<SubgroupIdx> lifted;
    for (const auto& part : partition) {
      std::set<int> part_reps;
      for (int loc : part) part_reps.insert(reps[static_cast<std::size_t>(loc)]);
      SubgroupIdx H;
      for (int s : S) {
        if (part_reps.count(rep_of.at(s))) H.push_back(s);
      }
      std::sort(H.begin(), H.end());
      lifted.push_back(std::move(H));
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

std::vector<Relation> relations_for_T(const AutGroup& G, const SubgroupIdx& T,
                                      const SubgroupIdx& full,
                                      const SubgroupIdx& X) {
  std::vector<Relation> out;
  for (const SubgroupIdx* S : {&full, &X}) {
    for (const auto& lifted : lifted_quotient_partitions(G, T, *S)) {
      out.push_back(make_relation(G, T, *S, lifted));
    }
  }
  return out;
}

}  // namespace

std::int64_t dimension_of(const IsogenyExpression& e) {
  std::int64_t total = 0;
  for (const auto& [f, m] : e) total += f.dim * m;
  return total;
}

std::string to_string(const IsogenyExpression& e) {
  if (e.empty()) return "(trivial)";
  std::vector<std::string> parts;
  for (const auto& [f, m] : e) {
    parts.push_back(m == 1 ? f.id : fmt::format("{}^{}", f.id, m));
  }
  return fmt::format("{}", fmt::join(parts, " x "));
}

std::string to_string(const Relation& r) {
  return fmt::format("{} ~ {}  [{}]", to_string(r.lhs), to_string(r.rhs),
                     r.provenance);
}

std::string to_string(Verdict v) {
  return v == Verdict::completely_decomposable ? "completely decomposable"
                                               : "undetermined";
}

Relation relation_from_partition(const AutGroup& G, const Partition& p) {
  require(p.parts.size() >= 2, "a partition needs at least two parts");
  const auto n = static_cast<std::size_t>(G.order());
  std::vector<char> covered(n, 0);
  std::vector<SubgroupIdx> parts;
  for (const auto& raw : p.parts) {
    SubgroupIdx part = raw;
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    require(!part.empty() && part.front() == 0 && part.back() < G.order(),
            "each part must be a subgroup containing the identity");
    require(part.size() >= 2 && part.size() < n,
            "each part must be a nontrivial proper subgroup");
    require(part == G.closure(part),
            "each part must be closed under the group operation");
    for (int e : part) {
      if (e == 0) continue;
      require(!covered[static_cast<std::size_t>(e)],
              "parts must intersect pairwise in the identity only");
      covered[static_cast<std::size_t>(e)] = 1;
    }
    parts.push_back(std::move(part));
  }
  for (std::size_t e = 1; e < n; ++e) {
    require(covered[e] == 1, "the parts must cover the whole group");
  }
  SubgroupIdx full(n);
  std::iota(full.begin(), full.end(), 0);
  return make_relation(G, SubgroupIdx{0}, full, parts);
}

Decomposition decompose(const CoverCurve& curve, const DecomposeOptions& opts) {
  AutGroup G(curve);
  require(G.order() <= opts.max_group_order,
          fmt::format("decomposition refused: automorphism group order {} "
                      "exceeds the configured bound {}",
                      G.order(), opts.max_group_order));
  G.subgroups();  // precompute before any parallel work

  const SubgroupIdx X = G.translation_subgroup();
  SubgroupIdx full(static_cast<std::size_t>(G.order()));
  std::iota(full.begin(), full.end(), 0);

  // Translation subgroups T <= X, ascending by (order, lexicographic).
  std::vector<SubgroupIdx> ts;
  for (const auto& H : G.subgroups()) {
    if (std::includes(X.begin(), X.end(), H.begin(), H.end())) ts.push_back(H);
  }

  Decomposition dec;
  if (opts.jobs > 1) {
    std::vector<std::future<std::vector<Relation>>> futs;
    futs.reserve(ts.size());
    for (const auto& T : ts) {
      futs.push_back(std::async(std::launch::async, [&G, &T, &full, &X]() {
        return relations_for_T(G, T, full, X);
      }));
    }
    for (auto& f : futs) {
      for (auto& r : f.get()) dec.relations.push_back(std::move(r));
    }
  } else {
    for (const auto& T : ts) {
      for (auto& r : relations_for_T(G, T, full, X)) {
        dec.relations.push_back(std::move(r));
      }
    }
  }

  // Factor registry: id -> factor, gathered from the relations plus J_C.
  std::map<std::string, IsogenyFactor> registry;
  for (const auto& r : dec.relations) {
    for (const auto& [f, m] : r.lhs) registry.emplace(f.id, f);
    for (const auto& [f, m] : r.rhs) registry.emplace(f.id, f);
  }
  const IsogenyFactor jc = factor_for(G, SubgroupIdx{0});
  registry.emplace(jc.id, jc);

  // Rows: lhs - rhs = 0 over the factor ids.
  std::vector<Row> rows;
  for (const auto& r : dec.relations) {
    Row row;
    for (const auto& [f, m] : r.lhs) row_add(row, f.id, {m, 1});
    for (const auto& [f, m] : r.rhs) row_add(row, f.id, {-m, 1});
    if (!row.empty()) rows.push_back(std::move(row));
  }

  // Eliminate quotient classes of dimension >= 2 (never the surface class
  // A), largest dimension first, ties by id.  Rows are consumed in their
  // deterministic creation order.
  std::vector<std::string> pivots;
  for (const auto& [id, f] : registry) {
    if (f.dim >= 2 && f.kind != FactorKind::surface) pivots.push_back(id);
  }
  std::sort(pivots.begin(), pivots.end(),
            [&](const std::string& a, const std::string& b) {
              const auto da = registry.at(a).dim, db = registry.at(b).dim;
              if (da != db) return da > db;
              return a < b;
            });

  std::vector<char> active(rows.size(), 1);
  std::vector<std::pair<std::string, Row>> defs;
  for (const auto& v : pivots) {
    std::size_t found = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (active[i] && rows[i].count(v)) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;  // v stays as an atom
    Row def;
    const Frac c = rows[found].at(v);
    for (const auto& [id, coef] : rows[found]) {
      if (id != v) def[id] = -(coef / c);
    }
    active[found] = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i] || !rows[i].count(v)) continue;
      const Frac k = rows[i].at(v);
      rows[i].erase(v);
      for (const auto& [id, coef] : def) row_add(rows[i], id, k * coef);
      if (rows[i].empty()) active[i] = 0;
    }
    defs.emplace_back(v, std::move(def));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ensure(!active[i] || rows[i].empty(),
           "the relation system left an unused constraint between "
           "irreducible factors");
  }

  // Expand the triangular definitions: each references only pivots that
  // come later, so expanding back-to-front reaches pure atoms.
  std::map<std::string, Row> expanded;
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
    Row full_def;
    for (const auto& [id, coef] : it->second) {
      auto sub = expanded.find(id);
      if (sub == expanded.end()) {
        row_add(full_def, id, coef);
      } else {
        for (const auto& [id2, c2] : sub->second) {
          row_add(full_def, id2, coef * c2);
        }
      }
    }
    expanded[it->first] = std::move(full_def);
  }

  auto is_clean = [](const Row& row) {
    for (const auto& [id, c] : row) {
      if (c.d != 1 || c.n <= 0) return false;
    }
    return true;
  };
  auto to_expression = [&](const Row& row) {
    IsogenyExpression e;
    for (const auto& [id, coef] : row) {
      ensure(coef.d == 1 && coef.n > 0,
             fmt::format("decomposition produced a non-integral or negative "
                         "multiplicity for {}",
                         id));
      e[registry.at(id)] = coef.n;
    }
    return e;
  };

  if (jc.kind == FactorKind::surface) {
    dec.expression[jc] = 1;  // d = 1: the curve is itself the genus-2 member
  } else {
    auto it = expanded.find(jc.id);
    ensure(it != expanded.end(),
           "no relation determines the full Jacobian; the canonical "
           "partition always supplies one");
    if (is_clean(it->second)) {
      dec.expression = to_expression(it->second);
    } else {
      // The relation system pins J_C only up to fractional combinations of
      // order-2 quotient classes (this happens for some non-cyclic X).
      // Fall back to the exact cover split J_C ~ J_{C/T} x Prym(C over C/T)
      // through the first translation quotient resolved integrally.
      bool split_done = false;
      for (const auto& T : ts) {
        if (T.size() == 1) continue;
        const IsogenyFactor fT = factor_for(G, T);
        IsogenyExpression base;
        if (fT.kind == FactorKind::surface) {
          base[fT] = 1;
        } else {
          auto dt = expanded.find(fT.id);
          if (dt == expanded.end() || !is_clean(dt->second)) continue;
          base = to_expression(dt->second);
        }
        const std::int64_t prym = curve.genus() - fT.dim;
        ensure(prym >= 1, "cover split must leave a positive complement");
        const QuotientClass qcT = subgroup_quotient_genus(G, T);
        IsogenyFactor pf;
        pf.kind = FactorKind::remainder;
        pf.dim = prym;
        pf.id = fmt::format("Prym(C over {})", qcT.id);
        dec.expression = std::move(base);
        dec.expression[pf] = 1;
        Refinement split;
        split.factor_id = jc.id;
        split.covers = {fT.id};
        split.remainder_dim = prym;
        dec.refinements.push_back(std::move(split));
        split_done = true;
        break;
      }
      ensure(split_done,
             "no translation quotient resolves the Jacobian integrally");
    }
  }
  ensure(dimension_of(dec.expression) == curve.genus(),
         "decomposition must preserve the total dimension");

  for (const auto& [id, def] : defs) {
    if (id == jc.id) continue;
    const Row& full_row = expanded.at(id);
    if (!is_clean(full_row)) continue;  // internal eliminator artifact
    dec.derived.emplace_back(id, to_expression(full_row));
  }

  // Refinement: peel elliptic covers off residual factors of dim >= 2.  A
  // genus-1 class covers a class c when some representative subgroup of c
  // is contained in a representative of the genus-1 class; the quotient
  // Jacobian then splits off that elliptic curve (exactly for the first
  // peel, under a logged independence assumption for later ones).
  std::map<std::string, std::set<std::string>> elliptic_covers;
  {
    const auto& subs = G.subgroups();
    std::vector<IsogenyFactor> sub_factor(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      sub_factor[i] = factor_for(G, subs[i]);
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (sub_factor[i].dim < 2 || sub_factor[i].kind == FactorKind::surface) {
        continue;
      }
      for (std::size_t j = 0; j < subs.size(); ++j) {
        if (sub_factor[j].dim != 1) continue;
        if (subs[j].size() % subs[i].size() != 0) continue;
        if (std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(),
                          subs[i].end())) {
          elliptic_covers[sub_factor[i].id].insert(sub_factor[j].id);
        }
      }
    }
  }

  bool used_A_flag = false;
  for (const auto& [f, mult] : dec.expression) {
    if (f.kind == FactorKind::surface) {
      dec.final_pieces.emplace_back(f.id, f.dim, mult);
      if (opts.assume_A_split) used_A_flag = true;
      continue;
    }
    if (f.dim <= 1) {
      dec.final_pieces.emplace_back(f.id, f.dim, mult);
      continue;
    }
    auto cov = elliptic_covers.find(f.id);
    if (cov == elliptic_covers.end() || cov->second.empty()) {
      dec.final_pieces.emplace_back(f.id, f.dim, mult);
      continue;
    }
    Refinement ref;
    ref.factor_id = f.id;
    std::int64_t remaining = f.dim;
    for (const auto& cid : cov->second) {
      if (remaining == 0) break;
      ref.covers.push_back(cid);
      --remaining;
      dec.final_pieces.emplace_back(cid, 1, mult);
    }
    ref.remainder_dim = remaining;
    if (remaining > 0) {
      dec.final_pieces.emplace_back(fmt::format("Prym({})", f.id), remaining,
                                    mult);
    }
    if (ref.covers.size() >= 2) {
      dec.assumptions.push_back(fmt::format(
          "distinctness: the elliptic covers {} are assumed to pull back to "
          "complementary subvarieties of {}",
          fmt::join(ref.covers, ", "), f.id));
    }
    dec.refinements.push_back(std::move(ref));
  }

  if (used_A_flag) {
    dec.assumptions.push_back(
        "A is assumed isogenous to a product of elliptic curves "
        "(assume-A-split)");
  }

  bool complete = true;
  for (const auto& [id, dim, mult] : dec.final_pieces) {
    if (dim <= 1) continue;
    if (id == "A" && opts.assume_A_split) continue;
    complete = false;
  }
  dec.verdict =
      complete ? Verdict::completely_decomposable : Verdict::undetermined;
  return dec;
}

EllipticCoverReport elliptic_cover_report(std::int64_t d, std::int64_t j,
                                          std::int64_t k) {
  require(j >= 2 && j <= 4, "the intermediate index j must be 2, 3, or 4");
  require(k >= 1 && d == j * k, "d must factor as j*k");
  const std::int64_t d1 = std::lcm(j, k), d2 = std::gcd(j, k);
  PolarizationContext ctx(d);
  FiniteSubgroup X = span({(d / d1) * ctx.k1(), (d / d2) * ctx.k2()});
  ensure(X.order() == d, "the translation subgroup must have order d");
  CoverCurve curve = make_cover_curve(ctx, X);

  EllipticCoverReport rep;
  rep.d = d;
  rep.j = j;
  rep.k = k;
  rep.X_gens = X.generators();
  rep.prym_dim = d - j;

  // x2 of order j, then x1 of order k with <x1> n <x2> = 0 spanning X:
  // canonical-first choices.
  const auto& els = X.elements();
  bool have_x2 = false;
  for (const auto& p : els) {
    if (point_order(p) == j) {
      rep.x2 = p;
      have_x2 = true;
      break;
    }
  }
  require(have_x2, "X has no element of order j");
  bool have_x1 = false;
  for (const auto& p : els) {
    if (point_order(p) != k) continue;
    if (span({p, rep.x2}).order() == d) {
      rep.x1 = p;
      have_x1 = true;
      break;
    }
  }
  require(have_x1, "X does not split as <x1> x <x2> with the given orders");

  AutGroup G(curve);
  Decomposition dec = decompose(curve);

  // The intermediate curve C~ = C/<t_x1> of genus j+1 and its Jacobian.
  SubgroupIdx Hx1 = G.closure({G.index_of({+1, rep.x1})});
  QuotientClass qc = subgroup_quotient_genus(G, Hx1);
  rep.intermediate_genus = qc.genus;
  ensure(rep.intermediate_genus == j + 1,
         "the intermediate curve must have genus j+1");
  const IsogenyFactor f_int = factor_for(G, Hx1);
  rep.intermediate_id = f_int.id;
  bool found_rule = false;
  for (const auto& [id, expr] : dec.derived) {
    if (id == f_int.id) {
      rep.intermediate_jacobian = expr;
      found_rule = true;
      break;
    }
  }
  if (!found_rule) {
    if (f_int.id == factor_for(G, SubgroupIdx{0}).id) {
      rep.intermediate_jacobian = dec.expression;
    } else {
      rep.intermediate_jacobian[f_int] = 1;  // no finer rule was derived
    }
  }

  // Witness: an order-d subgroup with genus-1 quotient exhibits an elliptic
  // quotient of C through a degree-d cover.  Subgroups come sorted by
  // (order, lexicographic), so the fallback keeps the largest cover seen.
  std::int64_t best_order = 0;
  for (const auto& S : G.subgroups()) {
    QuotientClass q = subgroup_quotient_genus(G, S);
    if (q.genus != 1) continue;
    if (static_cast<std::int64_t>(S.size()) == d) {
      rep.degree_d_witness_found = true;
      rep.witness_id = "J(" + q.id + ")";
      rep.witness_genus = 1;
      rep.cover_degree = d;
      break;
    }
    if (static_cast<std::int64_t>(S.size()) > best_order) {
      best_order = static_cast<std::int64_t>(S.size());
      rep.witness_id = "J(" + q.id + ")";
      rep.witness_genus = 1;
      rep.cover_degree = best_order;
    }
  }
  return rep;
}

}  // namespace avc
