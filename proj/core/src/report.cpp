#include "avcurves/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cctype>
#include <string>
#include <vector>

#include "avcurves/errors.hpp"
#include "json.hpp"

namespace avc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::surface: return "surface";
    case FactorKind::jac_quotient: return "jacobian-quotient";
    case FactorKind::elliptic: return "elliptic";
    case FactorKind::trivial: return "trivial";
    case FactorKind::remainder: return "remainder";
  }
  return "?";
}

}  // namespace

ReportDocument analyze(const CoverCurve& curve, const AnalyzeOptions& opts) {
  ReportDocument doc;
  doc.d = curve.d();
  doc.generators = curve.X().generators();
  doc.normalized_basis = {curve.ctx().k1(), curve.ctx().k2()};
  doc.genus = curve.genus();
  doc.assume_A_split = opts.assume_A_split;

  for (const TorsionPoint& x : curve.X().elements()) {
    doc.fix_counts.push_back(fix_count(curve, x));
  }

  AutGroup G(curve);
  for (const Partition& p : find_partitions(G, opts.max_group_order)) {
    std::vector<std::string> labels;
    labels.reserve(p.parts.size());
    for (const SubgroupIdx& part : p.parts) labels.push_back(G.label(part));
    doc.partitions.push_back(std::move(labels));
  }

  DecomposeOptions dopts;
  dopts.assume_A_split = opts.assume_A_split;
  dopts.max_group_order = opts.max_group_order;
  dopts.jobs = opts.jobs;
  doc.decomposition = decompose(curve, dopts);
  return doc;
}

ReportDocument analyze(std::int64_t d, const std::vector<TorsionPoint>& X_gens,
                       const AnalyzeOptions& opts) {
  return analyze(make_cover_curve(d, X_gens), opts);
}

ReportDocument census_report(std::int64_t d) {
  ReportDocument doc;
  doc.d = d;
  doc.has_census = true;
  doc.census = census_row(d);
  return doc;
}

std::vector<TorsionPoint> parse_subgroup(std::int64_t d,
                                         const std::string& text) {
  require(d >= 1, "the polarization degree d must be at least 1");
  std::vector<TorsionPoint> gens;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos == text.size()) return gens;  // trivial subgroup

  const auto read_int = [&]() -> std::int64_t {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    require(pos > start && std::isdigit(static_cast<unsigned char>(
                               text[pos - 1])),
            fmt::format("subgroup syntax: expected an integer at position {} "
                        "of \"{}\" (use \"a,b;c,e\" with integers mod d)",
                        start, text));
    return std::stoll(text.substr(start, pos - start));
  };

  while (true) {
    const std::int64_t a = read_int();
    skip_space();
    require(pos < text.size() && text[pos] == ',',
            fmt::format("subgroup syntax: expected ',' between the two "
                        "coordinates of a generator in \"{}\"",
                        text));
    ++pos;
    const std::int64_t b = read_int();
    const auto reduce = [d](std::int64_t v) {
      v %= d;
      if (v < 0) v += d;
      return v;
    };
    gens.push_back(TorsionPoint{Rational01(reduce(a), d),
                                Rational01(reduce(b), d)});
    skip_space();
    if (pos == text.size()) break;
    require(text[pos] == ';',
            fmt::format("subgroup syntax: expected ';' between generators "
                        "in \"{}\"",
                        text));
    ++pos;
    skip_space();
    require(pos < text.size(),
            fmt::format("subgroup syntax: trailing ';' in \"{}\"", text));
  }
  return gens;
}

std::string render_text(const ReportDocument& doc) {
  std::string out;
  const auto line = [&out](std::string s) {
    out += s;
    out += '\n';
  };

  if (doc.has_census) {
    line(fmt::format("census: smooth hyperelliptic members for d = {}",
                     doc.d));
    line(fmt::format("  count: {}", doc.census.count));
    for (const std::string& step : doc.census.derivation) {
      line(fmt::format("  - {}", step));
    }
    if (doc.census.external) {
      line("  note: realized by curves outside this construction");
    }
    return out;
  }

  std::vector<std::string> gen_strs;
  for (const auto& g : doc.generators) gen_strs.push_back(to_string(g));
  line(fmt::format("(1,{})-polarized abelian surface, X = <{}>", doc.d,
                   fmt::join(gen_strs, ", ")));
  line(fmt::format("curve genus: {}", doc.genus));
  std::vector<std::string> basis_strs;
  for (const auto& b : doc.normalized_basis) basis_strs.push_back(to_string(b));
  line(fmt::format("normalized basis: {}", fmt::join(basis_strs, ", ")));
  line("");

  line("fixed points of [-1] o t_x:");
  for (const FixReport& row : doc.fix_counts) {
    std::string detail = fmt::format("branch {}, translate {}",
                                     to_string(row.branch),
                                     to_string(row.sts));
    if (row.parity) {
      detail += fmt::format(", descended parity {}", to_string(*row.parity));
    }
    line(fmt::format("  x = {:<12} #Fix = {:>2}   [{}]", to_string(row.x),
                     row.count, detail));
  }
  line("");

  line(fmt::format("partitions of the automorphism group (order {}):",
                   2 * doc.d));
  if (doc.partitions.empty()) {
    line("  none");
  }
  for (std::size_t i = 0; i < doc.partitions.size(); ++i) {
    line(fmt::format("  {}. {}", i + 1,
                     fmt::join(doc.partitions[i], " | ")));
  }
  line("");

  line("isogeny relations:");
  if (doc.decomposition.relations.empty()) {
    line("  none");
  }
  for (const Relation& rel : doc.decomposition.relations) {
    line(fmt::format("  {}", to_string(rel)));
  }
  line("");

  line(fmt::format("decomposition: J(C) ~ {}",
                   to_string(doc.decomposition.expression)));
  if (!doc.decomposition.derived.empty()) {
    line("derived rules:");
    for (const auto& [id, expr] : doc.decomposition.derived) {
      line(fmt::format("  {} ~ {}", id, to_string(expr)));
    }
  }
  if (!doc.decomposition.refinements.empty()) {
    line("refinements:");
    for (const Refinement& r : doc.decomposition.refinements) {
      line(fmt::format("  {} covers {}; remainder dimension {}", r.factor_id,
                       fmt::join(r.covers, ", "), r.remainder_dim));
    }
  }
  if (!doc.decomposition.assumptions.empty()) {
    line("assumptions:");
    for (const std::string& a : doc.decomposition.assumptions) {
      line(fmt::format("  - {}", a));
    }
  }
  if (!doc.decomposition.final_pieces.empty()) {
    std::vector<std::string> pieces;
    for (const auto& [id, dim, mult] : doc.decomposition.final_pieces) {
      pieces.push_back(mult == 1 ? fmt::format("{} (dim {})", id, dim)
                                 : fmt::format("{}^{} (dim {})", id, mult,
                                               dim));
    }
    line(fmt::format("final pieces: {}", fmt::join(pieces, " x ")));
  }
  line(fmt::format("verdict: {}", to_string(doc.decomposition.verdict)));
  return out;
}

std::string render_json(const ReportDocument& doc) {
  ordered_json j;

  ordered_json input;
  input["d"] = doc.d;
  if (!doc.has_census) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : doc.generators) gens.push_back(to_string(g));
    input["subgroup"] = gens;
    input["assume_A_split"] = doc.assume_A_split;
  }
  j["input"] = input;

  if (!doc.normalized_basis.empty()) {
    ordered_json basis = ordered_json::array();
    for (const auto& b : doc.normalized_basis) basis.push_back(to_string(b));
    j["normalized_basis"] = basis;
  }

  if (!doc.fix_counts.empty()) {
    ordered_json rows = ordered_json::array();
    for (const FixReport& row : doc.fix_counts) {
      ordered_json r;
      r["x"] = to_string(row.x);
      r["count"] = row.count;
      r["branch"] = to_string(row.branch);
      r["translate"] = to_string(row.sts);
      if (row.parity) r["parity"] = to_string(*row.parity);
      rows.push_back(std::move(r));
    }
    j["fix_counts"] = rows;
  }

  if (!doc.partitions.empty()) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : doc.partitions) {
      parts.push_back(ordered_json(p));
    }
    j["partitions"] = parts;
  }

  if (!doc.decomposition.relations.empty()) {
    ordered_json rels = ordered_json::array();
    for (const Relation& rel : doc.decomposition.relations) {
      ordered_json r;
      r["lhs"] = to_string(rel.lhs);
      r["rhs"] = to_string(rel.rhs);
      r["provenance"] = rel.provenance;
      rels.push_back(std::move(r));
    }
    j["relations"] = rels;
  }

  if (!doc.has_census) {
    const Decomposition& dec = doc.decomposition;
    ordered_json d;
    d["expression"] = to_string(dec.expression);
    d["dimension"] = dimension_of(dec.expression);
    ordered_json factors = ordered_json::array();
    for (const auto& [f, m] : dec.expression) {
      ordered_json fj;
      fj["id"] = f.id;
      fj["kind"] = kind_name(f.kind);
      fj["dim"] = f.dim;
      fj["multiplicity"] = m;
      factors.push_back(std::move(fj));
    }
    d["factors"] = factors;
    if (!dec.derived.empty()) {
      ordered_json rules = ordered_json::array();
      for (const auto& [id, expr] : dec.derived) {
        ordered_json r;
        r["factor"] = id;
        r["expression"] = to_string(expr);
        rules.push_back(std::move(r));
      }
      d["derived"] = rules;
    }
    if (!dec.refinements.empty()) {
      ordered_json refs = ordered_json::array();
      for (const Refinement& r : dec.refinements) {
        ordered_json rj;
        rj["factor"] = r.factor_id;
        rj["covers"] = ordered_json(r.covers);
        rj["remainder_dim"] = r.remainder_dim;
        refs.push_back(std::move(rj));
      }
      d["refinements"] = refs;
    }
    if (!dec.final_pieces.empty()) {
      ordered_json pieces = ordered_json::array();
      for (const auto& [id, dim, mult] : dec.final_pieces) {
        ordered_json pj;
        pj["id"] = id;
        pj["dim"] = dim;
        pj["multiplicity"] = mult;
        pieces.push_back(std::move(pj));
      }
      d["final_pieces"] = pieces;
    }
    d["verdict"] = to_string(dec.verdict);
    j["decomposition"] = d;
  }

  if (!doc.decomposition.assumptions.empty()) {
    j["assumptions"] = ordered_json(doc.decomposition.assumptions);
  }

  if (doc.has_census) {
    ordered_json c;
    c["d"] = doc.census.d;
    c["count"] = doc.census.count;
    c["derivation"] = ordered_json(doc.census.derivation);
    c["external"] = doc.census.external;
    j["census"] = c;
  }

  return j.dump(2) + "\n";
}

}  // namespace avc
