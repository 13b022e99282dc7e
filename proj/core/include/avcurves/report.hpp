#ifndef AVCURVES_REPORT_HPP_
#define AVCURVES_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "avcurves/curve.hpp"
#include "avcurves/kani_rosen.hpp"

namespace avc {

// User-facing analysis documents: one structure holding everything the
// analyze and census commands report, with deterministic text and JSON
// renderers.  The JSON key set {input, normalized_basis, fix_counts,
// partitions, relations, decomposition, assumptions, census} is a stable
// interface; sections that do not apply are omitted.

struct AnalyzeOptions {
  bool assume_A_split = false;
  std::int64_t max_group_order = 200;
  int jobs = 1;
};

struct ReportDocument {
  // Input echo.
  std::int64_t d = 0;
  std::vector<TorsionPoint> generators;        // as supplied
  std::vector<TorsionPoint> normalized_basis;  // compatible basis k1', k2'
  std::int64_t genus = 0;
  bool assume_A_split = false;

  // Fixed-point table of the involutions [-1] o t_x over all x in X,
  // in canonical element order.
  std::vector<FixReport> fix_counts;

  // Partitions of the automorphism group, each part by its label.
  std::vector<std::vector<std::string>> partitions;

  // Relations, derived rules, refinements, assumptions, verdict.
  Decomposition decomposition;

  // Census section (census documents only).
  bool has_census = false;
  CensusRow census;
};

// Full analysis of a (d, X) instance.
ReportDocument analyze(const CoverCurve& curve, const AnalyzeOptions& opts = {});
ReportDocument analyze(std::int64_t d, const std::vector<TorsionPoint>& X_gens,
                       const AnalyzeOptions& opts = {});

// Census-only document.
ReportDocument census_report(std::int64_t d);

// Parses the CLI subgroup syntax "a,b;c,e": semicolon-separated integer
// pairs taken mod d, the pair (a, b) meaning a*(1/d, 0) + b*(0, 1/d).
// Whitespace around numbers is permitted.  An empty string yields no
// generators (the trivial subgroup, valid only for d = 1).
std::vector<TorsionPoint> parse_subgroup(std::int64_t d,
                                         const std::string& text);

// Renderers.  Both are deterministic: equal documents give equal bytes, and
// the JSON form round-trips (parse + re-emit is the identity).
std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

}  // namespace avc

#endif  // AVCURVES_REPORT_HPP_
