// Command-line front door: analyze a (d, X) instance, run the
// hyperelliptic census, or execute the built-in regression fixtures.
//
// Exit codes: 0 success, 1 input error, 2 fixture failure, 3 internal
// invariant violation.

#include <fmt/format.h>

#include <cstdint>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "avcurves/errors.hpp"
#include "avcurves/report.hpp"
#include "avcurves/verify.hpp"
#include "json.hpp"

namespace {

int run_analyze(std::int64_t d, const std::string& subgroup,
                const std::string& format, const avc::AnalyzeOptions& opts) {
  const avc::ReportDocument doc =
      avc::analyze(d, avc::parse_subgroup(d, subgroup), opts);
  fmt::print("{}", format == "json" ? avc::render_json(doc)
                                    : avc::render_text(doc));
  return 0;
}

int run_census(std::int64_t d, const std::string& format) {
  const avc::ReportDocument doc = avc::census_report(d);
  fmt::print("{}", format == "json" ? avc::render_json(doc)
                                    : avc::render_text(doc));
  return 0;
}

int run_verify(const std::string& format) {
  const auto results = avc::run_fixtures();
  if (format == "json") {
    nlohmann::ordered_json j;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const avc::FixtureResult& r : results) {
      nlohmann::ordered_json row;
      row["id"] = r.id;
      row["passed"] = r.passed;
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    j["fixtures"] = rows;
    j["all_passed"] = avc::all_passed(results);
    fmt::print("{}\n", j.dump(2));
  } else {
    for (const avc::FixtureResult& r : results) {
      fmt::print("[{}] {}\n", r.passed ? "PASS" : "FAIL", r.id);
      if (!r.passed) fmt::print("       {}\n", r.detail);
    }
  }
  if (!avc::all_passed(results)) {
    std::string failing;
    for (const avc::FixtureResult& r : results) {
      if (r.passed) continue;
      if (!failing.empty()) failing += ", ";
      failing += r.id;
    }
    fmt::print(stderr, "fixture failures: {}\n", failing);
    return 2;
  }
  fmt::print("all fixtures passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "curves in the linear systems of (1,d)-polarized abelian surfaces: "
      "fixed-point tables, group partitions, and Jacobian decompositions"};
  app.require_subcommand(1);

  std::int64_t d = 1;
  std::string subgroup;
  std::string format = "text";
  bool assume_split = false;
  std::int64_t max_group_order = 200;
  int jobs = 1;

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "full report for one (d, X) instance");
  analyze_cmd->add_option("--d", d, "polarization degree (type (1,d))")
      ->required();
  analyze_cmd->add_option(
      "--subgroup", subgroup,
      "generators of X as \"a,b;c,e\" with integers mod d, the pair (a,b) "
      "meaning a*(1/d,0) + b*(0,1/d); empty for the trivial subgroup");
  add_format(analyze_cmd);
  analyze_cmd->add_flag(
      "--assume-A-split", assume_split,
      "allow the verdict to treat the surface factor A as a product of "
      "elliptic curves");
  analyze_cmd->add_option("--max-group-order", max_group_order,
                          "partition-search refusal bound")
      ->capture_default_str();
  analyze_cmd->add_option("--jobs", jobs, "parallel workers for the engine")
      ->capture_default_str();

  CLI::App* census_cmd = app.add_subcommand(
      "census", "smooth hyperelliptic members of the linear system");
  census_cmd->add_option("--d", d, "polarization degree")->required();
  add_format(census_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-paper", "run the built-in regression fixtures");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // help/version are success; bad usage is input error
  }

  try {
    if (analyze_cmd->parsed()) {
      avc::AnalyzeOptions opts;
      opts.assume_A_split = assume_split;
      opts.max_group_order = max_group_order;
      opts.jobs = jobs;
      return run_analyze(d, subgroup, format, opts);
    }
    if (census_cmd->parsed()) return run_census(d, format);
    if (verify_cmd->parsed()) return run_verify(format);
  } catch (const avc::invariant_error& e) {
    fmt::print(stderr, "internal invariant violation: {}\n", e.what());
    return 3;
  } catch (const avc::domain_error& e) {
    fmt::print(stderr, "input error: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return 3;
  }
  return 0;
}
