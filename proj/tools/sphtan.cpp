// sphtan: spherical roots and tangent-space weights for a free weight monoid.
//
//   sphtan analyze --group A1xA1 --weights "[[2,0],[4,2]]" [--json] [--oracle] [--subsets]
//
// Exit status: 0 success, 1 invalid input, 2 oracle disagrees with the
// combinatorial weights, 3 a dimension or search budget was exceeded.

#include "sph/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitBudget = 3;

int report_error(const sph::Error& e, bool json) {
  if (json) {
    std::cout << sph::error_json(e).dump(2) << "\n";
  } else {
    std::cerr << "error [" << sph::to_string(e.code()) << "]";
    if (e.position()) std::cerr << " at position " << *e.position();
    std::cerr << ": " << e.what() << "\n";
  }
  const bool budget =
      e.code() == sph::Errc::DimensionBudgetExceeded || e.code() == sph::Errc::SearchBudgetExceeded;
  return budget ? kExitBudget : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherically closed spherical roots adapted to a free weight monoid"};
  app.require_subcommand(1);

  sph::AnalysisRequest req;
  std::string weights;
  bool json = false;
  std::size_t max_size = 0;

  auto* analyze = app.add_subcommand("analyze", "Analyze a group and a basis of dominant weights");
  analyze->add_option("--group", req.group, "Dynkin type, e.g. A1xA1 or B3")->required();
  analyze->add_option("--weights", weights, "Basis in fundamental coordinates, e.g. \"[[2,0],[4,2]]\"")
      ->required();
  analyze->add_flag("--json", json, "Emit the json report");
  analyze->add_flag("--oracle", req.run_oracle, "Recompute the tangent weights by linear algebra");
  analyze->add_flag("--subsets", req.enumerate_subsets, "Enumerate N-adapted subsets");
  auto* max_opt = analyze->add_option("--max-subset-size", max_size, "Largest subset size (default: rank)");
  analyze->add_option("--irrep-dim-cap", req.irrep_dim_cap, "Largest irrep dimension the oracle builds");
  analyze->add_option("--subset-cap", req.subset_cap, "Largest number of subsets examined");

  CLI11_PARSE(app, argc, argv);

  if (max_opt->count() > 0) req.max_subset_size = max_size;
  req.output_format = json ? sph::OutputFormat::Json : sph::OutputFormat::Text;

  sph::AnalysisReport report;
  try {
    req.weights = sph::parse_weights(weights);
    report = sph::run(req);
  } catch (const sph::Error& e) {
    return report_error(e, json);
  }

  if (json)
    std::cout << sph::to_json(report).dump(2) << "\n";
  else
    std::cout << sph::render_text(report);

  if (report.oracle && !report.oracle->agreement) {
    std::cerr << "oracle disagreement\n  oracle: ";
    for (const auto& w : report.oracle->weights) std::cerr << w << " ";
    std::cerr << "\n  combinatorial: ";
    for (const auto& w : report.tangent_weights) std::cerr << w << " ";
    std::cerr << "\n";
    return kExitDisagreement;
  }
  if (report.subsets && !report.subsets->complete) return kExitBudget;
  return 0;
}
