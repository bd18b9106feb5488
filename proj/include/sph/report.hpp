#pragma once

#include "sph/adapted.hpp"
#include "sph/irrep.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sph {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json };

struct AnalysisRequest {
  std::string group;
  std::vector<Weight> weights;
  bool run_oracle = false;
  bool enumerate_subsets = false;
  std::optional<std::size_t> max_subset_size;  // defaults to the rank of Gamma
  OutputFormat output_format = OutputFormat::Text;
  std::size_t irrep_dim_cap = kDefaultIrrepDimCap;
  std::size_t subset_cap = kDefaultSubsetCap;

  friend bool operator==(const AnalysisRequest&, const AnalysisRequest&) = default;
};

struct RootEntry {
  std::string tag;
  RootVector vector;
  std::string kind;
  std::string support_type;
  bool adapted = false;
  std::string adapted_failed;
  bool n_adapted = false;
  std::string n_adapted_failed;
  std::string detail;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct SubsetReport {
  std::vector<std::string> roots;
  bool maximal = false;

  friend bool operator==(const SubsetReport&, const SubsetReport&) = default;
};

struct SubsetSection {
  std::size_t max_size = 0;
  std::size_t examined = 0;
  bool complete = true;
  std::vector<SubsetReport> subsets;

  friend bool operator==(const SubsetSection&, const SubsetSection&) = default;
};

struct OracleWeightEntry {
  std::string tag;
  RootVector vector;
  bool in_catalog = false;
  bool compatible = false;
  std::size_t quotient_dim = 0;
  std::size_t tangent_dim = 0;

  friend bool operator==(const OracleWeightEntry&, const OracleWeightEntry&) = default;
};

struct OracleSection {
  std::vector<std::string> weights;
  std::vector<OracleWeightEntry> quotient;
  std::vector<std::size_t> codim1;  // 1-based positions in F
  bool multiplicity_free = true;
  std::size_t gx0_dimension = 0;
  bool gx0_verified = true;
  bool agreement = true;

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct AnalysisReport {
  int schema_version = kSchemaVersion;
  AnalysisRequest request;
  std::string group;
  std::size_t rank = 0;
  std::vector<std::size_t> sp_gamma;           // 1-based simple-root indices
  std::vector<std::vector<std::string>> e_gamma;  // rationals as "p/q"
  std::vector<RootEntry> catalog;
  std::size_t tangent_dimension = 0;
  std::vector<std::string> tangent_weights;
  std::optional<SubsetSection> subsets;
  std::optional<OracleSection> oracle;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Parses a json array of integer arrays, e.g. "[[2,0],[4,2]]".
std::vector<Weight> parse_weights(const std::string& text);

/// Runs every requested analysis. Validation failures throw sph::Error; a
/// subset budget overrun is recorded in the report (complete = false).
AnalysisReport run(const AnalysisRequest& request);

nlohmann::ordered_json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const AnalysisReport& report);

nlohmann::ordered_json error_json(const Error& e);

}  // namespace sph
