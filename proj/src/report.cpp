#include "sph/report.hpp"

#include "sph/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sph {

using Json = nlohmann::ordered_json;

std::vector<Weight> parse_weights(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("weights are not valid json: ") + e.what(), e.byte);
  }
  if (!j.is_array()) throw Error(Errc::Parse, "weights must be a json array of integer arrays");
  std::vector<Weight> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& w = j[k];
    if (!w.is_array()) throw Error(Errc::Parse, "weight at index " + std::to_string(k) + " is not an array", k);
    Weight v;
    for (const auto& x : w) {
      if (!x.is_number_integer())
        throw Error(Errc::Parse, "weight at index " + std::to_string(k) + " has a non-integer entry", k);
      v.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<std::string> tags(const std::vector<SphericalRoot>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(r.tag());
  return out;
}

std::set<RootVector> vectors(const std::vector<SphericalRoot>& roots) {
  std::set<RootVector> out;
  for (const auto& r : roots) out.insert(r.vector);
  return out;
}

OracleSection oracle_section(const WeightMonoidContext& ctx, const TangentReport& tangent, std::size_t dim_cap) {
  const OracleReport rep = run_oracle(ctx, dim_cap);
  OracleSection out;
  out.weights = tags(rep.tangent_weights);
  for (const auto& ow : rep.quotient)
    out.quotient.push_back({ow.root.kind == RootKind::Unclassified ? vector_tag(ow.root.vector) : ow.root.tag(),
                            ow.root.vector, ow.root.kind != RootKind::Unclassified, ow.compatible, ow.quotient_dim,
                            ow.tangent_dim});
  for (auto k : rep.codim1) out.codim1.push_back(k + 1);
  out.multiplicity_free = rep.multiplicity_free;
  out.gx0_dimension = rep.gx0_dimension;
  out.gx0_verified = rep.gx0_verified;
  out.agreement = rep.multiplicity_free && rep.gx0_verified &&
                  vectors(rep.tangent_weights) == vectors(tangent.weights);
  return out;
}

SubsetSection subset_section(const WeightMonoidContext& ctx, std::size_t max_size, std::size_t cap) {
  SubsetSection out;
  out.max_size = max_size;
  SubsetEnumeration en;
  try {
    en = enumerate_n_adapted_subsets(ctx, max_size, cap);
  } catch (const SearchBudgetError& e) {
    en = e.partial();
    out.complete = false;
  }
  out.examined = en.examined;
  for (const auto& s : en.subsets) out.subsets.push_back({tags(s.sigma), s.maximal});
  return out;
}

}  // namespace

AnalysisReport run(const AnalysisRequest& request) {
  const RootSystem rs = build_root_system(request.group);
  const WeightMonoidContext ctx(rs, request.weights);

  AnalysisReport report;
  report.request = request;
  report.group = rs.name();
  report.rank = ctx.rank();
  for (auto i : ctx.sp_gamma()) report.sp_gamma.push_back(i + 1);
  for (const auto& f : ctx.e_gamma()) {
    std::vector<std::string> vals;
    for (const auto& x : f.values) vals.push_back(to_string(x));
    report.e_gamma.push_back(std::move(vals));
  }

  const TangentReport tangent = tangent_space(ctx);
  for (const auto& d : tangent.diagnostics) {
    RootEntry e;
    e.tag = d.root.tag();
    e.vector = d.root.vector;
    e.kind = std::string(to_string(d.root.kind));
    e.support_type = d.root.support_type;
    e.adapted = d.adapted.ok;
    e.adapted_failed = d.adapted.failed;
    e.n_adapted = d.n_adapted.ok;
    e.n_adapted_failed = d.n_adapted.failed;
    e.detail = !d.n_adapted.ok ? d.n_adapted.detail : d.adapted.detail;
    report.catalog.push_back(std::move(e));
  }
  report.tangent_dimension = tangent.dimension;
  report.tangent_weights = tags(tangent.weights);

  if (request.enumerate_subsets)
    report.subsets = subset_section(ctx, request.max_subset_size.value_or(ctx.rank()), request.subset_cap);
  if (request.run_oracle) report.oracle = oracle_section(ctx, tangent, request.irrep_dim_cap);
  return report;
}

// ---------------------------------------------------------------------------
// json

namespace {

Json request_json(const AnalysisRequest& r) {
  Json j;
  j["group"] = r.group;
  j["weights"] = r.weights;
  j["run_oracle"] = r.run_oracle;
  j["enumerate_subsets"] = r.enumerate_subsets;
  j["max_subset_size"] = r.max_subset_size ? Json(*r.max_subset_size) : Json(nullptr);
  j["output_format"] = r.output_format == OutputFormat::Json ? "json" : "text";
  j["irrep_dim_cap"] = r.irrep_dim_cap;
  j["subset_cap"] = r.subset_cap;
  return j;
}

AnalysisRequest request_from(const Json& j) {
  AnalysisRequest r;
  r.group = j.at("group").get<std::string>();
  r.weights = j.at("weights").get<std::vector<Weight>>();
  r.run_oracle = j.at("run_oracle").get<bool>();
  r.enumerate_subsets = j.at("enumerate_subsets").get<bool>();
  if (!j.at("max_subset_size").is_null()) r.max_subset_size = j.at("max_subset_size").get<std::size_t>();
  r.output_format = j.at("output_format").get<std::string>() == "json" ? OutputFormat::Json : OutputFormat::Text;
  r.irrep_dim_cap = j.at("irrep_dim_cap").get<std::size_t>();
  r.subset_cap = j.at("subset_cap").get<std::size_t>();
  return r;
}

Json root_json(const RootEntry& e) {
  Json j;
  j["tag"] = e.tag;
  j["vector"] = e.vector;
  j["kind"] = e.kind;
  j["support_type"] = e.support_type;
  j["adapted"] = e.adapted;
  j["adapted_failed"] = e.adapted_failed;
  j["n_adapted"] = e.n_adapted;
  j["n_adapted_failed"] = e.n_adapted_failed;
  j["detail"] = e.detail;
  return j;
}

RootEntry root_from(const Json& j) {
  return {j.at("tag").get<std::string>(),          j.at("vector").get<RootVector>(),
          j.at("kind").get<std::string>(),         j.at("support_type").get<std::string>(),
          j.at("adapted").get<bool>(),             j.at("adapted_failed").get<std::string>(),
          j.at("n_adapted").get<bool>(),           j.at("n_adapted_failed").get<std::string>(),
          j.at("detail").get<std::string>()};
}

Json subsets_json(const SubsetSection& s) {
  Json j;
  j["max_size"] = s.max_size;
  j["examined"] = s.examined;
  j["complete"] = s.complete;
  Json list = Json::array();
  for (const auto& e : s.subsets) {
    Json x;
    x["roots"] = e.roots;
    x["dimension"] = e.roots.size();
    x["maximal"] = e.maximal;
    list.push_back(std::move(x));
  }
  j["entries"] = std::move(list);
  return j;
}

SubsetSection subsets_from(const Json& j) {
  SubsetSection s;
  s.max_size = j.at("max_size").get<std::size_t>();
  s.examined = j.at("examined").get<std::size_t>();
  s.complete = j.at("complete").get<bool>();
  for (const auto& x : j.at("entries"))
    s.subsets.push_back({x.at("roots").get<std::vector<std::string>>(), x.at("maximal").get<bool>()});
  return s;
}

Json oracle_json(const OracleSection& o) {
  Json j;
  j["agreement"] = o.agreement;
  j["weights"] = o.weights;
  Json list = Json::array();
  for (const auto& q : o.quotient) {
    Json x;
    x["tag"] = q.tag;
    x["vector"] = q.vector;
    x["in_catalog"] = q.in_catalog;
    x["compatible"] = q.compatible;
    x["quotient_dim"] = q.quotient_dim;
    x["tangent_dim"] = q.tangent_dim;
    list.push_back(std::move(x));
  }
  j["quotient"] = std::move(list);
  j["codim1"] = o.codim1;
  j["multiplicity_free"] = o.multiplicity_free;
  j["gx0_dimension"] = o.gx0_dimension;
  j["gx0_verified"] = o.gx0_verified;
  return j;
}

OracleSection oracle_from(const Json& j) {
  OracleSection o;
  o.agreement = j.at("agreement").get<bool>();
  o.weights = j.at("weights").get<std::vector<std::string>>();
  for (const auto& x : j.at("quotient"))
    o.quotient.push_back({x.at("tag").get<std::string>(), x.at("vector").get<RootVector>(),
                          x.at("in_catalog").get<bool>(), x.at("compatible").get<bool>(),
                          x.at("quotient_dim").get<std::size_t>(), x.at("tangent_dim").get<std::size_t>()});
  o.codim1 = j.at("codim1").get<std::vector<std::size_t>>();
  o.multiplicity_free = j.at("multiplicity_free").get<bool>();
  o.gx0_dimension = j.at("gx0_dimension").get<std::size_t>();
  o.gx0_verified = j.at("gx0_verified").get<bool>();
  return o;
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["request"] = request_json(r.request);
  j["group"] = r.group;
  j["rank"] = r.rank;
  j["sp_gamma"] = r.sp_gamma;
  j["e_gamma"] = r.e_gamma;
  Json cat = Json::array();
  for (const auto& e : r.catalog) cat.push_back(root_json(e));
  j["catalog"] = std::move(cat);
  j["tangent_dimension"] = r.tangent_dimension;
  j["tangent_weights"] = r.tangent_weights;
  if (r.subsets) j["subsets"] = subsets_json(*r.subsets);
  if (r.oracle) j["oracle"] = oracle_json(*r.oracle);
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion)
    throw Error(Errc::Parse, "unsupported schema_version " + std::to_string(r.schema_version));
  r.request = request_from(j.at("request"));
  r.group = j.at("group").get<std::string>();
  r.rank = j.at("rank").get<std::size_t>();
  r.sp_gamma = j.at("sp_gamma").get<std::vector<std::size_t>>();
  r.e_gamma = j.at("e_gamma").get<std::vector<std::vector<std::string>>>();
  for (const auto& e : j.at("catalog")) r.catalog.push_back(root_from(e));
  r.tangent_dimension = j.at("tangent_dimension").get<std::size_t>();
  r.tangent_weights = j.at("tangent_weights").get<std::vector<std::string>>();
  if (j.contains("subsets")) r.subsets = subsets_from(j.at("subsets"));
  if (j.contains("oracle")) r.oracle = oracle_from(j.at("oracle"));
  return r;
}

Json error_json(const Error& e) {
  Json err;
  err["code"] = std::string(to_string(e.code()));
  err["message"] = e.what();
  err["position"] = e.position() ? Json(*e.position()) : Json(nullptr);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["error"] = std::move(err);
  return j;
}

// ---------------------------------------------------------------------------
// text

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

std::string verdict(bool ok, const std::string& failed) { return ok ? "yes" : "no (" + failed + ")"; }

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "group " << r.group << ", rank of Gamma " << r.rank << "\n";
  out << "weights " << Json(r.request.weights).dump() << "\n";
  std::vector<std::string> sp;
  for (auto i : r.sp_gamma) sp.push_back("a" + std::to_string(i));
  out << "S^p(Gamma): {" << join(sp, ", ") << "}\n";
  std::vector<std::string> e;
  for (const auto& f : r.e_gamma) e.push_back("(" + join(f, ",") + ")");
  out << "E(Gamma): " << (e.empty() ? "none" : join(e, " ")) << "\n";

  out << "catalog (" << r.catalog.size() << " roots)\n";
  for (const auto& c : r.catalog) {
    out << "  " << c.tag << " (" << c.support_type << ") " << Json(c.vector).dump() << "  adapted: "
        << verdict(c.adapted, c.adapted_failed) << "  N-adapted: " << verdict(c.n_adapted, c.n_adapted_failed);
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << "\n";
  }
  out << "tangent dimension: " << r.tangent_dimension << "\n";
  out << "tangent weights: {" << join(r.tangent_weights, ", ") << "}\n";

  if (r.subsets) {
    const auto& s = *r.subsets;
    out << "N-adapted subsets (size <= " << s.max_size << ", examined " << s.examined
        << (s.complete ? "" : ", incomplete: search budget exceeded") << ")\n";
    for (const auto& x : s.subsets)
      out << "  {" << join(x.roots, ", ") << "}" << (x.maximal ? "  maximal, component candidate of dimension " +
                                                                     std::to_string(x.roots.size())
                                                               : "")
          << "\n";
  }
  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "oracle agreement: " << (o.agreement ? "yes" : "no") << "\n";
    out << "oracle weights: {" << join(o.weights, ", ") << "}\n";
    out << "combinatorial weights: {" << join(r.tangent_weights, ", ") << "}\n";
    out << "oracle g.x0 dimension: " << o.gx0_dimension << (o.gx0_verified ? "" : " (unverified)")
        << ", multiplicity-free: " << (o.multiplicity_free ? "yes" : "no") << "\n";
    for (const auto& q : o.quotient)
      out << "  quotient " << q.tag << " " << Json(q.vector).dump() << "  dim " << q.quotient_dim << ", tangent dim "
          << q.tangent_dim << (q.compatible ? "" : ", incompatible with S^p") << "\n";
  }
  return out.str();
}

}  // namespace sph
