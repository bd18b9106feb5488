#include "sph/sphroots.hpp"

#include <algorithm>
#include <map>

namespace sph {

std::string_view to_string(RootKind kind) {
  switch (kind) {
    case RootKind::Simple: return "A1";
    case RootKind::DoubleSimple: return "2xA1";
    case RootKind::OrthogonalPair: return "A1xA1";
    case RootKind::ASum: return "An-sum";
    case RootKind::A3Middle: return "A3-middle";
    case RootKind::BSum: return "Bn-sum";
    case RootKind::BDouble: return "Bn-double";
    case RootKind::B3Special: return "B3-special";
    case RootKind::C: return "Cn";
    case RootKind::D: return "Dn";
    case RootKind::F4: return "F4";
    case RootKind::G2Double: return "G2-double";
    case RootKind::G2Sum: return "G2-sum";
    case RootKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::optional<std::size_t> SphericalRoot::simple_index() const {
  if (kind != RootKind::Simple && kind != RootKind::DoubleSimple) return std::nullopt;
  return labeling.front();
}

std::string vector_tag(const RootVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += v[i] > 0 ? "+" : "";
    if (v[i] == -1) out += "-";
    else if (v[i] != 1) out += std::to_string(v[i]) + "*";
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string SphericalRoot::tag() const { return vector_tag(vector); }

std::string SphericalRoot::label() const { return tag() + " (" + support_type + ")"; }

namespace {

struct Formula {
  RootKind kind;
  std::vector<int> coeffs;  // indexed by Bourbaki label
};

// Table rows applicable to a connected support of the given type.
std::vector<Formula> formulas_for(char type, int k) {
  const auto n = static_cast<std::size_t>(k);
  std::vector<Formula> out;
  auto constant = [&](int c) { return std::vector<int>(n, c); };
  switch (type) {
    case 'A':
      if (k == 1) {
        out.push_back({RootKind::Simple, {1}});
        out.push_back({RootKind::DoubleSimple, {2}});
      } else {
        out.push_back({RootKind::ASum, constant(1)});
      }
      if (k == 3) out.push_back({RootKind::A3Middle, {1, 2, 1}});
      break;
    case 'B':
      out.push_back({RootKind::BSum, constant(1)});
      out.push_back({RootKind::BDouble, constant(2)});
      if (k == 3) out.push_back({RootKind::B3Special, {1, 2, 3}});
      break;
    case 'C': {
      auto c = constant(2);
      c.front() = c.back() = 1;
      out.push_back({RootKind::C, c});
      break;
    }
    case 'D': {
      auto c = constant(2);
      c[n - 1] = c[n - 2] = 1;
      out.push_back({RootKind::D, c});
      break;
    }
    case 'F':
      out.push_back({RootKind::F4, {1, 2, 3, 2}});
      break;
    case 'G':
      out.push_back({RootKind::G2Double, {4, 2}});
      out.push_back({RootKind::G2Sum, {1, 1}});
      break;
    default:
      break;
  }
  return out;
}

std::vector<SphericalRoot> raw_catalog(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::vector<SphericalRoot> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    auto comps = classify_subdiagram(rs, subset);
    if (comps.size() == 2 && subset.size() == 2) {
      RootVector v(n, 0);
      v[subset[0]] = v[subset[1]] = 1;
      out.push_back({v, RootKind::OrthogonalPair, subset, "A1xA1"});
      continue;
    }
    if (comps.size() != 1) continue;
    const auto& comp = comps.front();
    std::string type_name = comp.type + std::to_string(comp.rank);
    for (const auto& f : formulas_for(comp.type, comp.rank))
      for (const auto& lab : comp.labelings) {
        RootVector v(n, 0);
        for (std::size_t k = 0; k < lab.size(); ++k) v[lab[k]] = f.coeffs[k];
        out.push_back({v, f.kind, lab, type_name});
      }
  }
  return out;
}

}  // namespace

std::vector<SphericalRoot> enumerate_sc_roots(const RootSystem& rs) {
  std::vector<SphericalRoot> all = raw_catalog(rs);
  // First labeling wins among duplicates; raw_catalog emits labelings sorted.
  std::map<RootVector, SphericalRoot, std::greater<>> unique;
  for (auto& s : all) unique.emplace(s.vector, std::move(s));
  std::vector<SphericalRoot> out;
  out.reserve(unique.size());
  for (auto& [v, s] : unique) out.push_back(std::move(s));
  return out;
}

SphericalRoot classify_root(const RootSystem& rs, const RootVector& v) {
  for (auto& s : enumerate_sc_roots(rs))
    if (s.vector == v) return s;
  SphericalRoot s;
  s.vector = v;
  s.support_type = "?";
  return s;
}

bool compatible_with_sp(const RootSystem& rs, const SphericalRoot& sigma, const std::vector<std::size_t>& sp) {
  const std::size_t n = rs.rank();
  std::vector<bool> in_sp(n, false);
  for (auto i : sp) in_sp[i] = true;
  std::vector<bool> lower(n, false), upper(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = rs.pairing(i, sigma.vector) == 0;
    upper[i] = zero;
    lower[i] = zero && sigma.vector[i] != 0;
  }
  if (sigma.kind == RootKind::BSum) {
    std::size_t last = sigma.labeling.back();
    lower[last] = upper[last] = false;
  } else if (sigma.kind == RootKind::C) {
    lower[sigma.labeling.front()] = false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] && !in_sp[i]) return false;
    if (in_sp[i] && !upper[i]) return false;
  }
  return true;
}

}  // namespace sph
