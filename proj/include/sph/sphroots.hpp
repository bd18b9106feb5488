#pragma once

#include "sph/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sph {

enum class RootKind {
  Simple,          // alpha
  DoubleSimple,    // 2 alpha
  OrthogonalPair,  // alpha + alpha', orthogonal
  ASum,
  A3Middle,
  BSum,
  BDouble,
  B3Special,
  C,
  D,
  F4,
  G2Double,
  G2Sum,
  Unclassified,  // not in the catalog; only produced when classifying arbitrary vectors
};

std::string_view to_string(RootKind kind);

struct SphericalRoot {
  RootVector vector;
  RootKind kind = RootKind::Unclassified;
  /// Bourbaki label k (0-based) -> global simple-root index. For
  /// OrthogonalPair the two nodes in increasing order.
  std::vector<std::size_t> labeling;
  /// Type of the support, e.g. "A3" or "A1xA1".
  std::string support_type;

  std::vector<std::size_t> support() const { return sph::support(vector); }
  /// Simple-root index if the root is a simple root or twice one.
  std::optional<std::size_t> simple_index() const;
  /// "a1+2*a2+a3"
  std::string tag() const;
  /// "a1+2*a2+a3 (A3)"
  std::string label() const;

  friend bool operator==(const SphericalRoot& a, const SphericalRoot& b) { return a.vector == b.vector; }
};

/// Sigma^sc(G), deduplicated by vector, in descending lexicographic order of
/// the coefficient vectors.
std::vector<SphericalRoot> enumerate_sc_roots(const RootSystem& rs);

/// Catalog entry with the given vector, or an Unclassified root.
SphericalRoot classify_root(const RootSystem& rs, const RootVector& v);

/// Sandwich condition between S^p and the zero set of sigma.
bool compatible_with_sp(const RootSystem& rs, const SphericalRoot& sigma, const std::vector<std::size_t>& sp);

std::string vector_tag(const RootVector& v);

}  // namespace sph
