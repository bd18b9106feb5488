#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sph {

/// Coefficients of an element of ZS in the simple-root basis.
using RootVector = std::vector<int>;
/// Coefficients in the fundamental-weight basis: coords[i] = <alpha_i^vee, lambda>.
using Weight = std::vector<std::int64_t>;
using CartanMatrix = std::vector<std::vector<int>>;

struct Component {
  char type;           // 'A'..'G'
  int rank;
  std::size_t offset;  // global index of the component's Bourbaki node 1
};

/// Cartan matrix of one simple type in Bourbaki numbering; throws
/// Error(RankConstraint) for invalid ranks.
CartanMatrix simple_cartan_matrix(char type, int rank);
bool valid_rank(char type, int rank);

class RootSystem {
 public:
  explicit RootSystem(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  const CartanMatrix& cartan_matrix() const noexcept { return cartan_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<int>& symmetrizer() const noexcept { return symmetrizer_; }
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }

  /// Canonical type string, e.g. "A1xB2".
  std::string name() const;
  std::size_t component_of(std::size_t i) const;

  /// <alpha_i^vee, v> = sum_j a_ij v_j.
  int pairing(std::size_t i, const RootVector& v) const;
  /// Fundamental-weight coordinates of a root vector.
  Weight to_weight(const RootVector& v) const;
  bool is_root(const RootVector& v) const;
  RootVector simple_root(std::size_t i) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.cartan_ == b.cartan_; }

 private:
  std::vector<Component> components_;
  CartanMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<RootVector> positive_;
};

/// Parses "A1xA1", "B3", "A2 G2". Errors carry the offending token index.
RootSystem build_root_system(std::string_view type_string);

inline const std::vector<RootVector>& positive_roots(const RootSystem& rs) { return rs.positive_roots(); }
inline int root_pairing(const RootSystem& rs, std::size_t i, const RootVector& v) { return rs.pairing(i, v); }

struct SubdiagramComponent {
  char type;
  int rank;
  /// Each labeling maps Bourbaki label k (0-based) to a global simple-root index.
  std::vector<std::vector<std::size_t>> labelings;
};

/// Connected components of the induced Dynkin subdiagram, ordered by their
/// smallest node, with every Bourbaki labeling of each.
std::vector<SubdiagramComponent> classify_subdiagram(const RootSystem& rs,
                                                     const std::vector<std::size_t>& subset);

std::vector<std::size_t> support(const RootVector& v);

/// Sum of coefficients.
int height(const RootVector& v);

}  // namespace sph
