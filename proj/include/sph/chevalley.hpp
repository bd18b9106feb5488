#pragma once

#include "sph/linalg.hpp"
#include "sph/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sph {

/// Which simple root is split off when a positive root is written as
/// alpha_i + eta. Ascending picks the smallest admissible i.
enum class ExtraspecialOrder { Ascending, Descending };

/// Chevalley basis {h_i = alpha_i^vee, X_beta}. Root ids: 0..N-1 are the
/// positive roots in RootSystem order, N..2N-1 their negatives.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs, ExtraspecialOrder order = ExtraspecialOrder::Ascending);

  const RootSystem& root_system() const noexcept { return rs_; }
  std::size_t num_positive() const noexcept { return positive_.size(); }
  std::size_t num_roots() const noexcept { return 2 * positive_.size(); }
  const RootVector& root(std::size_t id) const { return roots_[id]; }
  std::optional<std::size_t> root_id(const RootVector& v) const;
  std::size_t negative(std::size_t id) const { return id < num_positive() ? id + num_positive() : id - num_positive(); }
  bool is_positive(std::size_t id) const { return id < num_positive(); }
  /// Id of the simple root alpha_i.
  std::size_t simple_id(std::size_t i) const { return simple_ids_[i]; }

  /// Split of a positive non-simple root xi = alpha_i + eta with p the
  /// largest integer such that eta - p alpha_i is a root.
  struct Split {
    std::size_t simple;  // i
    std::size_t rest;    // id of eta
    int p;
  };
  const std::optional<Split>& split(std::size_t positive_id) const { return splits_[positive_id]; }

  /// c with [X_a, X_b] = c X_{a+b}; zero when a+b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return constants_[a][b]; }
  /// Largest p with b - p a a root.
  int string_length(std::size_t a, std::size_t b) const;

  /// Coefficients of beta^vee in the basis alpha_i^vee.
  std::vector<Rational> coroot(std::size_t id) const;

  /// Abstract Lie algebra element in the basis (h_1..h_n, X_0..X_{2N-1}).
  using Element = std::vector<Rational>;
  std::size_t dimension() const { return rs_.rank() + num_roots(); }
  Element basis_element(std::size_t k) const;
  Element bracket(const Element& x, const Element& y) const;

 private:
  void compute_constants();

  RootSystem rs_;
  ExtraspecialOrder order_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> roots_;
  std::vector<std::size_t> simple_ids_;
  std::vector<std::optional<Split>> splits_;
  std::vector<std::vector<int>> constants_;
};

}  // namespace sph
