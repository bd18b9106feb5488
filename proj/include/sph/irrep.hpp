#pragma once

#include "sph/chevalley.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace sph {

using Vec = std::vector<Rational>;

inline constexpr std::size_t kDefaultIrrepDimCap = 5000;

/// Weyl dimension formula.
Integer weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// The irreducible module V(lambda), built weight space by weight space from
/// v_lambda. A vector of weight mu below lambda is determined by its images
/// under the raising operators, so each weight space is cut out of the span
/// of lowering images by the rank of that data. The contravariant form is
/// carried along for verification.
class IrrepModule {
 public:
  struct Space {
    RootVector depth;  // lambda - mu in simple-root coordinates
    Weight weight;     // mu
    std::size_t offset = 0;
    std::size_t dim = 0;
    std::vector<std::optional<std::size_t>> up;    // space of depth - e_i
    std::vector<std::optional<std::size_t>> down;  // space of depth + e_i
    std::vector<Matrix> raise;                     // X_{alpha_i}: this -> up[i]
    std::vector<Matrix> lower;                     // X_{-alpha_i}: this -> down[i]
    Matrix gram;
  };

  /// Throws Error(NonDominantWeight) or Error(DimensionBudgetExceeded).
  IrrepModule(const ChevalleyAlgebra& alg, Weight lambda, std::size_t dim_cap = kDefaultIrrepDimCap);

  const Weight& highest_weight() const noexcept { return lambda_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<Space>& spaces() const noexcept { return spaces_; }
  std::optional<std::size_t> space_at(const RootVector& depth) const;

  Vec highest_vector() const;
  Vec zero() const { return Vec(dim_); }
  /// The block of v belonging to a weight space.
  Vec block(const Vec& v, std::size_t space) const;

  Vec apply_simple(std::size_t i, bool raising, const Vec& v) const;
  /// X_beta for any root id of the algebra.
  Vec apply_root(std::size_t id, const Vec& v) const;

  /// <X_{alpha_i} u, w> = <u, X_{-alpha_i} w> for all i and all basis pairs;
  /// the form is symmetric and nondegenerate on every weight space.
  bool contravariant() const;

  /// Multiplicity of each weight, keyed by fundamental coordinates.
  std::map<Weight, std::size_t> multiplicities() const;

 private:
  const ChevalleyAlgebra* alg_;
  Weight lambda_;
  std::size_t dim_ = 0;
  std::vector<Space> spaces_;
  std::map<RootVector, std::size_t> index_;
};

}  // namespace sph
