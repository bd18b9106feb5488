#pragma once

#include "sph/chevalley.hpp"
#include "sph/irrep.hpp"
#include "sph/sphroots.hpp"
#include "sph/wmonoid.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace sph {

/// V = V(lambda_1) + ... + V(lambda_r) with x0 = sum of highest weight
/// vectors. A vector of T_ad-weight gamma has one block per summand: the
/// weight space of depth gamma in V(lambda_k).
class AmbientModel {
 public:
  AmbientModel(const ChevalleyAlgebra& alg, const WeightMonoidContext& ctx,
               std::size_t dim_cap = kDefaultIrrepDimCap);

  const std::vector<IrrepModule>& modules() const noexcept { return modules_; }

  /// Offsets of each summand's block inside the T_ad-weight space of gamma;
  /// the last entry is the total dimension.
  std::vector<std::size_t> block_offsets(const RootVector& gamma) const;
  std::size_t weight_space_dim(const RootVector& gamma) const { return block_offsets(gamma).back(); }

  /// Basis of (g.x0)_gamma as columns in T_ad-weight coordinates.
  Matrix gx0_basis(const RootVector& gamma) const;
  std::size_t gx0_dimension() const;
  /// The listed basis of g.x0 is independent and spans the image of the
  /// algebra acting on x0.
  bool gx0_basis_verified() const noexcept { return gx0_verified_; }

  /// Every nonzero depth occurring in some summand.
  std::vector<RootVector> weight_support() const;

 private:
  const ChevalleyAlgebra* alg_;
  const WeightMonoidContext* ctx_;
  std::vector<IrrepModule> modules_;
  std::map<RootVector, Vec> lowered_x0_;  // beta -> X_{-beta} x0 in T_ad-weight coordinates
  bool gx0_verified_ = true;
};

struct QuotientSpace {
  RootVector gamma;
  Matrix invariants;  // columns: v with X_beta v in g.x0 for the required beta
  Matrix gx0;         // (g.x0)_gamma
  std::size_t dim = 0;  // dimension of the image in V / g.x0
};

/// Nonzero T_ad-weight spaces of (V / g.x0)^{g_x0}, keyed by gamma.
std::map<RootVector, QuotientSpace> invariant_quotient_weights(const AmbientModel& model,
                                                               const ChevalleyAlgebra& alg,
                                                               const WeightMonoidContext& ctx);

/// Indices k such that G.z_{lambda_k} has codimension one.
std::vector<std::size_t> codim1_orbit_weights(const WeightMonoidContext& ctx);

struct OracleWeight {
  SphericalRoot root;  // Unclassified when gamma is off the catalog
  std::size_t quotient_dim = 0;
  std::size_t tangent_dim = 0;
  bool compatible = false;  // with S^p(Gamma); false for unclassified roots
};

struct OracleReport {
  std::vector<OracleWeight> quotient;           // every gamma with quotient_dim > 0
  std::vector<SphericalRoot> tangent_weights;   // gamma with tangent_dim > 0, catalog order
  std::vector<std::size_t> codim1;
  bool multiplicity_free = true;
  std::size_t gx0_dimension = 0;
  bool gx0_verified = true;
};

OracleReport oracle_tangent_weights(const AmbientModel& model, const ChevalleyAlgebra& alg,
                                    const WeightMonoidContext& ctx);

/// Convenience: builds the algebra and model and runs the oracle.
OracleReport run_oracle(const WeightMonoidContext& ctx, std::size_t dim_cap = kDefaultIrrepDimCap);

}  // namespace sph
