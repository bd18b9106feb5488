#pragma once

#include "sph/error.hpp"
#include "sph/sphroots.hpp"
#include "sph/wmonoid.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sph {

/// Outcome of a singleton test. `failed` names the first failing condition
/// ("1", "2", "3", "4a", "4b", "4c", "5", "6").
struct Verdict {
  bool ok = true;
  std::string failed;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string condition, std::string why) { return {false, std::move(condition), std::move(why)}; }
};

Verdict is_adapted_singleton(const WeightMonoidContext& ctx, const SphericalRoot& sigma);
Verdict is_n_adapted_singleton(const WeightMonoidContext& ctx, const SphericalRoot& sigma);

struct RootDiagnostic {
  SphericalRoot root;
  Verdict adapted;
  Verdict n_adapted;
};

struct TangentReport {
  std::vector<SphericalRoot> weights;
  std::size_t dimension = 0;
  std::vector<RootDiagnostic> diagnostics;  // one per catalog root, catalog order
};

TangentReport tangent_space(const WeightMonoidContext& ctx);

// ---------------------------------------------------------------------------
// Subset level

struct AxiomVerdicts {
  bool A1 = true, A2 = true, A3 = true, Sigma1 = true, Sigma2 = true, S = true;
  bool all() const { return A1 && A2 && A3 && Sigma1 && Sigma2 && S; }
};

/// c(D, sigma_k) for each abstract color D of A; rows indexed by D, columns by
/// the position of sigma in the Sigma list.
using PairingTable = std::vector<std::vector<Rational>>;

/// Throws Error(MalformedPairing) if a row does not have one entry per root.
AxiomVerdicts check_system_axioms(const RootSystem& rs, const std::vector<std::size_t>& sp,
                                  const std::vector<SphericalRoot>& sigma, const PairingTable& pairing);

struct Color {
  enum class Kind { a, a2, b };
  Kind kind;
  /// Simple roots the color is attached to: for `a` the roots alpha with D in
  /// A(alpha), for `a2` the single alpha, for `b` the equivalence class.
  std::vector<std::size_t> anchors;
  Functional functional;
};

struct AugmentationVerdicts {
  bool a1 = true, a2 = true, sigma1 = true, sigma2 = true, s = true;
  bool all() const { return a1 && a2 && sigma1 && sigma2 && s; }
};

struct SphericalSystemCheck {
  std::vector<std::size_t> sp;
  std::vector<SphericalRoot> sigma;
  bool in_lattice = true;     // every sigma in ZGamma
  bool a_sets_valid = true;   // every a(alpha) has one or two elements
  std::vector<Functional> A;  // functionals of the abstract colors in A
  std::vector<Color> colors;  // the full set Delta
  AxiomVerdicts axioms;
  AugmentationVerdicts augmentation;
  bool cond3 = true;  // every delta in E(Gamma) nonpositive on Sigma or a color ray
  bool cond4 = true;  // every color functional in Gamma^vee
  /// Among identifications satisfying the system axioms, all give the same
  /// overall verdict.
  bool identification_consistent = true;
  std::size_t identifications_tried = 0;
  std::string failure;  // first failing item, empty when ok

  bool ok() const {
    return in_lattice && a_sets_valid && axioms.all() && augmentation.all() && cond3 && cond4;
  }
};

SphericalSystemCheck is_adapted_subset(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma);

struct NAdaptedVerdict {
  bool ok = false;
  /// The adapted set whose image is Sigma, when ok.
  std::vector<SphericalRoot> witness;
  std::vector<SphericalSystemCheck> branches;
};

NAdaptedVerdict is_n_adapted_subset(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma);

struct SubsetEntry {
  std::vector<SphericalRoot> sigma;
  bool maximal = false;  // candidate irreducible component of dimension |sigma|
};

struct SubsetEnumeration {
  std::vector<SubsetEntry> subsets;  // by size, then catalog order
  std::size_t examined = 0;
};

class SearchBudgetError : public Error {
 public:
  SearchBudgetError(const std::string& message, SubsetEnumeration partial)
      : Error(Errc::SearchBudgetExceeded, message), partial_(std::move(partial)) {}
  const SubsetEnumeration& partial() const noexcept { return partial_; }

 private:
  SubsetEnumeration partial_;
};

inline constexpr std::size_t kDefaultSubsetCap = 200000;

/// All linearly independent N-adapted subsets of the catalog with at most
/// max_size elements. Throws Error(Precondition) if max_size > rank of Gamma
/// and SearchBudgetError once more than `cap` subsets have been examined.
SubsetEnumeration enumerate_n_adapted_subsets(const WeightMonoidContext& ctx, std::size_t max_size,
                                              std::size_t cap = kDefaultSubsetCap);

struct PropCutResult {
  bool ok = true;
  std::optional<SphericalRoot> counterexample;
};

/// Every N-adapted catalog root in N Sigma lies in Sigma. Requires every
/// element of Sigma to be N-adapted.
PropCutResult check_prop_cut(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma);

/// Whether v is a nonnegative integer combination of gens.
bool in_monoid(const std::vector<RootVector>& gens, const RootVector& v);

}  // namespace sph
