#pragma once

#include "sph/linalg.hpp"
#include "sph/rootsys.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sph {

/// An element of (ZGamma)^* tensor Q, stored by its values on the basis F.
struct Functional {
  std::vector<Rational> values;

  bool is_integral() const;
  bool is_nonnegative() const;  // lies in Gamma^vee
  bool is_zero() const;
  /// Value on an element given by its coefficients in F.
  Rational operator()(const std::vector<Integer>& coeffs) const;
  /// Some t > 0 with values == t * other.values.
  std::optional<Rational> positive_multiple_of(const Functional& other) const;

  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional scaled(const Rational& s) const;

  friend bool operator==(const Functional&, const Functional&) = default;
  friend bool operator<(const Functional& a, const Functional& b) { return a.values < b.values; }
};

std::string to_string(const Functional& f);

class WeightMonoidContext {
 public:
  /// Validates F: each weight has length rs.rank(), is dominant and the list
  /// is linearly independent.
  WeightMonoidContext(RootSystem rs, std::vector<Weight> basis);

  const RootSystem& root_system() const noexcept { return rs_; }
  const std::vector<Weight>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Simple roots vanishing on all of F.
  const std::vector<std::size_t>& sp_gamma() const noexcept { return sp_; }
  bool in_sp(std::size_t i) const;
  /// Positive roots beta with <lambda, beta^vee> = 0 for all lambda in F.
  const std::vector<RootVector>& f_perp() const noexcept { return f_perp_; }

  /// Dual basis lambda_j^#.
  const std::vector<Functional>& e_gamma() const noexcept { return e_gamma_; }

  /// Coefficients of v in F, if v lies in ZGamma.
  std::optional<std::vector<Integer>> in_lattice(const Weight& v) const;
  std::optional<std::vector<Integer>> in_lattice(const RootVector& v) const;
  /// Rational coefficients of v in F, if v lies in QGamma.
  std::optional<std::vector<Rational>> rational_coords(const Weight& v) const;

  /// alpha_i^vee restricted to ZGamma.
  Functional coroot_functional(std::size_t i) const;
  /// Throws Error(LatticeMembership) if alpha_i is not in ZGamma.
  std::vector<Functional> a_set(std::size_t i) const;

 private:
  RootSystem rs_;
  std::vector<Weight> basis_;
  Matrix basis_matrix_;  // n x r, columns are the weights of F
  std::vector<std::size_t> sp_;
  std::vector<RootVector> f_perp_;
  std::vector<Functional> e_gamma_;
};

inline WeightMonoidContext build_context(const RootSystem& rs, std::vector<Weight> basis) {
  return WeightMonoidContext(rs, std::move(basis));
}

}  // namespace sph
