#include "sph/wmonoid.hpp"

#include "sph/error.hpp"

#include <algorithm>

namespace sph {

bool Functional::is_integral() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return is_integer(q); });
}

bool Functional::is_nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q >= 0; });
}

bool Functional::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; });
}

Rational Functional::operator()(const std::vector<Integer>& coeffs) const {
  Rational s = 0;
  for (std::size_t j = 0; j < values.size(); ++j) s += values[j] * Rational(coeffs[j]);
  return s;
}

std::optional<Rational> Functional::positive_multiple_of(const Functional& other) const {
  std::optional<Rational> t;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (other.values[j] == 0) {
      if (values[j] != 0) return std::nullopt;
      continue;
    }
    Rational ratio = values[j] / other.values[j];
    if (t && *t != ratio) return std::nullopt;
    t = ratio;
  }
  if (!t || *t <= 0) return std::nullopt;
  return t;
}

Functional Functional::operator+(const Functional& o) const {
  Functional f = *this;
  for (std::size_t j = 0; j < values.size(); ++j) f.values[j] += o.values[j];
  return f;
}

Functional Functional::operator-(const Functional& o) const {
  Functional f = *this;
  for (std::size_t j = 0; j < values.size(); ++j) f.values[j] -= o.values[j];
  return f;
}

Functional Functional::scaled(const Rational& s) const {
  Functional f = *this;
  for (auto& v : f.values) v *= s;
  return f;
}

std::string to_string(const Functional& f) {
  std::string out = "(";
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    if (j) out += ",";
    out += to_string(f.values[j]);
  }
  return out + ")";
}

WeightMonoidContext::WeightMonoidContext(RootSystem rs, std::vector<Weight> basis)
    : rs_(std::move(rs)), basis_(std::move(basis)) {
  const std::size_t n = rs_.rank();
  const std::size_t r = basis_.size();
  for (std::size_t j = 0; j < r; ++j) {
    if (basis_[j].size() != n)
      throw Error(Errc::WeightLength,
                  "weight at index " + std::to_string(j) + " has length " + std::to_string(basis_[j].size()) +
                      ", expected " + std::to_string(n),
                  j);
    if (std::any_of(basis_[j].begin(), basis_[j].end(), [](std::int64_t x) { return x < 0; }))
      throw Error(Errc::NonDominantWeight, "weight at index " + std::to_string(j) + " has a negative coordinate", j);
  }
  basis_matrix_ = Matrix(n, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_matrix_(i, j) = basis_[j][i];
  if (sph::rank(basis_matrix_) != r) throw Error(Errc::DependentBasis, "weights are linearly dependent");

  for (std::size_t i = 0; i < n; ++i)
    if (in_sp(i)) sp_.push_back(i);
  for (const auto& beta : rs_.positive_roots()) {
    auto supp = support(beta);
    if (std::all_of(supp.begin(), supp.end(), [&](std::size_t i) { return in_sp(i); })) f_perp_.push_back(beta);
  }
  for (std::size_t j = 0; j < r; ++j) {
    Functional e{std::vector<Rational>(r, Rational(0))};
    e.values[j] = 1;
    e_gamma_.push_back(std::move(e));
  }
}

bool WeightMonoidContext::in_sp(std::size_t i) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Weight& w) { return w[i] == 0; });
}

std::optional<std::vector<Rational>> WeightMonoidContext::rational_coords(const Weight& v) const {
  std::vector<Rational> b(v.begin(), v.end());
  if (rank() == 0) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
    return std::vector<Rational>{};
  }
  return solve_unique(basis_matrix_, b);
}

std::optional<std::vector<Integer>> WeightMonoidContext::in_lattice(const Weight& v) const {
  auto q = rational_coords(v);
  if (!q) return std::nullopt;
  std::vector<Integer> c;
  for (const auto& x : *q) {
    if (!is_integer(x)) return std::nullopt;
    c.push_back(boost::multiprecision::numerator(x));
  }
  return c;
}

std::optional<std::vector<Integer>> WeightMonoidContext::in_lattice(const RootVector& v) const {
  return in_lattice(rs_.to_weight(v));
}

Functional WeightMonoidContext::coroot_functional(std::size_t i) const {
  Functional f;
  for (const auto& w : basis_) f.values.emplace_back(w[i]);
  return f;
}

std::vector<Functional> WeightMonoidContext::a_set(std::size_t i) const {
  auto c = in_lattice(rs_.simple_root(i));
  if (!c) throw Error(Errc::LatticeMembership, "simple root " + std::to_string(i + 1) + " is not in ZGamma", i);
  const Functional coroot = coroot_functional(i);
  std::vector<Functional> out;
  for (std::size_t j = 0; j < rank(); ++j) {
    if ((*c)[j] != 1) continue;
    out.push_back(e_gamma_[j]);
    out.push_back(coroot - e_gamma_[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sph
