#include "sph/chevalley.hpp"

#include "sph/error.hpp"
#include "sph/irrep.hpp"

#include <algorithm>

namespace sph {

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs, ExtraspecialOrder order)
    : rs_(std::move(rs)), order_(order), positive_(rs_.positive_roots()) {
  const std::size_t n = rs_.rank();
  const std::size_t np = positive_.size();
  roots_ = positive_;
  for (const auto& beta : positive_) {
    RootVector neg = beta;
    for (auto& x : neg) x = -x;
    roots_.push_back(std::move(neg));
  }
  simple_ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) simple_ids_[i] = *root_id(rs_.simple_root(i));

  splits_.assign(np, std::nullopt);
  for (std::size_t k = 0; k < np; ++k) {
    if (height(positive_[k]) == 1) continue;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t i = order_ == ExtraspecialOrder::Ascending ? step : n - 1 - step;
      RootVector eta = positive_[k];
      --eta[i];
      auto rest = root_id(eta);
      if (!rest || !is_positive(*rest)) continue;
      splits_[k] = Split{i, *rest, string_length(simple_ids_[i], *rest)};
      break;
    }
  }
  compute_constants();
}

std::optional<std::size_t> ChevalleyAlgebra::root_id(const RootVector& v) const {
  auto it = std::find(roots_.begin(), roots_.end(), v);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

int ChevalleyAlgebra::string_length(std::size_t a, std::size_t b) const {
  int p = 0;
  RootVector v = roots_[b];
  while (true) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= roots_[a][i];
    if (!root_id(v)) return p;
    ++p;
  }
}

std::vector<Rational> ChevalleyAlgebra::coroot(std::size_t id) const {
  const RootVector& k = roots_[id];
  const auto& d = rs_.symmetrizer();
  const std::size_t n = rs_.rank();
  Rational norm = 0;  // (beta, beta) / 2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm += Rational(k[i] * k[j] * d[i] * rs_.cartan(i, j));
  norm /= 2;
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Rational(d[i] * k[i]) / norm;
  return c;
}

void ChevalleyAlgebra::compute_constants() {
  const std::size_t total = num_roots();
  constants_.assign(total, std::vector<int>(total, 0));
  // Read the constants off the adjoint module of each simple factor.
  for (const auto& comp : rs_.components()) {
    const std::size_t lo = comp.offset, hi = comp.offset + static_cast<std::size_t>(comp.rank);
    auto inside = [&](std::size_t id) {
      auto s = support(roots_[id]);
      return s.front() >= lo && s.back() < hi;
    };
    RootVector theta;
    for (const auto& beta : positive_)
      if (inside(*root_id(beta))) theta = beta;  // positive_ is sorted by height
    IrrepModule adjoint(*this, rs_.to_weight(theta), std::size_t(-1));
    const std::size_t dim = adjoint.dimension();

    for (std::size_t a = 0; a < total; ++a) {
      if (!inside(a)) continue;
      for (std::size_t b = 0; b < total; ++b) {
        if (!inside(b)) continue;
        RootVector sum = roots_[a];
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots_[b][i];
        auto ab = root_id(sum);
        if (!ab) continue;
        std::optional<Rational> c;
        for (std::size_t k = 0; k < dim; ++k) {
          Vec e(dim);
          e[k] = 1;
          Vec lhs = adjoint.apply_root(a, adjoint.apply_root(b, e));
          Vec rhs_b = adjoint.apply_root(b, adjoint.apply_root(a, e));
          Vec rhs = adjoint.apply_root(*ab, e);
          for (std::size_t t = 0; t < dim; ++t) {
            lhs[t] -= rhs_b[t];
            if (rhs[t] != 0) {
              Rational ratio = lhs[t] / rhs[t];
              if (c && *c != ratio) throw Error(Errc::Precondition, "inconsistent structure constant");
              c = ratio;
            } else if (lhs[t] != 0) {
              throw Error(Errc::Precondition, "bracket leaves the root space");
            }
          }
        }
        if (!c || !is_integer(*c)) throw Error(Errc::Precondition, "structure constant is not an integer");
        constants_[a][b] = static_cast<int>(boost::multiprecision::numerator(*c).convert_to<long>());
      }
    }
  }
}

ChevalleyAlgebra::Element ChevalleyAlgebra::basis_element(std::size_t k) const {
  Element e(dimension());
  e[k] = 1;
  return e;
}

ChevalleyAlgebra::Element ChevalleyAlgebra::bracket(const Element& x, const Element& y) const {
  const std::size_t n = rs_.rank();
  const std::size_t total = num_roots();
  Element out(dimension());
  // [h_i, X_b] = <b, alpha_i^vee> X_b
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < total; ++b) {
      Rational w = rs_.pairing(i, roots_[b]);
      out[n + b] += w * (x[i] * y[n + b] - y[i] * x[n + b]);
    }
  for (std::size_t a = 0; a < total; ++a) {
    if (x[n + a] == 0) continue;
    for (std::size_t b = 0; b < total; ++b) {
      if (y[n + b] == 0) continue;
      Rational s = x[n + a] * y[n + b];
      if (b == negative(a)) {
        auto h = coroot(a);
        for (std::size_t i = 0; i < n; ++i) out[i] += s * h[i];
      } else if (constants_[a][b] != 0) {
        RootVector sum = roots_[a];
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots_[b][i];
        out[n + *root_id(sum)] += s * constants_[a][b];
      }
    }
  }
  return out;
}

}  // namespace sph
