#include "sph/irrep.hpp"

#include "sph/error.hpp"

#include <algorithm>
#include <set>

namespace sph {

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  const auto& d = rs.symmetrizer();
  Rational prod = 1;
  for (const auto& beta : rs.positive_roots()) {
    Rational num = 0, den = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      num += Rational(lambda[i] + 1) * d[i] * beta[i];
      den += d[i] * beta[i];
    }
    prod *= num / den;
  }
  return boost::multiprecision::numerator(prod);
}

namespace {

void add_block(Vec& out, std::size_t out_offset, const Matrix& m, const Vec& in, std::size_t in_offset) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& x = in[in_offset + c];
    if (x == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[out_offset + r] += m(r, c) * x;
  }
}

}  // namespace

IrrepModule::IrrepModule(const ChevalleyAlgebra& alg, Weight lambda, std::size_t dim_cap)
    : alg_(&alg), lambda_(std::move(lambda)) {
  const RootSystem& rs = alg.root_system();
  const std::size_t n = rs.rank();
  if (lambda_.size() != n) throw Error(Errc::WeightLength, "highest weight has the wrong length");
  if (std::any_of(lambda_.begin(), lambda_.end(), [](std::int64_t x) { return x < 0; }))
    throw Error(Errc::NonDominantWeight, "highest weight is not dominant");
  Integer expected = weyl_dimension(rs, lambda_);
  if (expected > dim_cap)
    throw Error(Errc::DimensionBudgetExceeded,
                "V(lambda) has dimension " + expected.str() + " above the cap " + std::to_string(dim_cap));

  auto weight_at = [&](const RootVector& depth) {
    Weight mu = lambda_;
    for (std::size_t i = 0; i < n; ++i) mu[i] -= rs.pairing(i, depth);
    return mu;
  };
  auto make_space = [&](RootVector depth) {
    Space s;
    s.weight = weight_at(depth);
    s.depth = std::move(depth);
    s.up.assign(n, std::nullopt);
    s.down.assign(n, std::nullopt);
    s.raise.assign(n, Matrix());
    s.lower.assign(n, Matrix());
    return s;
  };

  Space top = make_space(RootVector(n, 0));
  top.dim = 1;
  top.gram = Matrix::identity(1);
  index_[top.depth] = 0;
  spaces_.push_back(std::move(top));

  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::set<RootVector> candidates;
    for (auto s : level)
      for (std::size_t j = 0; j < n; ++j) {
        RootVector d = spaces_[s].depth;
        ++d[j];
        candidates.insert(d);
      }
    std::vector<std::size_t> next;
    for (const auto& depth : candidates) {
      Space fresh = make_space(depth);
      std::vector<std::size_t> row_offset(n, 0);
      std::size_t rows = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (depth[i] == 0) continue;
        RootVector u = depth;
        --u[i];
        if (auto it = index_.find(u); it != index_.end()) {
          fresh.up[i] = it->second;
          row_offset[i] = rows;
          rows += spaces_[it->second].dim;
        }
      }
      // Candidate vectors X_{-alpha_j} w for w in the basis of up[j], stored
      // through their raising images.
      struct Candidate {
        std::size_t j, b;
      };
      std::vector<Candidate> cands;
      std::vector<Vec> images;
      for (std::size_t j = 0; j < n; ++j) {
        if (!fresh.up[j]) continue;
        const Space& p = spaces_[*fresh.up[j]];
        for (std::size_t b = 0; b < p.dim; ++b) {
          Vec img(rows);
          for (std::size_t i = 0; i < n; ++i) {
            if (!fresh.up[i]) continue;
            // e_i f_j w = f_j e_i w + delta_ij h_i w
            if (p.up[i]) {
              const Space& r = spaces_[*p.up[i]];
              Vec ew(r.dim);
              for (std::size_t t = 0; t < r.dim; ++t) ew[t] = p.raise[i](t, b);
              const Matrix& f = r.lower[j];
              for (std::size_t t = 0; t < f.rows(); ++t)
                for (std::size_t c = 0; c < f.cols(); ++c)
                  if (f(t, c) != 0 && ew[c] != 0) img[row_offset[i] + t] += f(t, c) * ew[c];
            }
            if (i == j) img[row_offset[i] + b] += Rational(p.weight[i]);
          }
          cands.push_back({j, b});
          images.push_back(std::move(img));
        }
      }
      if (rows == 0 || cands.empty()) continue;
      Matrix m = Matrix::from_columns(images, rows);
      RowEchelon e = row_reduce(m);
      if (e.pivots.empty()) continue;

      fresh.dim = e.pivots.size();
      const std::size_t id = spaces_.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!fresh.up[i]) continue;
        const std::size_t q = *fresh.up[i];
        Matrix raise(spaces_[q].dim, fresh.dim);
        for (std::size_t t = 0; t < fresh.dim; ++t)
          for (std::size_t r = 0; r < spaces_[q].dim; ++r) raise(r, t) = m(row_offset[i] + r, e.pivots[t]);
        fresh.raise[i] = std::move(raise);
      }
      for (std::size_t j = 0; j < n; ++j)
        if (fresh.up[j]) spaces_[*fresh.up[j]].lower[j] = Matrix(fresh.dim, spaces_[*fresh.up[j]].dim);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        Matrix& low = spaces_[*fresh.up[cands[c].j]].lower[cands[c].j];
        for (std::size_t r = 0; r < fresh.dim; ++r) low(r, cands[c].b) = e.reduced(r, c);
      }
      for (std::size_t j = 0; j < n; ++j)
        if (fresh.up[j]) spaces_[*fresh.up[j]].down[j] = id;

      fresh.gram = Matrix(fresh.dim, fresh.dim);
      for (std::size_t t = 0; t < fresh.dim; ++t) {
        const Candidate& ct = cands[e.pivots[t]];
        const Space& p = spaces_[*fresh.up[ct.j]];
        for (std::size_t u = 0; u < fresh.dim; ++u) {
          Rational g = 0;
          for (std::size_t k = 0; k < p.dim; ++k) g += p.gram(ct.b, k) * fresh.raise[ct.j](k, u);
          fresh.gram(t, u) = g;
        }
      }
      index_[fresh.depth] = id;
      spaces_.push_back(std::move(fresh));
      next.push_back(id);
    }
    level = std::move(next);
  }

  for (auto& s : spaces_) {
    s.offset = dim_;
    dim_ += s.dim;
  }
  if (Integer(dim_) != expected)
    throw Error(Errc::Precondition, "constructed module has dimension " + std::to_string(dim_) +
                                        ", Weyl formula gives " + expected.str());
}

std::optional<std::size_t> IrrepModule::space_at(const RootVector& depth) const {
  auto it = index_.find(depth);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec IrrepModule::highest_vector() const {
  Vec v(dim_);
  v[0] = 1;
  return v;
}

Vec IrrepModule::block(const Vec& v, std::size_t space) const {
  const Space& s = spaces_[space];
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(s.offset),
             v.begin() + static_cast<std::ptrdiff_t>(s.offset + s.dim));
}

Vec IrrepModule::apply_simple(std::size_t i, bool raising, const Vec& v) const {
  Vec out(dim_);
  for (const auto& s : spaces_) {
    const auto& target = raising ? s.up[i] : s.down[i];
    if (!target) continue;
    add_block(out, spaces_[*target].offset, raising ? s.raise[i] : s.lower[i], v, s.offset);
  }
  return out;
}

Vec IrrepModule::apply_root(std::size_t id, const Vec& v) const {
  const bool positive = alg_->is_positive(id);
  const std::size_t pos = positive ? id : alg_->negative(id);
  const auto& split = alg_->split(pos);
  if (!split) {
    const auto supp = support(alg_->root(pos));
    return apply_simple(supp.front(), positive, v);
  }
  const std::size_t a = positive ? alg_->simple_id(split->simple) : alg_->negative(alg_->simple_id(split->simple));
  const std::size_t b = positive ? split->rest : alg_->negative(split->rest);
  Vec ab = apply_root(a, apply_root(b, v));
  Vec ba = apply_root(b, apply_root(a, v));
  Rational scale = Rational(positive ? 1 : -1, split->p + 1);
  for (std::size_t k = 0; k < dim_; ++k) ab[k] = (ab[k] - ba[k]) * scale;
  return ab;
}

bool IrrepModule::contravariant() const {
  for (const auto& s : spaces_) {
    if (!(s.gram == s.gram.transpose())) return false;
    if (rank(s.gram) != s.dim) return false;
    for (std::size_t i = 0; i < s.up.size(); ++i) {
      if (!s.up[i]) continue;
      const Space& t = spaces_[*s.up[i]];
      if (!(s.raise[i].transpose() * t.gram == s.gram * t.lower[i])) return false;
    }
  }
  return true;
}

std::map<Weight, std::size_t> IrrepModule::multiplicities() const {
  std::map<Weight, std::size_t> out;
  for (const auto& s : spaces_) out[s.weight] += s.dim;
  return out;
}

}  // namespace sph
