#include "sph/oracle.hpp"

#include <algorithm>
#include <set>

namespace sph {

namespace {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool nonnegative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

bool is_zero_root(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Column space intersection of a and b (same row count).
Matrix intersect(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix ker = kernel(hconcat(a, (Rational(-1)) * b));
  Matrix cols = a * ker.row_block(0, a.cols());
  auto keep = independent_columns(cols);
  std::vector<std::vector<Rational>> basis;
  for (auto c : keep) basis.push_back(cols.column(c));
  return Matrix::from_columns(basis, a.rows());
}

std::size_t quotient_dim(const Matrix& sub, const Matrix& base) {
  return rank(hconcat(base, sub)) - rank(base);
}

}  // namespace

AmbientModel::AmbientModel(const ChevalleyAlgebra& alg, const WeightMonoidContext& ctx, std::size_t dim_cap)
    : alg_(&alg), ctx_(&ctx) {
  for (const auto& lambda : ctx.basis()) modules_.emplace_back(alg, lambda, dim_cap);

  std::set<RootVector> perp(ctx.f_perp().begin(), ctx.f_perp().end());
  for (std::size_t id = 0; id < alg.num_positive(); ++id) {
    const RootVector& beta = alg.root(id);
    const std::size_t neg = alg.negative(id);
    Vec coords(weight_space_dim(beta));
    auto offsets = block_offsets(beta);
    bool raised_zero = true;
    for (std::size_t k = 0; k < modules_.size(); ++k) {
      const IrrepModule& m = modules_[k];
      if (!is_zero_vec(m.apply_root(id, m.highest_vector()))) raised_zero = false;
      Vec low = m.apply_root(neg, m.highest_vector());
      if (auto s = m.space_at(beta)) {
        Vec blk = m.block(low, *s);
        std::copy(blk.begin(), blk.end(), coords.begin() + static_cast<std::ptrdiff_t>(offsets[k]));
      }
    }
    const bool zero = is_zero_vec(coords);
    if (!raised_zero || zero != (perp.count(beta) > 0)) gx0_verified_ = false;
    if (!zero) lowered_x0_[beta] = std::move(coords);
  }
  // h_i x0 span the highest weight vectors since F is independent.
  Matrix h(ctx.root_system().rank(), modules_.size());
  for (std::size_t k = 0; k < modules_.size(); ++k)
    for (std::size_t i = 0; i < h.rows(); ++i) h(i, k) = ctx.basis()[k][i];
  if (rank(h) != modules_.size()) gx0_verified_ = false;
}

std::vector<std::size_t> AmbientModel::block_offsets(const RootVector& gamma) const {
  std::vector<std::size_t> off{0};
  for (const auto& m : modules_) {
    auto s = nonnegative(gamma) ? m.space_at(gamma) : std::nullopt;
    off.push_back(off.back() + (s ? m.spaces()[*s].dim : 0));
  }
  return off;
}

Matrix AmbientModel::gx0_basis(const RootVector& gamma) const {
  const std::size_t dim = weight_space_dim(gamma);
  if (is_zero_root(gamma)) return Matrix::identity(dim);
  auto it = lowered_x0_.find(gamma);
  if (it == lowered_x0_.end()) return Matrix(dim, 0);
  return Matrix::from_columns({it->second}, dim);
}

std::size_t AmbientModel::gx0_dimension() const { return modules_.size() + lowered_x0_.size(); }

std::vector<RootVector> AmbientModel::weight_support() const {
  std::set<RootVector> all;
  for (const auto& m : modules_)
    for (const auto& s : m.spaces())
      if (!is_zero_root(s.depth)) all.insert(s.depth);
  return {all.begin(), all.end()};
}

std::map<RootVector, QuotientSpace> invariant_quotient_weights(const AmbientModel& model,
                                                               const ChevalleyAlgebra& alg,
                                                               const WeightMonoidContext& ctx) {
  const std::size_t n = alg.root_system().rank();
  const auto& mods = model.modules();
  std::map<RootVector, QuotientSpace> out;

  for (const auto& gamma : model.weight_support()) {
    if (!ctx.in_lattice(gamma)) continue;
    const auto offsets = model.block_offsets(gamma);
    const std::size_t w = offsets.back();

    // Unknowns: v (w coordinates), then one coefficient block per condition.
    struct Condition {
      RootVector target;
      std::size_t j;
      bool raising;
    };
    std::vector<Condition> conds;
    for (std::size_t j = 0; j < n; ++j) {
      if (gamma[j] > 0) {
        RootVector t = gamma;
        --t[j];
        if (!is_zero_root(t)) conds.push_back({t, j, true});
      }
      if (ctx.in_sp(j)) {
        RootVector t = gamma;
        ++t[j];
        conds.push_back({t, j, false});
      }
    }
    std::vector<Matrix> targets_gx0;
    std::size_t rows = 0, cols = w;
    for (const auto& c : conds) {
      targets_gx0.push_back(model.gx0_basis(c.target));
      rows += model.weight_space_dim(c.target);
      cols += targets_gx0.back().cols();
    }
    Matrix system(rows, cols);
    std::size_t row = 0, col = w;
    for (std::size_t q = 0; q < conds.size(); ++q) {
      const auto& c = conds[q];
      const auto t_off = model.block_offsets(c.target);
      for (std::size_t k = 0; k < mods.size(); ++k) {
        auto s = mods[k].space_at(gamma);
        if (!s) continue;
        const auto& sp = mods[k].spaces()[*s];
        const auto& dest = c.raising ? sp.up[c.j] : sp.down[c.j];
        if (!dest) continue;
        const Matrix& op = c.raising ? sp.raise[c.j] : sp.lower[c.j];
        for (std::size_t r = 0; r < op.rows(); ++r)
          for (std::size_t cc = 0; cc < op.cols(); ++cc)
            system(row + t_off[k] + r, offsets[k] + cc) = op(r, cc);
      }
      const Matrix& b = targets_gx0[q];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t cc = 0; cc < b.cols(); ++cc) system(row + r, col + cc) = -b(r, cc);
      row += t_off.back();
      col += b.cols();
    }

    Matrix inv;
    if (rows == 0) {
      inv = Matrix::identity(w);
    } else {
      Matrix ker = kernel(system);
      Matrix proj = ker.row_block(0, w);
      std::vector<std::vector<Rational>> basis;
      for (auto c : independent_columns(proj)) basis.push_back(proj.column(c));
      inv = Matrix::from_columns(basis, w);
    }
    QuotientSpace qs{gamma, inv, model.gx0_basis(gamma), 0};
    qs.dim = quotient_dim(qs.invariants, qs.gx0);
    if (qs.dim > 0) out.emplace(gamma, std::move(qs));
  }
  return out;
}

std::vector<std::size_t> codim1_orbit_weights(const WeightMonoidContext& ctx) {
  const auto& f = ctx.basis();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < ctx.root_system().rank() && ok; ++i) {
      if (f[k][i] == 0) continue;
      ok = false;
      for (std::size_t m = 0; m < f.size(); ++m)
        if (m != k && f[m][i] != 0) ok = true;
    }
    if (ok) out.push_back(k);
  }
  return out;
}

OracleReport oracle_tangent_weights(const AmbientModel& model, const ChevalleyAlgebra& alg,
                                    const WeightMonoidContext& ctx) {
  const RootSystem& rs = alg.root_system();
  OracleReport report;
  report.codim1 = codim1_orbit_weights(ctx);
  report.gx0_dimension = model.gx0_dimension();
  report.gx0_verified = model.gx0_basis_verified();

  const auto catalog = enumerate_sc_roots(rs);
  std::vector<std::pair<std::size_t, SphericalRoot>> tangent;
  for (const auto& [gamma, qs] : invariant_quotient_weights(model, alg, ctx)) {
    OracleWeight ow;
    ow.root = classify_root(rs, gamma);
    ow.quotient_dim = qs.dim;
    ow.compatible = ow.root.kind != RootKind::Unclassified && compatible_with_sp(rs, ow.root, ctx.sp_gamma());

    const auto coeffs = *ctx.in_lattice(gamma);
    const auto offsets = model.block_offsets(gamma);
    Matrix surviving = qs.invariants;
    for (auto k : report.codim1) {
      const Integer& a = coeffs[k];
      if (a <= 0) continue;
      if (a > 1) {
        surviving = qs.gx0;
        break;
      }
      // a = 1: the class must have a representative inside V(lambda_k).
      Matrix local(offsets.back(), offsets[k + 1] - offsets[k]);
      for (std::size_t c = 0; c < local.cols(); ++c) local(offsets[k] + c, c) = 1;
      surviving = intersect(surviving, hconcat(local, qs.gx0));
    }
    ow.tangent_dim = quotient_dim(surviving, qs.gx0);
    if (ow.tangent_dim > 1) report.multiplicity_free = false;
    if (ow.tangent_dim > 0) {
      auto pos = std::find(catalog.begin(), catalog.end(), ow.root) - catalog.begin();
      tangent.emplace_back(static_cast<std::size_t>(pos), ow.root);
    }
    report.quotient.push_back(std::move(ow));
  }
  std::sort(tangent.begin(), tangent.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.vector > y.second.vector;
  });
  for (auto& [pos, root] : tangent) report.tangent_weights.push_back(std::move(root));
  return report;
}

OracleReport run_oracle(const WeightMonoidContext& ctx, std::size_t dim_cap) {
  ChevalleyAlgebra alg(ctx.root_system());
  AmbientModel model(alg, ctx, dim_cap);
  return oracle_tangent_weights(model, alg, ctx);
}

}  // namespace sph
