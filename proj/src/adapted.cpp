#include "sph/adapted.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sph {

namespace {

Verdict singleton(const WeightMonoidContext& ctx, const SphericalRoot& sigma, bool n_adapted) {
  const RootSystem& rs = ctx.root_system();
  auto coords = ctx.in_lattice(sigma.vector);
  if (!coords) return Verdict::fail("1", "not in ZGamma");
  if (!compatible_with_sp(rs, sigma, ctx.sp_gamma())) return Verdict::fail("2", "not compatible with S^p(Gamma)");

  if (sigma.kind != RootKind::Simple) {
    for (std::size_t j = 0; j < ctx.rank(); ++j) {
      if ((*coords)[j] <= 0) continue;
      bool found = false;
      for (std::size_t b = 0; b < rs.rank() && !found; ++b)
        found = !ctx.in_sp(b) && ctx.coroot_functional(b).positive_multiple_of(ctx.e_gamma()[j]).has_value();
      if (!found)
        return Verdict::fail("3", "lambda_" + std::to_string(j + 1) + "^# is positive on sigma but no coroot is a ray through it");
    }
  } else {
    const std::size_t i = sigma.labeling.front();
    auto a = ctx.a_set(i);
    bool size_ok = n_adapted ? a.size() == 2 : (a.size() == 1 || a.size() == 2);
    if (!size_ok) return Verdict::fail("4a", "|a(alpha)| = " + std::to_string(a.size()));
    for (const auto& d : a)
      if (!d.is_nonnegative()) return Verdict::fail("4b", "a(alpha) contains " + to_string(d) + ", not in Gamma^vee");
    for (std::size_t j = 0; j < ctx.rank(); ++j)
      if ((*coords)[j] > 1)
        return Verdict::fail("4c", "lambda_" + std::to_string(j + 1) + "^# takes value " + (*coords)[j].str() + " > 1");
  }

  if (sigma.kind == RootKind::DoubleSimple) {
    const std::size_t i = sigma.labeling.front();
    if (!n_adapted && ctx.in_lattice(rs.simple_root(i))) return Verdict::fail("5", "alpha lies in ZGamma");
    for (const auto& v : ctx.coroot_functional(i).values)
      if (!is_integer(v / 2)) return Verdict::fail("5", "alpha^vee is odd on F");
  }
  if (sigma.kind == RootKind::OrthogonalPair &&
      ctx.coroot_functional(sigma.labeling[0]) != ctx.coroot_functional(sigma.labeling[1]))
    return Verdict::fail("6", "the two coroots differ on F");
  return Verdict::pass();
}

}  // namespace

Verdict is_adapted_singleton(const WeightMonoidContext& ctx, const SphericalRoot& sigma) {
  return singleton(ctx, sigma, false);
}

Verdict is_n_adapted_singleton(const WeightMonoidContext& ctx, const SphericalRoot& sigma) {
  return singleton(ctx, sigma, true);
}

TangentReport tangent_space(const WeightMonoidContext& ctx) {
  TangentReport report;
  for (auto& sigma : enumerate_sc_roots(ctx.root_system())) {
    RootDiagnostic d{sigma, is_adapted_singleton(ctx, sigma), is_n_adapted_singleton(ctx, sigma)};
    if (d.n_adapted.ok) report.weights.push_back(sigma);
    report.diagnostics.push_back(std::move(d));
  }
  report.dimension = report.weights.size();
  return report;
}

AxiomVerdicts check_system_axioms(const RootSystem& rs, const std::vector<std::size_t>& sp,
                                  const std::vector<SphericalRoot>& sigma, const PairingTable& pairing) {
  const std::size_t m = sigma.size();
  for (std::size_t d = 0; d < pairing.size(); ++d)
    if (pairing[d].size() != m)
      throw Error(Errc::MalformedPairing,
                  "color " + std::to_string(d) + " pairs with " + std::to_string(pairing[d].size()) +
                      " roots, expected " + std::to_string(m),
                  d);

  AxiomVerdicts v;
  for (const auto& row : pairing)
    for (std::size_t k = 0; k < m; ++k)
      if (row[k] > 1 || (row[k] == 1 && sigma[k].kind != RootKind::Simple)) v.A1 = false;

  std::vector<bool> covered(pairing.size(), false);
  for (std::size_t k = 0; k < m; ++k) {
    if (sigma[k].kind != RootKind::Simple) continue;
    const std::size_t i = sigma[k].labeling.front();
    std::vector<std::size_t> members;
    for (std::size_t d = 0; d < pairing.size(); ++d)
      if (pairing[d][k] == 1) {
        members.push_back(d);
        covered[d] = true;
      }
    if (members.size() != 2) {
      v.A2 = false;
      continue;
    }
    for (std::size_t q = 0; q < m; ++q)
      if (pairing[members[0]][q] + pairing[members[1]][q] != rs.pairing(i, sigma[q].vector)) v.A2 = false;
  }
  v.A3 = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });

  for (std::size_t k = 0; k < m; ++k) {
    if (sigma[k].kind == RootKind::DoubleSimple) {
      const std::size_t i = sigma[k].labeling.front();
      for (std::size_t q = 0; q < m; ++q) {
        if (q == k) continue;
        int p = rs.pairing(i, sigma[q].vector);
        if (p % 2 != 0 || p > 0) v.Sigma1 = false;
      }
    }
    if (sigma[k].kind == RootKind::OrthogonalPair) {
      const auto& lab = sigma[k].labeling;
      for (std::size_t q = 0; q < m; ++q)
        if (rs.pairing(lab[0], sigma[q].vector) != rs.pairing(lab[1], sigma[q].vector)) v.Sigma2 = false;
    }
    if (!compatible_with_sp(rs, sigma[k], sp)) v.S = false;
  }
  return v;
}

namespace {

struct RawColor {
  std::size_t owner;  // position in the Sigma list of the simple root it belongs to
  Functional functional;
};

class SubsetChecker {
 public:
  SubsetChecker(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma) : ctx_(ctx), sigma_(sigma) {}

  SphericalSystemCheck run() {
    SphericalSystemCheck base;
    base.sp = ctx_.sp_gamma();
    base.sigma = sigma_;
    for (const auto& s : sigma_) {
      auto c = ctx_.in_lattice(s.vector);
      if (!c) {
        base.in_lattice = false;
        base.failure = "1";
        return base;
      }
      coords_.push_back(std::move(*c));
    }
    for (std::size_t k = 0; k < sigma_.size(); ++k) {
      if (sigma_[k].kind != RootKind::Simple) continue;
      auto a = ctx_.a_set(sigma_[k].labeling.front());
      if (a.empty() || a.size() > 2) {
        base.a_sets_valid = false;
        base.failure = "a-set";
        return base;
      }
      raw_.push_back({k, a.front()});
      raw_.push_back({k, a.back()});
    }

    std::vector<std::vector<std::size_t>> blocks;
    enumerate(0, blocks, base);
    SphericalSystemCheck chosen = best_ ? *best_ : *first_;
    chosen.identification_consistent = consistent_;
    chosen.identifications_tried = tried_;
    return chosen;
  }

 private:
  // Assigns raw color `next` to a new block or to a compatible existing one.
  void enumerate(std::size_t next, std::vector<std::vector<std::size_t>>& blocks, const SphericalSystemCheck& base) {
    if (next == raw_.size()) {
      record(evaluate(blocks, base));
      return;
    }
    blocks.push_back({next});
    enumerate(next + 1, blocks, base);
    blocks.pop_back();
    for (auto& block : blocks) {
      bool fits = std::all_of(block.begin(), block.end(), [&](std::size_t c) {
        return raw_[c].owner != raw_[next].owner && raw_[c].functional == raw_[next].functional;
      });
      if (!fits) continue;
      block.push_back(next);
      enumerate(next + 1, blocks, base);
      block.pop_back();
    }
  }

  void record(SphericalSystemCheck check) {
    ++tried_;
    if (check.axioms.all()) {
      if (!system_verdict_) system_verdict_ = check.ok();
      else if (*system_verdict_ != check.ok()) consistent_ = false;
    }
    if (!first_) first_ = check;
    if (!best_ && check.ok()) best_ = std::move(check);
  }

  Functional coroot(std::size_t i) const { return ctx_.coroot_functional(i); }

  SphericalSystemCheck evaluate(const std::vector<std::vector<std::size_t>>& blocks, SphericalSystemCheck check) const {
    const RootSystem& rs = ctx_.root_system();
    const std::size_t n = rs.rank();
    const std::size_t m = sigma_.size();

    PairingTable pairing;
    for (const auto& block : blocks) {
      check.A.push_back(raw_[block.front()].functional);
      std::vector<Rational> row;
      for (std::size_t k = 0; k < m; ++k) row.push_back(check.A.back()(coords_[k]));
      pairing.push_back(std::move(row));
    }
    check.axioms = check_system_axioms(rs, check.sp, sigma_, pairing);

    // Augmentation by ZGamma with the pairing given by the color functionals.
    std::vector<bool> simple_in_sigma(n, false), half_in_sigma(n, false);
    for (std::size_t k = 0; k < m; ++k) {
      const auto& s = sigma_[k];
      if (s.kind == RootKind::Simple) {
        simple_in_sigma[s.labeling.front()] = true;
        std::vector<std::size_t> members;
        for (std::size_t d = 0; d < pairing.size(); ++d)
          if (pairing[d][k] == 1) members.push_back(d);
        Functional sum = coroot(s.labeling.front()).scaled(0);
        for (auto d : members) sum = sum + check.A[d];
        if (members.size() != 2 || sum != coroot(s.labeling.front())) check.augmentation.a2 = false;
      } else if (s.kind == RootKind::DoubleSimple) {
        const std::size_t i = s.labeling.front();
        half_in_sigma[i] = true;
        if (ctx_.in_lattice(rs.simple_root(i))) check.augmentation.sigma1 = false;
        for (const auto& v : coroot(i).values)
          if (!is_integer(v / 2)) check.augmentation.sigma1 = false;
      } else if (s.kind == RootKind::OrthogonalPair) {
        if (coroot(s.labeling[0]) != coroot(s.labeling[1])) check.augmentation.sigma2 = false;
      }
    }
    for (auto i : check.sp)
      if (!coroot(i).is_zero()) check.augmentation.s = false;

    // Colors.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<std::size_t> anchors;
      for (auto c : blocks[b]) anchors.push_back(sigma_[raw_[c].owner].labeling.front());
      check.colors.push_back({Color::Kind::a, anchors, check.A[b]});
    }
    for (std::size_t i = 0; i < n; ++i)
      if (half_in_sigma[i]) check.colors.push_back({Color::Kind::a2, {i}, coroot(i).scaled(Rational(1, 2))});
    std::vector<std::size_t> cls(n);
    std::iota(cls.begin(), cls.end(), 0);
    for (const auto& s : sigma_)
      if (s.kind == RootKind::OrthogonalPair) {
        std::size_t lo = std::min(cls[s.labeling[0]], cls[s.labeling[1]]);
        std::size_t hi = std::max(cls[s.labeling[0]], cls[s.labeling[1]]);
        for (auto& c : cls)
          if (c == hi) c = lo;
      }
    std::map<std::size_t, std::vector<std::size_t>> b_classes;
    for (std::size_t i = 0; i < n; ++i)
      if (!ctx_.in_sp(i) && !simple_in_sigma[i] && !half_in_sigma[i]) b_classes[cls[i]].push_back(i);
    for (auto& [rep, members] : b_classes) check.colors.push_back({Color::Kind::b, members, coroot(members.front())});

    for (std::size_t j = 0; j < ctx_.rank() && check.cond3; ++j) {
      bool nonpositive = std::all_of(coords_.begin(), coords_.end(), [&](const auto& c) { return c[j] <= 0; });
      bool ray = std::any_of(check.colors.begin(), check.colors.end(), [&](const Color& col) {
        return col.functional.positive_multiple_of(ctx_.e_gamma()[j]).has_value();
      });
      check.cond3 = nonpositive || ray;
    }
    check.cond4 = std::all_of(check.colors.begin(), check.colors.end(),
                              [](const Color& col) { return col.functional.is_nonnegative(); });

    const auto& ax = check.axioms;
    const auto& au = check.augmentation;
    const std::pair<bool, const char*> items[] = {
        {ax.A1, "A1"},     {ax.A2, "A2"},         {ax.A3, "A3"},         {ax.Sigma1, "Sigma1"},
        {ax.Sigma2, "Sigma2"}, {ax.S, "S"},       {au.a1, "a1"},         {au.a2, "a2"},
        {au.sigma1, "sigma1"}, {au.sigma2, "sigma2"}, {au.s, "s"},       {check.cond3, "3"},
        {check.cond4, "4"}};
    for (const auto& [good, name] : items)
      if (!good) {
        check.failure = name;
        break;
      }
    return check;
  }

  const WeightMonoidContext& ctx_;
  const std::vector<SphericalRoot>& sigma_;
  std::vector<std::vector<Integer>> coords_;
  std::vector<RawColor> raw_;
  std::optional<SphericalSystemCheck> first_, best_;
  std::optional<bool> system_verdict_;
  bool consistent_ = true;
  std::size_t tried_ = 0;
};

bool same_set(std::vector<RootVector> a, std::vector<RootVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

SphericalSystemCheck is_adapted_subset(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma) {
  return SubsetChecker(ctx, sigma).run();
}

NAdaptedVerdict is_n_adapted_subset(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma) {
  const RootSystem& rs = ctx.root_system();
  std::vector<RootVector> target;
  std::vector<std::size_t> doubles;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    target.push_back(sigma[k].vector);
    if (sigma[k].kind == RootKind::DoubleSimple) doubles.push_back(k);
  }

  NAdaptedVerdict verdict;
  for (std::size_t mask = 0; mask < (std::size_t{1} << doubles.size()); ++mask) {
    std::vector<SphericalRoot> tilde = sigma;
    for (std::size_t b = 0; b < doubles.size(); ++b)
      if (mask >> b & 1) tilde[doubles[b]] = classify_root(rs, rs.simple_root(sigma[doubles[b]].labeling.front()));
    std::vector<RootVector> vecs;
    for (const auto& s : tilde) vecs.push_back(s.vector);
    std::sort(vecs.begin(), vecs.end());
    if (std::adjacent_find(vecs.begin(), vecs.end()) != vecs.end()) continue;

    SphericalSystemCheck check = is_adapted_subset(ctx, tilde);
    bool ok = check.ok();
    verdict.branches.push_back(std::move(check));
    if (!ok) continue;
    std::vector<RootVector> image;
    for (const auto& s : tilde) {
      RootVector v = s.vector;
      if (s.kind == RootKind::Simple && ctx.a_set(s.labeling.front()).size() == 1)
        for (auto& x : v) x *= 2;
      image.push_back(std::move(v));
    }
    if (same_set(image, target)) {
      verdict.ok = true;
      verdict.witness = tilde;
      break;
    }
  }
  return verdict;
}

SubsetEnumeration enumerate_n_adapted_subsets(const WeightMonoidContext& ctx, std::size_t max_size,
                                              std::size_t cap) {
  if (max_size > ctx.rank())
    throw Error(Errc::Precondition, "max subset size " + std::to_string(max_size) + " exceeds the rank of Gamma (" +
                                        std::to_string(ctx.rank()) + ")");
  const RootSystem& rs = ctx.root_system();
  std::vector<SphericalRoot> pool;
  for (auto& s : enumerate_sc_roots(rs))
    if (ctx.in_lattice(s.vector)) pool.push_back(std::move(s));

  SubsetEnumeration out;
  auto finish = [&] {
    for (auto& e : out.subsets) {
      e.maximal = std::none_of(out.subsets.begin(), out.subsets.end(), [&](const SubsetEntry& f) {
        if (f.sigma.size() <= e.sigma.size()) return false;
        return std::all_of(e.sigma.begin(), e.sigma.end(), [&](const SphericalRoot& s) {
          return std::find(f.sigma.begin(), f.sigma.end(), s) != f.sigma.end();
        });
      });
    }
  };

  std::vector<std::size_t> pick;
  auto visit = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (pick.size() == size) {
      std::vector<SphericalRoot> sigma;
      std::vector<std::vector<Rational>> cols;
      for (auto k : pick) {
        sigma.push_back(pool[k]);
        cols.emplace_back(pool[k].vector.begin(), pool[k].vector.end());
      }
      if (sph::rank(Matrix::from_columns(cols, rs.rank())) != size) return;
      if (++out.examined > cap) {
        finish();
        throw SearchBudgetError("subset search exceeded " + std::to_string(cap) + " candidates", out);
      }
      if (is_n_adapted_subset(ctx, sigma).ok) out.subsets.push_back({std::move(sigma), false});
      return;
    }
    for (std::size_t k = start; k < pool.size(); ++k) {
      pick.push_back(k);
      self(self, k + 1, size);
      pick.pop_back();
    }
  };
  for (std::size_t size = 0; size <= max_size; ++size) visit(visit, 0, size);
  finish();
  return out;
}

bool in_monoid(const std::vector<RootVector>& gens, const RootVector& v) {
  auto rec = [&](auto&& self, std::size_t k, const RootVector& rest) -> bool {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return true;
    if (k == gens.size()) return false;
    int bound = -1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (gens[k][i] > 0) {
        int b = rest[i] / gens[k][i];
        bound = bound < 0 ? b : std::min(bound, b);
      }
    }
    if (bound < 0) return self(self, k + 1, rest);
    RootVector cur = rest;
    for (int t = 0; t <= bound; ++t) {
      if (std::all_of(cur.begin(), cur.end(), [](int x) { return x >= 0; }) && self(self, k + 1, cur)) return true;
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= gens[k][i];
    }
    return false;
  };
  return rec(rec, 0, v);
}

PropCutResult check_prop_cut(const WeightMonoidContext& ctx, const std::vector<SphericalRoot>& sigma) {
  std::vector<RootVector> gens;
  for (const auto& s : sigma) {
    if (!is_n_adapted_singleton(ctx, s).ok)
      throw Error(Errc::Precondition, s.tag() + " is not N-adapted");
    gens.push_back(s.vector);
  }
  PropCutResult result;
  for (const auto& s : enumerate_sc_roots(ctx.root_system())) {
    if (std::find(sigma.begin(), sigma.end(), s) != sigma.end()) continue;
    if (in_monoid(gens, s.vector) && is_n_adapted_singleton(ctx, s).ok) {
      result.ok = false;
      result.counterexample = s;
      break;
    }
  }
  return result;
}

}  // namespace sph
