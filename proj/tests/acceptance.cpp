// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Exact arithmetic throughout, so every comparison
// is an equality with zero tolerance.

#include "battery.hpp"
#include "sph/adapted.hpp"
#include "sph/oracle.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace sph;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kLunaSeconds = 1.0;
constexpr double kBatterySeconds = 300.0;
constexpr std::size_t kMinContexts = 30;
constexpr std::uint32_t kSeed = 20240611;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::set<RootVector> vectors(const std::vector<SphericalRoot>& roots) {
  std::set<RootVector> out;
  for (const auto& r : roots) out.insert(r.vector);
  return out;
}

struct Tally {
  std::size_t checked = 0, failed = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  bool ok() const { return failed == 0; }
  std::string summary(const std::string& unit) const {
    std::ostringstream out;
    out << checked << " " << unit << ", " << failed << " failures";
    if (!ok()) out << " (first: " << first << ")";
    return out.str();
  }
};

int report(int n, bool ok, const std::string& text) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << text << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;

  // 1. Two lines meeting in a point.
  {
    const auto t0 = Clock::now();
    const WeightMonoidContext ctx(build_root_system("A1xA1"), {{2, 0}, {4, 2}});
    const auto tangent = tangent_space(ctx);
    const auto en = enumerate_n_adapted_subsets(ctx, ctx.rank());
    const double secs = seconds_since(t0);
    std::size_t maximal = 0, maximal_size_one = 0;
    for (const auto& s : en.subsets)
      if (s.maximal) {
        ++maximal;
        maximal_size_one += s.sigma.size() == 1;
      }
    const bool ok = tangent.dimension == 2 && maximal == 2 && maximal_size_one == 2 && secs < kLunaSeconds;
    std::ostringstream text;
    text << "A1xA1 [[2,0],[4,2]]: tangent dimension " << tangent.dimension << ", " << maximal
         << " maximal subsets (" << maximal_size_one << " of size 1), " << secs << " s";
    failures += report(1, ok, text.str());
  }

  const auto cases = ref::battery(kSeed, 40);
  std::set<std::string> groups_seen;
  Tally agree, quotient, cut, exclusion, irreps, paths;
  double oracle_seconds = 0;

  for (const auto& c : cases) {
    const std::string name = c.name();
    groups_seen.insert(c.group);
    try {
      const WeightMonoidContext ctx(build_root_system(c.group), c.weights);
      const RootSystem& rs = ctx.root_system();
      const auto tangent = tangent_space(ctx);

      // 2 and 4: the oracle.
      const auto t0 = Clock::now();
      const ChevalleyAlgebra alg(rs);
      const AmbientModel model(alg, ctx);
      const auto quotient_spaces = invariant_quotient_weights(model, alg, ctx);
      const auto oracle = oracle_tangent_weights(model, alg, ctx);
      oracle_seconds += seconds_since(t0);
      agree.record(oracle.multiplicity_free && vectors(oracle.tangent_weights) == vectors(tangent.weights), name);

      const auto catalog = enumerate_sc_roots(rs);
      for (const auto& [gamma, q] : quotient_spaces) {
        const auto root = classify_root(rs, gamma);
        const bool in_catalog = root.kind != RootKind::Unclassified;
        const bool ok = in_catalog && compatible_with_sp(rs, root, ctx.sp_gamma()) &&
                        (root.kind == RootKind::Simple || q.dim <= 1);
        quotient.record(ok, name + " " + vector_tag(gamma));
      }

      // 6: every irrep built for this context.
      const auto& a = rs.cartan_matrix();
      for (const auto& m : model.modules()) {
        bool ok = Integer(m.dimension()) == ref::weyl_dimension(a, m.highest_weight()) && m.contravariant();
        const auto dominant = ref::freudenthal(a, m.highest_weight());
        for (const auto& [mu, k] : m.multiplicities()) ok = ok && ref::multiplicity(a, dominant, mu) == k;
        irreps.record(ok, name);
      }

      // 5: the cut property on every N-adapted subset, and alpha / 2 alpha.
      for (const auto& s : enumerate_n_adapted_subsets(ctx, ctx.rank()).subsets)
        cut.record(check_prop_cut(ctx, s.sigma).ok, name);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        RootVector one(rs.rank(), 0), two(rs.rank(), 0);
        one[i] = 1;
        two[i] = 2;
        const bool both = is_n_adapted_singleton(ctx, classify_root(rs, one)).ok &&
                          is_n_adapted_singleton(ctx, classify_root(rs, two)).ok;
        exclusion.record(!both, name + " a" + std::to_string(i + 1));
      }

      // 7: singleton and subset paths.
      for (const auto& d : tangent.diagnostics)
        paths.record(is_n_adapted_subset(ctx, {d.root}).ok == d.n_adapted.ok, name + " " + d.root.tag());
    } catch (const std::exception& e) {
      const std::string what = name + ": exception " + e.what();
      for (Tally* t : {&agree, &quotient, &cut, &exclusion, &irreps, &paths}) t->record(false, what);
    }
  }

  {
    const bool coverage = cases.size() >= kMinContexts && groups_seen.size() == ref::kBatteryGroups.size();
    const bool ok = coverage && agree.ok() && oracle_seconds < kBatterySeconds;
    std::ostringstream text;
    text << "oracle weights equal combinatorial weights, multiplicity free: " << agree.summary("contexts") << " over "
         << groups_seen.size() << " groups, " << oracle_seconds << " s";
    failures += report(2, ok, text.str());
  }

  // 3. Catalog sizes against the brute-force table scan and the stated counts.
  {
    const std::vector<std::pair<std::string, std::size_t>> stated = {{"A1", 2}, {"A1xA1", 5}, {"A2", 5}, {"A3", 11},
                                                                     {"B2", 7}, {"B3", 13},   {"G2", 6}};
    bool ok = true;
    std::ostringstream text;
    for (const auto& [g, count] : stated) {
      const RootSystem rs = build_root_system(g);
      const auto cat = enumerate_sc_roots(rs);
      const auto brute = ref::brute_catalog(rs.cartan_matrix());
      const bool match = vectors(cat) == brute && cat.size() == count;
      ok = ok && match;
      text << " " << g << " " << cat.size() << "/" << brute.size() << "/" << count << (match ? "" : "!");
    }
    failures += report(3, ok, "catalog/brute-force/stated:" + text.str());
  }

  failures += report(4, quotient.ok(), "quotient weights in catalog, compatible, dimension <= 1 off S: " +
                                           quotient.summary("weights"));
  failures += report(5, cut.ok() && exclusion.ok(),
                     "cut property " + cut.summary("subsets") + "; alpha/2alpha exclusion " +
                         exclusion.summary("simple roots"));
  failures += report(6, irreps.ok(), "Weyl dimension, Freudenthal multiplicities, contravariance: " +
                                         irreps.summary("irreps"));
  failures += report(7, paths.ok(), "singleton and subset N-adapted verdicts agree: " + paths.summary("roots"));

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
