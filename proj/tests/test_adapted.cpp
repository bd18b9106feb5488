#include "battery.hpp"
#include "sph/adapted.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace sph;

namespace {

const WeightMonoidContext& luna() {
  static const WeightMonoidContext ctx(build_root_system("A1xA1"), {{2, 0}, {4, 2}});
  return ctx;
}

const WeightMonoidContext& sl2() {
  static const WeightMonoidContext ctx(build_root_system("A1"), {{2}});
  return ctx;
}

SphericalRoot root(const WeightMonoidContext& ctx, RootVector v) { return classify_root(ctx.root_system(), v); }

std::set<RootVector> vectors(const std::vector<SphericalRoot>& roots) {
  std::set<RootVector> out;
  for (const auto& r : roots) out.insert(r.vector);
  return out;
}

}  // namespace

TEST_SUITE("adapted") {

TEST_CASE("singleton verdicts in the two-line example") {
  // vector -> (adapted failure, N-adapted failure); empty means accepted.
  const std::map<RootVector, std::pair<std::string, std::string>> expected = {
      {{2, 0}, {"3", "3"}}, {{1, 1}, {"6", "6"}}, {{1, 0}, {"", ""}}, {{0, 2}, {"5", ""}}, {{0, 1}, {"", "4a"}}};
  const auto report = tangent_space(luna());
  REQUIRE(report.diagnostics.size() == expected.size());
  for (const auto& d : report.diagnostics) {
    CAPTURE(d.root.tag());
    const auto& [a, n] = expected.at(d.root.vector);
    CHECK(d.adapted.ok == a.empty());
    CHECK(d.adapted.failed == a);
    CHECK(d.n_adapted.ok == n.empty());
    CHECK(d.n_adapted.failed == n);
  }
  CHECK(report.dimension == 2);
  CHECK(vectors(report.weights) == std::set<RootVector>{{1, 0}, {0, 2}});
}

TEST_CASE("singleton verdicts for SL2") {
  CHECK(is_adapted_singleton(sl2(), root(sl2(), {1})).ok);
  CHECK(is_adapted_singleton(sl2(), root(sl2(), {2})).failed == "5");
  CHECK(is_n_adapted_singleton(sl2(), root(sl2(), {2})).ok);
  const auto t = tangent_space(sl2());
  CHECK(t.dimension == 1);
  CHECK(vectors(t.weights) == std::set<RootVector>{{2}});
}

TEST_CASE("empty monoid") {
  const WeightMonoidContext ctx(build_root_system("B3"), {});
  const auto t = tangent_space(ctx);
  CHECK(t.dimension == 0);
  for (const auto& d : t.diagnostics) CHECK(d.n_adapted.failed == "1");
  const auto subsets = enumerate_n_adapted_subsets(ctx, 0);
  REQUIRE(subsets.subsets.size() == 1);
  CHECK(subsets.subsets[0].sigma.empty());
  CHECK(subsets.subsets[0].maximal);
}

TEST_CASE("system axioms") {
  const RootSystem a2 = build_root_system("A2");
  CHECK(check_system_axioms(a2, {}, {}, {}).all());

  const RootSystem a1 = build_root_system("A1");
  const std::vector<SphericalRoot> alpha = {classify_root(a1, {1})};
  CHECK(check_system_axioms(a1, {}, alpha, {{1}, {1}}).all());
  CHECK(!check_system_axioms(a1, {}, alpha, {{1}, {0}}).A2);
  CHECK(!check_system_axioms(a1, {}, alpha, {{2}, {0}}).A1);
  CHECK_THROWS_AS(check_system_axioms(a1, {}, alpha, {{1, 0}, {1}}), Error);

  // 2 alpha_1 next to alpha_2 in A2: <alpha_1^vee, alpha_2> = -1 is odd.
  const std::vector<SphericalRoot> pair = {classify_root(a2, {2, 0}), classify_root(a2, {0, 1})};
  const auto v = check_system_axioms(a2, {}, pair, {{-1, 1}, {-1, 1}});
  CHECK(!v.Sigma1);
  CHECK(v.A2);
}

TEST_CASE("subset verdicts") {
  CHECK(is_adapted_subset(luna(), {}).ok());
  CHECK(is_adapted_subset(luna(), {root(luna(), {1, 0})}).ok());
  CHECK(is_n_adapted_subset(sl2(), {root(sl2(), {2})}).ok);
  CHECK(is_n_adapted_subset(sl2(), {root(sl2(), {2})}).witness == std::vector<SphericalRoot>{root(sl2(), {1})});
  CHECK(!is_n_adapted_subset(luna(), {root(luna(), {0, 1})}).ok);
  CHECK(!is_n_adapted_subset(luna(), {root(luna(), {1, 0}), root(luna(), {0, 2})}).ok);
}

TEST_CASE("subset enumeration and components") {
  const auto en = enumerate_n_adapted_subsets(luna(), 2);
  std::set<std::set<RootVector>> found, maximal;
  for (const auto& s : en.subsets) {
    found.insert(vectors(s.sigma));
    if (s.maximal) maximal.insert(vectors(s.sigma));
  }
  CHECK(found == std::set<std::set<RootVector>>{{}, {{1, 0}}, {{0, 2}}});
  CHECK(maximal == std::set<std::set<RootVector>>{{{1, 0}}, {{0, 2}}});

  const auto one = enumerate_n_adapted_subsets(sl2(), 1);
  REQUIRE(one.subsets.size() == 2);
  CHECK(one.subsets[1].maximal);
  CHECK(!one.subsets[0].maximal);

  CHECK_THROWS_AS(enumerate_n_adapted_subsets(luna(), 3), Error);
  try {
    enumerate_n_adapted_subsets(luna(), 2, 2);
    FAIL("budget not enforced");
  } catch (const SearchBudgetError& e) {
    CHECK(e.code() == Errc::SearchBudgetExceeded);
    CHECK(e.partial().examined <= 3);
  }
}

TEST_CASE("cut property") {
  CHECK(check_prop_cut(luna(), {root(luna(), {1, 0})}).ok);
  CHECK(check_prop_cut(luna(), {}).ok);
  CHECK_THROWS_AS(check_prop_cut(luna(), {root(luna(), {0, 1})}), Error);
  CHECK(in_monoid({{1, 0}, {0, 2}}, {2, 4}));
  CHECK(!in_monoid({{1, 0}, {0, 2}}, {1, 1}));
  CHECK(in_monoid({}, {0, 0}));
}

TEST_CASE("battery properties") {
  for (const auto& c : ref::curated_cases()) {
    CAPTURE(c.name());
    const WeightMonoidContext ctx(build_root_system(c.group), c.weights);
    const auto t = tangent_space(ctx);
    CHECK(vectors(t.weights).size() == t.weights.size());

    for (const auto& d : t.diagnostics) {
      CHECK(is_n_adapted_subset(ctx, {d.root}).ok == d.n_adapted.ok);
      const auto check = is_adapted_subset(ctx, {d.root});
      CHECK(check.ok() == d.adapted.ok);
      CHECK(check.identification_consistent);
    }
    for (const auto& w : t.weights) CHECK(compatible_with_sp(ctx.root_system(), w, ctx.sp_gamma()));

    for (std::size_t i = 0; i < ctx.root_system().rank(); ++i) {
      RootVector a(ctx.root_system().rank(), 0);
      a[i] = 1;
      RootVector a2 = a;
      a2[i] = 2;
      CHECK(!(is_n_adapted_singleton(ctx, root(ctx, a)).ok && is_n_adapted_singleton(ctx, root(ctx, a2)).ok));
    }

    // Permuting F changes nothing.
    auto rev = c.weights;
    std::reverse(rev.begin(), rev.end());
    const WeightMonoidContext flipped(build_root_system(c.group), rev);
    const auto t2 = tangent_space(flipped);
    REQUIRE(t2.diagnostics.size() == t.diagnostics.size());
    for (std::size_t k = 0; k < t.diagnostics.size(); ++k) {
      CHECK(t2.diagnostics[k].adapted.failed == t.diagnostics[k].adapted.failed);
      CHECK(t2.diagnostics[k].n_adapted.failed == t.diagnostics[k].n_adapted.failed);
    }

    for (const auto& s : enumerate_n_adapted_subsets(ctx, ctx.rank()).subsets) CHECK(check_prop_cut(ctx, s.sigma).ok);
  }
}

}  // TEST_SUITE
