#include "reference.hpp"
#include "sph/sphroots.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace sph;

namespace {

std::set<RootVector> vectors(const std::vector<SphericalRoot>& roots) {
  std::set<RootVector> out;
  for (const auto& r : roots) out.insert(r.vector);
  return out;
}

SphericalRoot root(const RootSystem& rs, RootVector v) {
  auto r = classify_root(rs, v);
  REQUIRE(r.kind != RootKind::Unclassified);
  return r;
}

}  // namespace

TEST_SUITE("sphroots") {

TEST_CASE("small catalogs") {
  CHECK(vectors(enumerate_sc_roots(build_root_system("A1"))) == std::set<RootVector>{{1}, {2}});
  CHECK(vectors(enumerate_sc_roots(build_root_system("A1xA1"))) ==
        std::set<RootVector>{{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}});
  CHECK(vectors(enumerate_sc_roots(build_root_system("G2"))) ==
        std::set<RootVector>{{1, 0}, {2, 0}, {0, 1}, {0, 2}, {4, 2}, {1, 1}});
  CHECK(vectors(enumerate_sc_roots(build_root_system("B2"))) ==
        std::set<RootVector>{{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}});
}

TEST_CASE("catalog equals the brute-force table scan") {
  const std::map<std::string, std::size_t> counts = {
      {"A1", 2},  {"A1xA1", 5}, {"A2", 5},  {"A3", 11}, {"B2", 6},  {"B3", 13},       {"G2", 6},
      {"C3", 11}, {"D4", 23},   {"F4", 20}, {"B4", 22}, {"C4", 19}, {"A1xA1xA1", 9}, {"A2xA1", 9},
      {"D5", 34}, {"E6", 47},   {"A2xG2", 15}};
  for (const auto& [g, count] : counts) {
    CAPTURE(g);
    const RootSystem rs = build_root_system(g);
    const auto cat = enumerate_sc_roots(rs);
    CHECK(vectors(cat) == ref::brute_catalog(rs.cartan_matrix()));
    CHECK(cat.size() == count);
  }
}

TEST_CASE("catalog shape") {
  for (const std::string g : {"A3", "B3", "C3", "D4", "F4", "G2", "A2xA1", "B2xB2"}) {
    CAPTURE(g);
    const RootSystem rs = build_root_system(g);
    const auto cat = enumerate_sc_roots(rs);
    CHECK(vectors(cat).size() == cat.size());
    for (std::size_t k = 1; k < cat.size(); ++k) CHECK(cat[k - 1].vector > cat[k].vector);
    for (const auto& s : cat) {
      for (auto i : s.support()) CHECK(s.vector[i] >= 1);
      if (s.kind == RootKind::DoubleSimple) CHECK(s.vector[s.labeling.front()] == 2);
      if (s.kind != RootKind::OrthogonalPair) {
        auto comps = classify_subdiagram(rs, s.support());
        REQUIRE(comps.size() == 1);
        CHECK(s.support_type == std::string(1, comps[0].type) + std::to_string(comps[0].rank));
      } else {
        CHECK(rs.cartan(s.labeling[0], s.labeling[1]) == 0);
      }
      CHECK(classify_root(rs, s.vector) == s);
    }
  }
}

TEST_CASE("type gating") {
  for (const std::string g : {"A3", "D4", "E6", "A1xA1xA1"})
    for (const auto& s : enumerate_sc_roots(build_root_system(g))) {
      CHECK(s.kind != RootKind::BSum);
      CHECK(s.kind != RootKind::C);
      CHECK(s.kind != RootKind::F4);
      CHECK(s.kind != RootKind::G2Sum);
    }
  for (const auto& s : enumerate_sc_roots(build_root_system("B2"))) CHECK(s.kind != RootKind::C);
}

TEST_CASE("products add cross-component orthogonal pairs") {
  const auto single = enumerate_sc_roots(build_root_system("A2"));
  const auto prod = enumerate_sc_roots(build_root_system("A2xA1"));
  // 5 from A2, 2 from A1, and alpha + alpha' for the two A2 nodes against the A1 node.
  CHECK(prod.size() == single.size() + 2 + 2);
  CHECK(std::count_if(prod.begin(), prod.end(), [](const auto& s) { return s.kind == RootKind::OrthogonalPair; }) ==
        2);
}

TEST_CASE("tags and labels") {
  const RootSystem a3 = build_root_system("A3");
  CHECK(root(a3, {1, 2, 1}).tag() == "a1+2*a2+a3");
  CHECK(root(a3, {1, 2, 1}).label() == "a1+2*a2+a3 (A3)");
  CHECK(root(a3, {1, 2, 1}).kind == RootKind::A3Middle);
  CHECK(root(a3, {0, 2, 0}).tag() == "2*a2");
  CHECK(root(a3, {1, 0, 1}).kind == RootKind::OrthogonalPair);
  CHECK(root(a3, {1, 0, 1}).support_type == "A1xA1");
  CHECK(root(build_root_system("G2"), {4, 2}).kind == RootKind::G2Double);
  CHECK(root(build_root_system("B3"), {1, 2, 3}).kind == RootKind::B3Special);
  CHECK(classify_root(a3, {1, 1, 0}).kind == RootKind::ASum);
  CHECK(classify_root(a3, {2, 1, 0}).kind == RootKind::Unclassified);
  CHECK(classify_root(a3, {2, 1, 0}).support_type == "?");
  CHECK(vector_tag({0, 3, 1}) == "3*a2+a3");
  CHECK(to_string(RootKind::BDouble) == "Bn-double");
}

TEST_CASE("compatibility with S^p") {
  const RootSystem b3 = build_root_system("B3");
  const auto bsum = root(b3, {1, 1, 1});
  CHECK(compatible_with_sp(b3, bsum, {1}));
  CHECK(!compatible_with_sp(b3, bsum, {}));
  CHECK(!compatible_with_sp(b3, bsum, {1, 2}));

  CHECK(compatible_with_sp(build_root_system("A1"), root(build_root_system("A1"), {1}), {}));

  // Sandwich: shrinking below the lower bound and growing past the upper bound both fail.
  const RootSystem a3 = build_root_system("A3");
  const auto asum = root(a3, {1, 1, 1});
  CHECK(compatible_with_sp(a3, asum, {1}));
  CHECK(!compatible_with_sp(a3, asum, {}));
  CHECK(!compatible_with_sp(a3, asum, {0, 1}));

  // C3: alpha_1 is dropped from the lower bound only.
  const RootSystem c3 = build_root_system("C3");
  const auto cn = root(c3, {1, 2, 1});
  CHECK(compatible_with_sp(c3, cn, {2}));
  CHECK(compatible_with_sp(c3, cn, {0, 2}));
  CHECK(!compatible_with_sp(c3, cn, {}));
  CHECK(!compatible_with_sp(c3, cn, {0}));

  // Upper bound attained.
  for (const std::string g : {"A3", "B3", "C3", "G2", "A2xA1"}) {
    const RootSystem rs = build_root_system(g);
    for (const auto& s : enumerate_sc_roots(rs)) {
      std::vector<std::size_t> upper;
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (rs.pairing(i, s.vector) == 0 && !(s.kind == RootKind::BSum && i == s.labeling.back())) upper.push_back(i);
      CHECK(compatible_with_sp(rs, s, upper));
    }
  }
}

}  // TEST_SUITE
