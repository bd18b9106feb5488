#include "battery.hpp"
#include "sph/error.hpp"
#include "sph/irrep.hpp"

#include <doctest.h>

#include <random>

using namespace sph;

namespace {

void check_module(const ChevalleyAlgebra& alg, const IrrepModule& m) {
  const RootSystem& rs = alg.root_system();
  const auto a = rs.cartan_matrix();
  const std::size_t n = rs.rank();
  CHECK(Integer(m.dimension()) == ref::weyl_dimension(a, m.highest_weight()));
  CHECK(Integer(m.dimension()) == weyl_dimension(rs, m.highest_weight()));

  const auto dominant = ref::freudenthal(a, m.highest_weight());
  std::size_t total = 0;
  for (const auto& [mu, k] : m.multiplicities()) {
    CHECK(ref::multiplicity(a, dominant, mu) == k);
    total += k;
  }
  CHECK(total == m.dimension());
  for (const auto& [mu, k] : dominant)
    if (k > 0) CHECK(m.multiplicities().count(mu) == 1);

  CHECK(m.contravariant());
  for (std::size_t i = 0; i < n; ++i) {
    const Vec up = m.apply_simple(i, true, m.highest_vector());
    CHECK(std::all_of(up.begin(), up.end(), [](const Rational& x) { return x == 0; }));
  }

  // [e_i, f_j] = delta_ij h_i on every basis vector.
  for (const auto& s : m.spaces())
    for (std::size_t b = 0; b < s.dim; ++b) {
      Vec v = m.zero();
      v[s.offset + b] = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec ef = m.apply_simple(i, true, m.apply_simple(j, false, v));
          Vec fe = m.apply_simple(j, false, m.apply_simple(i, true, v));
          for (std::size_t t = 0; t < ef.size(); ++t) {
            Rational expect = (i == j && t == s.offset + b) ? Rational(s.weight[i]) : Rational(0);
            CHECK(ef[t] - fe[t] == expect);
          }
        }
    }
}

}  // namespace

TEST_SUITE("irrep") {

TEST_CASE("small modules") {
  const ChevalleyAlgebra a1(build_root_system("A1"));
  const IrrepModule sym2(a1, {2});
  CHECK(sym2.dimension() == 3);
  CHECK(sym2.multiplicities() == std::map<Weight, std::size_t>{{{-2}, 1}, {{0}, 1}, {{2}, 1}});

  const ChevalleyAlgebra a1a1(build_root_system("A1xA1"));
  CHECK(IrrepModule(a1a1, {4, 2}).dimension() == 15);

  const ChevalleyAlgebra a2(build_root_system("A2"));
  const IrrepModule adj(a2, {1, 1});
  CHECK(adj.dimension() == 8);
  CHECK(adj.multiplicities().at({0, 0}) == 2);

  CHECK(IrrepModule(a2, {0, 0}).dimension() == 1);
}

TEST_CASE("errors") {
  const ChevalleyAlgebra a2(build_root_system("A2"));
  CHECK_THROWS_AS(IrrepModule(a2, {1, -1}), Error);
  try {
    IrrepModule(a2, {6, 6}, 100);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionBudgetExceeded);
  }
}

TEST_CASE("random highest weights match Weyl and Freudenthal") {
  std::mt19937 rng(11);
  for (const auto& g : ref::kBatteryGroups) {
    CAPTURE(g);
    const ChevalleyAlgebra alg(build_root_system(g));
    const std::size_t n = alg.root_system().rank();
    std::uniform_int_distribution<int> coord(0, n <= 2 ? 3 : 2);
    for (int trial = 0; trial < 3; ++trial) {
      Weight lambda(n);
      for (auto& x : lambda) x = coord(rng);
      if (ref::weyl_dimension(alg.root_system().cartan_matrix(), lambda) > 400) continue;
      CAPTURE(lambda);
      check_module(alg, IrrepModule(alg, lambda));
    }
  }
}

TEST_CASE("root operators represent the algebra") {
  for (const std::string g : {"B2", "G2", "A3"}) {
    const ChevalleyAlgebra alg(build_root_system(g), ExtraspecialOrder::Descending);
    const std::size_t n = alg.root_system().rank();
    const IrrepModule m(alg, Weight(n, 1));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-2, 2);
    Vec v(m.dimension());
    for (auto& x : v) x = entry(rng);
    for (std::size_t a = 0; a < alg.num_roots(); ++a)
      for (std::size_t b = 0; b < alg.num_roots(); ++b) {
        if (b == alg.negative(a)) continue;
        RootVector sum = alg.root(a);
        for (std::size_t i = 0; i < n; ++i) sum[i] += alg.root(b)[i];
        Vec lhs = m.apply_root(a, m.apply_root(b, v));
        Vec ba = m.apply_root(b, m.apply_root(a, v));
        Vec rhs = alg.root_id(sum) ? m.apply_root(*alg.root_id(sum), v) : m.zero();
        for (std::size_t t = 0; t < v.size(); ++t) CHECK(lhs[t] - ba[t] == alg.structure_constant(a, b) * rhs[t]);
      }
  }
}

}  // TEST_SUITE
