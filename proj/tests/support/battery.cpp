#include "battery.hpp"

#include <random>
#include <sstream>

namespace ref {

std::string Case::name() const {
  std::ostringstream out;
  out << group << " [";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    out << (k ? "," : "") << "[";
    for (std::size_t i = 0; i < weights[k].size(); ++i) out << (i ? "," : "") << weights[k][i];
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<Case> curated_cases() {
  return {
      {"A1xA1", {{2, 0}, {4, 2}}},
      {"A1", {{2}}},
      {"A1", {{1}}},
      {"A2", {{1, 1}}},
      {"A2", {{1, 0}, {0, 1}}},
      {"A2", {{2, 0}, {0, 2}}},
      {"A3", {{0, 2, 0}}},
      {"A3", {{1, 0, 1}}},
      {"B2", {{1, 0}}},
      {"B2", {{0, 2}}},
      {"B3", {{0, 0, 2}}},
      {"B3", {{1, 0, 0}}},
      {"C3", {{0, 1, 0}}},
      {"G2", {{2, 0}}},
      {"G2", {{1, 0}, {0, 1}}},
      {"A1xA1xA1", {{1, 1, 0}, {0, 1, 1}}},
      {"A2xA1", {{1, 1, 0}, {0, 0, 2}}},
  };
}

namespace {

bool independent(const std::vector<Weight>& ws, std::size_t n) {
  sph::Matrix m(n, ws.size());
  for (std::size_t k = 0; k < ws.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, k) = ws[k][i];
  return sph::rank(m) == ws.size();
}

}  // namespace

std::vector<Case> random_cases(std::uint32_t seed, std::size_t count, std::int64_t max_dim) {
  std::mt19937 rng(seed);
  std::vector<Case> out;
  std::size_t g = 0;
  while (out.size() < count) {
    const std::string group = kBatteryGroups[g++ % kBatteryGroups.size()];
    const Cartan a = cartan(group);
    const std::size_t n = a.size();
    const int cap = n <= 2 ? 3 : 2;
    std::uniform_int_distribution<std::size_t> size_dist(1, n);
    std::uniform_int_distribution<int> coord(0, cap);
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<Weight> ws;
      const std::size_t r = size_dist(rng);
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k) {
        Weight w(n);
        for (auto& x : w) x = coord(rng);
        ok = weyl_dimension(a, w) <= max_dim;
        ws.push_back(std::move(w));
      }
      if (ok && independent(ws, n)) {
        out.push_back({group, std::move(ws)});
        break;
      }
    }
  }
  return out;
}

std::vector<Case> battery(std::uint32_t seed, std::size_t count) {
  auto out = curated_cases();
  for (auto& c : random_cases(seed, count)) out.push_back(std::move(c));
  return out;
}

}  // namespace ref
