#include "sph/rootsys.hpp"

#include "sph/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace sph {

bool valid_rank(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

CartanMatrix simple_cartan_matrix(char type, int rank) {
  if (!valid_rank(type, rank))
    throw Error(Errc::RankConstraint, std::string("invalid rank for type ") + type + std::to_string(rank));
  const auto n = static_cast<std::size_t>(rank);
  CartanMatrix a(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
    case 'B':
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (type == 'B') a[n - 1][n - 2] = -2;
      if (type == 'C') a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

std::vector<int> simple_symmetrizer(char type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<int> d(n, 1);
  switch (type) {
    case 'B':
      std::fill(d.begin(), d.end() - 1, 2);
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d = {2, 2, 1, 1};
      break;
    case 'G':
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

std::vector<RootVector> close_positive_roots(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::vector<RootVector> roots;
  std::set<RootVector> seen;
  for (std::size_t i = 0; i < n; ++i) {
    roots.push_back(rs.simple_root(i));
    seen.insert(roots.back());
  }
  // Roots are appended in nondecreasing height, so every root below beta is
  // already known when beta's strings are examined.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const RootVector beta = roots[k];
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;
      RootVector down = beta;
      while (down[i] > 0) {
        --down[i];
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - rs.pairing(i, beta) <= 0) continue;
      RootVector up = beta;
      ++up[i];
      if (seen.insert(up).second) roots.push_back(std::move(up));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootVector& x, const RootVector& y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x > y;
  });
  return roots;
}

}  // namespace

RootSystem::RootSystem(std::vector<Component> components) : components_(std::move(components)) {
  std::size_t n = 0;
  for (auto& c : components_) {
    c.offset = n;
    n += static_cast<std::size_t>(c.rank);
  }
  cartan_.assign(n, std::vector<int>(n, 0));
  symmetrizer_.assign(n, 1);
  for (const auto& c : components_) {
    CartanMatrix block = simple_cartan_matrix(c.type, c.rank);
    std::vector<int> d = simple_symmetrizer(c.type, c.rank);
    for (std::size_t i = 0; i < block.size(); ++i) {
      symmetrizer_[c.offset + i] = d[i];
      for (std::size_t j = 0; j < block.size(); ++j) cartan_[c.offset + i][c.offset + j] = block[i][j];
    }
  }
  positive_ = close_positive_roots(*this);
}

std::string RootSystem::name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += 'x';
    out += c.type;
    out += std::to_string(c.rank);
  }
  return out;
}

std::size_t RootSystem::component_of(std::size_t i) const {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (i < components_[k].offset + static_cast<std::size_t>(components_[k].rank)) return k;
  throw Error(Errc::Precondition, "simple root index out of range");
}

int RootSystem::pairing(std::size_t i, const RootVector& v) const {
  int s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += cartan_[i][j] * v[j];
  return s;
}

Weight RootSystem::to_weight(const RootVector& v) const {
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) w[i] = pairing(i, v);
  return w;
}

bool RootSystem::is_root(const RootVector& v) const {
  RootVector a = v;
  if (std::all_of(a.begin(), a.end(), [](int x) { return x <= 0; }))
    for (auto& x : a) x = -x;
  return std::binary_search(positive_.begin(), positive_.end(), a, [](const RootVector& x, const RootVector& y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x > y;
  });
}

RootVector RootSystem::simple_root(std::size_t i) const {
  RootVector v(rank(), 0);
  v[i] = 1;
  return v;
}

RootSystem build_root_system(std::string_view type_string) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : type_string) {
    if (ch == 'x' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw Error(Errc::Parse, "empty group type");

  std::vector<Component> comps;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    bool ok = tok.size() >= 2 && tok[0] >= 'A' && tok[0] <= 'G' && tok.size() <= 4 &&
              std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
              (tok[1] != '0' || tok.size() == 2);
    if (!ok) throw Error(Errc::Parse, "unknown Dynkin type token '" + tok + "'", k);
    int rank = std::stoi(tok.substr(1));
    if (!valid_rank(tok[0], rank))
      throw Error(Errc::RankConstraint, "rank constraint violated by token '" + tok + "'", k);
    comps.push_back({tok[0], rank, 0});
  }
  return RootSystem(std::move(comps));
}

namespace {

// Extends a partial labeling of the component nodes to full labelings
// matching the target Cartan matrix.
void extend_labeling(const RootSystem& rs, const std::vector<std::size_t>& nodes, const CartanMatrix& target,
                     std::vector<std::size_t>& label, std::vector<bool>& used,
                     std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = label.size();
  if (k == nodes.size()) {
    out.push_back(label);
    return;
  }
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    if (used[c]) continue;
    std::size_t g = nodes[c];
    bool fits = true;
    for (std::size_t p = 0; p < k && fits; ++p)
      fits = rs.cartan(label[p], g) == target[p][k] && rs.cartan(g, label[p]) == target[k][p];
    if (!fits) continue;
    used[c] = true;
    label.push_back(g);
    extend_labeling(rs, nodes, target, label, used, out);
    label.pop_back();
    used[c] = false;
  }
}

}  // namespace

std::vector<SubdiagramComponent> classify_subdiagram(const RootSystem& rs, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> nodes(subset);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<SubdiagramComponent> result;
  std::vector<bool> done(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> comp{nodes[s]};
    done[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!done[t] && rs.cartan(comp[q], nodes[t]) != 0) {
          done[t] = true;
          comp.push_back(nodes[t]);
        }
    std::sort(comp.begin(), comp.end());

    const int k = static_cast<int>(comp.size());
    for (char type : std::string("ABCDEFG")) {
      if (!valid_rank(type, k)) continue;
      CartanMatrix target = simple_cartan_matrix(type, k);
      std::vector<std::vector<std::size_t>> labelings;
      std::vector<std::size_t> label;
      std::vector<bool> used(comp.size(), false);
      extend_labeling(rs, comp, target, label, used, labelings);
      if (!labelings.empty()) {
        std::sort(labelings.begin(), labelings.end());
        result.push_back({type, k, std::move(labelings)});
        break;
      }
    }
  }
  return result;
}

std::vector<std::size_t> support(const RootVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace sph
