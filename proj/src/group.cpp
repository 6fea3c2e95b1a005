#include "gloc/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace gloc {

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != e; x = op(x, a)) ++k;
  return k;
}

bool Group::abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

namespace {

Group from_table(std::vector<std::string> names, const std::function<int(int, int)>& m) {
  Group g;
  g.names = std::move(names);
  const int n = g.order();
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a * n + b] = m(a, b);
  g.e = 0;
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == g.e) g.inv[a] = b;
  return g;
}

}  // namespace

Group cyclic_group(int n) {
  std::vector<std::string> names;
  names.push_back("e");
  for (int i = 1; i < n; ++i) names.push_back("g" + std::to_string(i));
  return from_table(std::move(names), [n](int a, int b) { return (a + b) % n; });
}

Group direct_product(const Group& a, const Group& b) {
  const int nb = b.order();
  std::vector<std::string> names;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < nb; ++j) names.push_back(a.names[i] + "." + b.names[j]);
  auto idx = [&](int i, int j) { return i * nb + j; };
  Group g = from_table(std::move(names), [&](int x, int y) {
    return idx(a.op(x / nb, y / nb), b.op(x % nb, y % nb));
  });
  g.e = idx(a.e, b.e);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g.op(x, y) == g.e) g.inv[x] = y;
  return g;
}

Group dihedral_group(int n) {
  // r^i s^j stored as i + n j
  std::vector<std::string> names;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i)
      names.push_back(i == 0 && j == 0 ? "e" : (j ? "s" : "") + (i ? "r" + std::to_string(i) : ""));
  return from_table(std::move(names), [n](int x, int y) {
    int i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
    int i = j1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
    return i + n * ((j1 + j2) % 2);
  });
}

Group symmetric_group3() { return dihedral_group(3); }

Group quaternion_group() {
  // elements ±1, ±i, ±j, ±k as sign * 4 + unit
  static const int t[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  // entries >= 4 mean "negated", encoded as unit + 4
  std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return from_table(std::move(names), [](int x, int y) {
    int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
    int r = t[ux][uy];
    int s = (sx + sy + r / 4) % 2;
    return (r % 4) + 4 * s;
  });
}

std::optional<std::string> check_group(const Group& g) {
  const int n = g.order();
  if (n == 0) return std::string("empty group");
  if (static_cast<int>(g.mul.size()) != n * n) return std::string("table size");
  for (int a = 0; a < n; ++a) {
    if (g.op(g.e, a) != a || g.op(a, g.e) != a) return "identity law at " + g.names[a];
    if (g.op(a, g.inv[a]) != g.e || g.op(g.inv[a], a) != g.e) return "inverse at " + g.names[a];
    for (int b = 0; b < n; ++b) {
      if (g.op(a, b) < 0 || g.op(a, b) >= n) return std::string("table entry out of range");
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return "associativity at " + g.names[a];
    }
  }
  return std::nullopt;
}

Groupoid one_object_groupoid(const Group& g, const std::string& object) {
  GroupoidBuilder b;
  b.add_object(object);
  for (const auto& nm : g.names) b.add_arrow(nm, 0, 0);
  return b.finish([&](Id x, Id y) { return g.op(x, y); }, [&](Id x) { return g.inv[x]; },
                  [&](Id) { return g.e; });
}

Group vertex_group(const Groupoid& gp, Id x) {
  auto hom = gp.hom(x, x);
  Group g;
  const int n = static_cast<int>(hom.size());
  std::vector<int> pos(gp.num_arrows(), -1);
  for (int i = 0; i < n; ++i) {
    g.names.push_back(gp.arrow_label(hom[i]));
    pos[hom[i]] = i;
  }
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul[i * n + j] = pos[gp.comp(hom[i], hom[j])];
  g.e = pos[gp.unit(x)];
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) g.inv[i] = pos[gp.inv(hom[i])];
  return g;
}

std::vector<int> generators(const Group& g) {
  // Greedy: repeatedly add the element of largest order outside the subgroup.
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[g.e] = 1;
  auto close = [&]() {
    std::deque<int> q;
    for (int a = 0; a < g.order(); ++a)
      if (in[a]) q.push_back(a);
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int s : gens) {
        int b = g.op(a, s);
        if (!in[b]) {
          in[b] = 1;
          q.push_back(b);
        }
      }
    }
  };
  while (true) {
    int best = -1;
    for (int a = 0; a < g.order(); ++a)
      if (!in[a] && (best < 0 || g.element_order(a) > g.element_order(best))) best = a;
    if (best < 0) break;
    gens.push_back(best);
    close();
  }
  return gens;
}

namespace {

// Extend images of generators to a map; nullopt if not a homomorphism.
std::optional<std::vector<int>> extend(const Group& a, const Group& b, const std::vector<int>& gens,
                                       const std::vector<int>& img) {
  std::vector<int> f(a.order(), -1);
  f[a.e] = b.e;
  std::deque<int> q{a.e};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = a.op(x, gens[i]);
      int fy = b.op(f[x], img[i]);
      if (f[y] == -1) {
        f[y] = fy;
        q.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f[a.op(x, y)] != b.op(f[x], f[y])) return std::nullopt;
  return f;
}

}  // namespace

std::vector<std::vector<int>> homomorphisms(const Group& a, const Group& b) {
  const auto gens = generators(a);
  std::vector<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      if (auto f = extend(a, b, gens, img)) out.push_back(*f);
      return;
    }
    const int oa = a.element_order(gens[i]);
    for (int y = 0; y < b.order(); ++y) {
      if (oa % b.element_order(y) != 0) continue;
      img[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() > 64 || b.order() > 64)
    fail(ErrorKind::GroupTooLarge, "group isomorphism search is capped at order 64");
  if (a.order() != b.order()) return std::nullopt;
  auto profile = [](const Group& g) {
    std::map<int, int> p;
    for (int x = 0; x < g.order(); ++x) ++p[g.element_order(x)];
    return p;
  };
  if (profile(a) != profile(b) || a.abelian() != b.abelian()) return std::nullopt;
  const auto gens = generators(a);
  std::vector<int> img(gens.size(), 0);
  std::optional<std::vector<int>> found;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      auto f = extend(a, b, gens, img);
      if (!f) return false;
      std::vector<char> hit(b.order(), 0);
      for (int y : *f) hit[y] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
      found = std::move(f);
      return true;
    }
    const int oa = a.element_order(gens[i]);
    for (int y = 0; y < b.order(); ++y) {
      if (b.element_order(y) != oa) continue;
      img[i] = y;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(0);
  return found;
}

bool isomorphic(const Group& a, const Group& b) { return find_isomorphism(a, b).has_value(); }

std::string group_name(const Group& g) {
  const int n = g.order();
  if (n == 1) return "trivial";
  int maxo = 0;
  for (int x = 0; x < n; ++x) maxo = std::max(maxo, g.element_order(x));
  if (maxo == n) return "C" + std::to_string(n);
  if (g.abelian()) {
    // Invariant factors from the counts of elements killed by p^k.
    std::vector<int> factors;
    int m = n;
    for (int p = 2; m > 1; ++p) {
      if (m % p) continue;
      while (m % p == 0) m /= p;
      std::vector<int> logs{0};
      for (int pk = p;; pk *= p) {
        int cnt = 0;
        for (int x = 0; x < n; ++x) {
          int y = g.e;
          for (int i = 0; i < pk; ++i) y = g.op(y, x);
          if (y == g.e) ++cnt;
        }
        int l = 0;
        for (int c = cnt; c > 1; c /= p) ++l;
        logs.push_back(l);
        if (logs.size() > 1 && logs.back() == logs[logs.size() - 2]) break;
      }
      // number of cyclic p-factors of order >= p^k is logs[k] - logs[k-1]
      for (std::size_t k = logs.size() - 1; k >= 1; --k) {
        int more = logs[k] - logs[k - 1] - (k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0);
        int pk = 1;
        for (std::size_t i = 0; i < k; ++i) pk *= p;
        for (int i = 0; i < more; ++i) factors.push_back(pk);
        if (k == 1) break;
      }
    }
    std::sort(factors.begin(), factors.end());
    std::string s;
    for (int f : factors) s += (s.empty() ? "C" : "xC") + std::to_string(f);
    return s;
  }
  if (n == 6) return "S3";
  if (n == 8) {
    int involutions = 0;
    for (int x = 0; x < n; ++x)
      if (g.element_order(x) == 2) ++involutions;
    return involutions == 1 ? "Q8" : "D4";
  }
  return "group of order " + std::to_string(n);
}

}  // namespace gloc
