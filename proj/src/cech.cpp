#include "gloc/cech.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gloc {

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

struct Classes {
  std::vector<std::size_t> parent;
  explicit Classes(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i;
    return c;
  }
};

}  // namespace

Cover subset_cover(const std::vector<std::string>& base, const std::vector<std::vector<Id>>& subsets) {
  Cover c{base, {}};
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Chart ch{"U" + std::to_string(i + 1), {}, subsets[i]};
    for (Id x : subsets[i]) ch.points.push_back(base.at(x));
    c.charts.push_back(std::move(ch));
  }
  return c;
}

void validate_cover(const Cover& c) {
  std::vector<char> hit(c.base.size(), 0);
  for (const auto& ch : c.charts) {
    if (ch.points.size() != ch.map.size()) fail(ErrorKind::ParseError, "chart " + ch.name + ": map size mismatch");
    for (Id x : ch.map) {
      if (x < 0 || static_cast<std::size_t>(x) >= c.base.size())
        fail(ErrorKind::DanglingReference, "chart " + ch.name + " maps outside the base");
      hit[x] = 1;
    }
  }
  for (std::size_t x = 0; x < hit.size(); ++x)
    if (!hit[x]) fail(ErrorKind::NotCovering, "point " + c.base[x] + " is not covered");
}

Nebula nebulaic_groupoid(const Cover& c) {
  validate_cover(c);
  std::vector<std::string> labels;
  std::vector<int> cls;
  for (const auto& ch : c.charts)
    for (std::size_t i = 0; i < ch.points.size(); ++i) {
      labels.push_back(tuple_label({ch.name, ch.points[i]}));
      cls.push_back(ch.map[i]);
    }
  Nebula n;
  n.groupoid = relation_groupoid(labels, cls);
  n.base = trivial_groupoid(c.base);
  n.root.assign(c.base.size(), kNone);
  std::vector<Id> obj(labels.size()), arr(n.groupoid.num_arrows());
  for (std::size_t u = 0; u < labels.size(); ++u) {
    obj[u] = cls[u];
    if (n.root[cls[u]] == kNone) n.root[cls[u]] = static_cast<Id>(u);
  }
  for (std::size_t a = 0; a < arr.size(); ++a) arr[a] = cls[n.groupoid.src(static_cast<Id>(a))];
  n.ev = Functor{n.groupoid, n.base, std::move(obj), std::move(arr)};
  require(check_subductive_weak_equivalence(n.ev), "evaluation is not a subductive weak equivalence");
  return n;
}

Cocycle CocycleCategory::coboundary(const Cochain& a) const {
  const Groupoid& N = nebula.groupoid;
  Cocycle f(N.num_arrows());
  for (std::size_t e = 0; e < f.size(); ++e)
    f[e] = group.op(a[N.trg(static_cast<Id>(e))], group.inv[a[N.src(static_cast<Id>(e))]]);
  return f;
}

bool CocycleCategory::is_cocycle(const Cocycle& f) const {
  const Groupoid& N = nebula.groupoid;
  for (std::size_t e1 = 0; e1 < N.num_arrows(); ++e1) {
    const Id a = static_cast<Id>(e1);
    for (std::size_t p = 0; p < N.out_degree(N.trg(a)); ++p) {
      const Id b = N.out_arrow(N.trg(a), p);
      if (f[N.comp(b, a)] != group.op(f[b], f[a])) return false;
    }
  }
  return true;
}

std::vector<Cochain> CocycleCategory::homs(const Cocycle& f1, const Cocycle& f2) const {
  const Groupoid& N = nebula.groupoid;
  const Functor& ev = nebula.ev;
  Cocycle d(f1.size());
  for (std::size_t e = 0; e < d.size(); ++e) d[e] = group.op(f2[e], group.inv[f1[e]]);
  Cochain a0(N.num_objects());
  for (std::size_t u = 0; u < a0.size(); ++u) {
    const Id r = nebula.root[ev.obj[u]];
    a0[u] = d[N.hom(r, static_cast<Id>(u))[0]];
  }
  if (coboundary(a0) != d) return {};
  const std::size_t pts = nebula.base.num_objects();
  const std::size_t n = static_cast<std::size_t>(group.order());
  std::vector<Cochain> out;
  std::vector<int> k(pts, 0);
  for (std::size_t idx = 0; idx < power(n, pts); ++idx) {
    std::size_t v = idx;
    for (std::size_t x = 0; x < pts; ++x, v /= n) k[x] = static_cast<int>(v % n);
    Cochain a(a0.size());
    for (std::size_t u = 0; u < a.size(); ++u) a[u] = group.op(k[ev.obj[u]], a0[u]);
    out.push_back(std::move(a));
  }
  return out;
}

CocycleCategory cocycle_category(const Cover& c, const Group& g) {
  if (!g.abelian()) fail(ErrorKind::GroupNotAbelian, "coefficient group must be abelian");
  CocycleCategory cc{g, nebulaic_groupoid(c), {}};
  const Groupoid& N = cc.nebula.groupoid;
  std::vector<Id> free;
  for (std::size_t u = 0; u < N.num_objects(); ++u)
    if (cc.nebula.root[cc.nebula.ev.obj[u]] != static_cast<Id>(u)) free.push_back(static_cast<Id>(u));
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t total = power(n, free.size());
  check_size(total * std::max<std::size_t>(N.num_arrows(), 1), "cocycle enumeration");
  Cochain c0(N.num_objects(), g.e);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (Id u : free) {
      c0[u] = static_cast<int>(v % n);
      v /= n;
    }
    cc.cocycles.push_back(cc.coboundary(c0));
  }
  return cc;
}

std::vector<std::vector<int>> BundleCategory::fibre_homs(int action1, int action2) const {
  const int n = group.order();
  const auto& t1 = actions[action1];
  const auto& t2 = actions[action2];
  std::vector<std::vector<int>> out;
  for (int c = 0; c < n; ++c) {
    std::vector<int> tau(n, -1);
    for (int b = 0; b < n; ++b) tau[t1[b]] = t2[c * n + b];
    bool ok = std::find(tau.begin(), tau.end(), -1) == tau.end();
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (tau[t1[a * n + b]] != t2[tau[a] * n + b]) ok = false;
    if (ok) out.push_back(std::move(tau));
  }
  return out;
}

std::size_t BundleCategory::count_homs(std::size_t b1, std::size_t b2) const {
  std::size_t r = 1;
  for (std::size_t x = 0; x < base.size(); ++x) r *= fibre_homs(bundles[b1][x], bundles[b2][x]).size();
  return r;
}

std::optional<std::size_t> BundleCategory::find(const std::vector<int>& fibre_actions) const {
  for (std::size_t b = 0; b < bundles.size(); ++b)
    if (bundles[b] == fibre_actions) return b;
  return std::nullopt;
}

BundleCategory bundle_category(const std::vector<std::string>& base, const Group& g) {
  if (!g.abelian()) fail(ErrorKind::GroupNotAbelian, "coefficient group must be abelian");
  BundleCategory bc{g, base, {}, {}};
  const int n = g.order();
  std::vector<int> sigma(n), sinv(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<std::vector<int>, int> seen;
  do {
    for (int i = 0; i < n; ++i) sinv[sigma[i]] = i;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a * n + b] = sigma[g.op(sinv[a], b)];
    if (seen.emplace(t, static_cast<int>(bc.actions.size())).second) bc.actions.push_back(std::move(t));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const std::size_t k = bc.actions.size();
  const std::size_t total = power(k, base.size());
  check_size(total, "bundle enumeration");
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> b(base.size());
    std::size_t v = idx;
    for (auto& a : b) {
      a = static_cast<int>(v % k);
      v /= k;
    }
    bc.bundles.push_back(std::move(b));
  }
  return bc;
}

CechReport cech_equivalence_check(const Cover& c, const Group& g) {
  const CocycleCategory cc = cocycle_category(c, g);
  const BundleCategory bc = bundle_category(c.base, g);
  const Groupoid& N = cc.nebula.groupoid;
  const Functor& ev = cc.nebula.ev;
  const std::size_t pts = c.base.size();
  const int n = g.order();
  CechReport rep;
  rep.cocycles = cc.cocycles.size();
  rep.bundles = bc.bundles.size();

  // Coordinates on the quotient (N_0 x G)/~ : [(u, a)] -> f(u -> root) a.
  std::vector<Id> up(N.num_objects());
  for (std::size_t u = 0; u < up.size(); ++u) up[u] = N.hom(static_cast<Id>(u), cc.nebula.root[ev.obj[u]])[0];
  auto to_root = [&](const Cocycle& f, Id u) { return f[up[u]]; };
  const std::size_t nact = bc.actions.size();
  std::vector<std::vector<std::vector<int>>> fh(nact * nact);
  for (std::size_t a1 = 0; a1 < nact; ++a1)
    for (std::size_t a2 = 0; a2 < nact; ++a2)
      fh[a1 * nact + a2] = bc.fibre_homs(static_cast<int>(a1), static_cast<int>(a2));
  auto fibre = [&](std::size_t b1, std::size_t b2, std::size_t x) -> const std::vector<std::vector<int>>& {
    return fh[bc.bundles[b1][x] * nact + bc.bundles[b2][x]];
  };
  auto count_homs = [&](std::size_t b1, std::size_t b2) {
    std::size_t r = 1;
    for (std::size_t x = 0; x < pts; ++x) r *= fibre(b1, b2, x).size();
    return r;
  };
  auto bundle_of = [&](const Cocycle& f) -> std::optional<std::size_t> {
    std::vector<int> fib(pts, -1);
    for (std::size_t x = 0; x < pts; ++x) {
      std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
      for (std::size_t u = 0; u < N.num_objects(); ++u) {
        if (ev.obj[u] != static_cast<Id>(x)) continue;
        const int s = to_root(f, static_cast<Id>(u));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const int coord = g.op(s, a), coord2 = g.op(s, g.op(a, b));
            int& slot = t[coord * n + b];
            if (slot != -1 && slot != coord2) return std::nullopt;
            slot = coord2;
          }
      }
      auto it = std::find(bc.actions.begin(), bc.actions.end(), t);
      if (it == bc.actions.end()) return std::nullopt;
      fib[x] = static_cast<int>(it - bc.actions.begin());
    }
    return bc.find(fib);
  };
  // F(a) on fibre x: coordinate c of (u, a') maps to f2(u->r) a(u) f1(u->r)^-1 c.
  // Writes the induced fibre map into m; false if a is not well defined on the quotient.
  auto map_into = [&](const Cocycle& f1, const Cocycle& f2, const Cochain& a, std::vector<int>& m) {
    m.assign(pts * n, -1);
    for (std::size_t u = 0; u < N.num_objects(); ++u) {
      const Id ui = static_cast<Id>(u);
      const int shift = g.op(to_root(f2, ui), g.op(a[u], g.inv[to_root(f1, ui)]));
      for (int cc2 = 0; cc2 < n; ++cc2) {
        int& slot = m[ev.obj[u] * n + cc2];
        const int v = g.op(shift, cc2);
        if (slot != -1 && slot != v) return false;
        slot = v;
      }
    }
    return true;
  };
  auto map_of = [&](const Cocycle& f1, const Cocycle& f2, const Cochain& a) -> std::optional<std::vector<int>> {
    std::vector<int> m;
    if (!map_into(f1, f2, a, m)) return std::nullopt;
    return m;
  };
  auto is_bundle_map = [&](std::size_t b1, std::size_t b2, const std::vector<int>& m) {
    for (std::size_t x = 0; x < pts; ++x) {
      const auto& homs = fibre(b1, b2, x);
      const std::vector<int> tau(m.begin() + x * n, m.begin() + (x + 1) * n);
      if (std::find(homs.begin(), homs.end(), tau) == homs.end()) return false;
    }
    return true;
  };

  std::vector<std::size_t> image(cc.cocycles.size());
  rep.functorial = true;
  for (std::size_t i = 0; i < cc.cocycles.size(); ++i) {
    require(cc.is_cocycle(cc.cocycles[i]), "enumerated cochain is not a cocycle");
    const auto b = bundle_of(cc.cocycles[i]);
    if (!b) {
      rep.functorial = false;
      return rep;
    }
    image[i] = *b;
  }

  {
    std::map<Cocycle, std::size_t> index;
    for (std::size_t i = 0; i < cc.cocycles.size(); ++i) index.emplace(cc.cocycles[i], i);
    Classes cls(cc.cocycles.size());
    const auto gens = generators(g);
    for (std::size_t i = 0; i < cc.cocycles.size(); ++i)
      for (std::size_t u = 0; u < N.num_objects(); ++u)
        for (int s : gens) {
          Cochain e(N.num_objects(), g.e);
          e[u] = s;
          const Cocycle d = cc.coboundary(e);
          Cocycle f = cc.cocycles[i];
          for (std::size_t k = 0; k < f.size(); ++k) f[k] = g.op(f[k], d[k]);
          cls.unite(i, index.at(f));
        }
    rep.cocycle_classes = cls.count();
  }
  {
    Classes cls(bc.bundles.size());
    for (std::size_t i = 0; i < bc.bundles.size(); ++i)
      for (std::size_t j = i + 1; j < bc.bundles.size(); ++j)
        if (count_homs(i, j) > 0) cls.unite(i, j);
    rep.bundle_classes = cls.count();
    std::vector<char> hit(bc.bundles.size(), 0);
    for (std::size_t b : image) hit[cls.find(b)] = 1;
    rep.essentially_surjective = true;
    for (std::size_t b = 0; b < bc.bundles.size(); ++b)
      if (!hit[cls.find(b)]) rep.essentially_surjective = false;
  }

  // Hom(f1, f2) -> Hom(F f1, F f2) must be a bijection.
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const auto homs = cc.homs(cc.cocycles[i], cc.cocycles[j]);
    if (homs.size() != count_homs(image[i], image[j])) return false;
    std::vector<std::vector<int>> maps;
    for (const auto& a : homs) {
      auto m = map_of(cc.cocycles[i], cc.cocycles[j], a);
      if (!m || !is_bundle_map(image[i], image[j], *m)) return false;
      maps.push_back(std::move(*m));
    }
    std::sort(maps.begin(), maps.end());
    return std::adjacent_find(maps.begin(), maps.end()) == maps.end();
  };
  // F(b a) = F(b) F(a) on Hom(f1, f2) x Hom(f2, f1).
  auto check_functorial = [&](std::size_t i, std::size_t j) {
    const auto& f1 = cc.cocycles[i];
    const auto& f2 = cc.cocycles[j];
    const auto ha = cc.homs(f1, f2), hb = cc.homs(f2, f1);
    std::vector<std::vector<int>> ma, mb;
    for (const auto& a : ha) ma.push_back(*map_of(f1, f2, a));
    for (const auto& b : hb) mb.push_back(*map_of(f2, f1, b));
    Cochain ba(N.num_objects());
    std::vector<int> direct;
    for (std::size_t p = 0; p < ha.size(); ++p)
      for (std::size_t q = 0; q < hb.size(); ++q) {
        for (std::size_t u = 0; u < ba.size(); ++u) ba[u] = g.op(hb[q][u], ha[p][u]);
        if (!map_into(f1, f1, ba, direct)) return false;
        for (std::size_t x = 0; x < pts; ++x)
          for (int e = 0; e < n; ++e)
            if (mb[q][x * n + ma[p][x * n + e]] != direct[x * n + e]) return false;
      }
    return true;
  };
  rep.all_pairs = cc.cocycles.size() <= 64;
  rep.fully_faithful = true;
  if (rep.all_pairs) {
    for (std::size_t i = 0; i < cc.cocycles.size(); ++i)
      for (std::size_t j = 0; j < cc.cocycles.size(); ++j) {
        if (!check_pair(i, j)) rep.fully_faithful = false;
        if (!check_functorial(i, j)) rep.functorial = false;
      }
  } else {
    // In a groupoid, bijectivity on every Aut(f) and on every Hom(f0, f)
    // forces bijectivity on every Hom(f, f') by composing with isos.
    for (std::size_t i = 0; i < cc.cocycles.size(); ++i) {
      if (!check_pair(i, i) || !check_pair(0, i)) rep.fully_faithful = false;
      if (!check_functorial(0, i)) rep.functorial = false;
    }
  }
  if (!cc.cocycles.empty()) {
    rep.cocycle_aut = cc.homs(cc.cocycles[0], cc.cocycles[0]).size();
    rep.bundle_aut = count_homs(image[0], image[0]);
  }
  return rep;
}

CechSweep cech_sweep(int max_points, int max_charts, const Group& g) {
  CechSweep sw;
  for (int np = 0; np <= max_points; ++np) {
    std::vector<std::string> base;
    for (int i = 0; i < np; ++i) base.push_back(std::string(1, static_cast<char>('a' + i)));
    const int full = (1 << np) - 1;
    const int subsets = full;  // nonempty subsets are 1 .. full
    for (int k = 0; k <= max_charts; ++k) {
      std::size_t seqs = 1;
      for (int i = 0; i < k; ++i) seqs *= static_cast<std::size_t>(subsets);
      for (std::size_t idx = 0; idx < seqs; ++idx) {
        std::vector<int> masks;
        std::size_t v = idx;
        int un = 0;
        for (int i = 0; i < k; ++i, v /= subsets) {
          masks.push_back(static_cast<int>(v % subsets) + 1);
          un |= masks.back();
        }
        if (un != full) continue;
        std::vector<std::vector<Id>> charts;
        std::string desc = "X=" + std::to_string(np) + " charts=";
        for (int m : masks) {
          charts.emplace_back();
          desc += "{";
          for (int i = 0; i < np; ++i)
            if (m >> i & 1) {
              charts.back().push_back(i);
              desc += base[i];
            }
          desc += "}";
        }
        ++sw.covers;
        const CechReport r = cech_equivalence_check(subset_cover(base, charts), g);
        const std::size_t aut = power(static_cast<std::size_t>(g.order()), static_cast<std::size_t>(np));
        if (r.ok() && r.cocycle_classes == 1 && r.bundle_classes == 1 && r.cocycle_aut == aut &&
            r.bundle_aut == aut)
          ++sw.passed;
        else
          sw.failures.push_back(desc);
      }
    }
  }
  return sw;
}

}  // namespace gloc
