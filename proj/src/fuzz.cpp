#include "gloc/fuzz.hpp"

#include <algorithm>

namespace gloc::fuzz {

std::size_t Rng::below(std::size_t n) {
  require(n > 0, "Rng::below(0)");
  // rejection sampling keeps the result exactly uniform
  const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do v = next();
  while (v >= lim);
  return static_cast<std::size_t>(v % n);
}

Group random_group(Rng& rng, int max_order) {
  static const std::vector<Group> all = {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                         direct_product(cyclic_group(2), cyclic_group(2)), symmetric_group3()};
  std::vector<Group> ok;
  for (const auto& g : all)
    if (g.order() <= max_order) ok.push_back(g);
  return rng.pick(ok);
}

namespace {

struct Comp {
  int n;
  Group g;
  Id first;  // first object id
};

Groupoid assemble(const std::vector<Comp>& comps, const std::string& prefix) {
  GroupoidBuilder b;
  struct A {
    int c, i, j, e;
  };
  std::vector<A> data;
  std::vector<std::size_t> base;  // arrow offset per component
  for (const auto& c : comps)
    for (int i = 0; i < c.n; ++i) b.add_object(prefix + std::to_string(c.first + i));
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Comp& c = comps[ci];
    base.push_back(data.size());
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j)
        for (int e = 0; e < c.g.order(); ++e) {
          b.add_arrow(prefix + std::to_string(c.first + i) + ">" + std::to_string(c.first + j) + ":" +
                          std::to_string(e),
                      c.first + i, c.first + j);
          data.push_back({static_cast<int>(ci), i, j, e});
        }
  }
  auto find = [&](int c, int i, int j, int e) {
    const int ord = comps[c].g.order();
    return static_cast<Id>(base[c] + (static_cast<std::size_t>(i) * comps[c].n + j) * ord + e);
  };
  return b.finish(
      [&](Id u, Id v) {
        const A& a = data[u];
        const A& f = data[v];
        return find(a.c, f.i, a.j, comps[a.c].g.op(a.e, f.e));
      },
      [&](Id u) {
        const A& a = data[u];
        return find(a.c, a.j, a.i, comps[a.c].g.inv[a.e]);
      },
      [&](Id x) {
        for (std::size_t c = 0; c < comps.size(); ++c)
          if (x >= comps[c].first && x < comps[c].first + comps[c].n)
            return find(static_cast<int>(c), x - comps[c].first, x - comps[c].first, comps[c].g.e);
        return kNone;
      });
}

Id random_out(Rng& rng, const Groupoid& h, Id y) { return h.out_arrow(y, rng.below(h.out_degree(y))); }

Id random_object(Rng& rng, const Groupoid& h) {
  require(h.num_objects() > 0, "fuzz: no objects to choose from");
  return static_cast<Id>(rng.below(h.num_objects()));
}

std::vector<std::string> point_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Groupoid connected_groupoid(int n, const Group& g, const std::string& prefix) {
  return assemble({Comp{n, g, 0}}, prefix);
}

Groupoid random_groupoid(Rng& rng, int max_objects, int max_arrows, const std::string& prefix) {
  if (rng.chance(1, 60)) return empty_groupoid();
  std::vector<Comp> comps;
  int objs = 0, arrows = 0;
  do {
    const int room_o = max_objects - objs;
    if (room_o <= 0) break;
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(std::min(room_o, 3))));
    Group g = random_group(rng);
    while (arrows + n * n * g.order() > max_arrows && g.order() > 1) g = random_group(rng, g.order() - 1);
    if (arrows + n * n * g.order() > max_arrows) break;
    comps.push_back({n, g, static_cast<Id>(objs)});
    objs += n;
    arrows += n * n * g.order();
  } while (rng.chance(1, 2));
  return assemble(comps, prefix);
}

Functor random_functor(Rng& rng, const Groupoid& g, const Groupoid& h) {
  Functor f{g, h, std::vector<Id>(g.num_objects()), std::vector<Id>(g.num_arrows())};
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    const Id r = g.root(static_cast<int>(c));
    const Id y0 = random_object(rng, h);
    const auto homs = homomorphisms(vertex_group(g, r), vertex_group(h, y0));
    const auto& phi = rng.pick(homs);
    const auto& objs = g.component_data(static_cast<int>(c)).objects;
    std::vector<Id> tau(g.num_objects(), kNone), tau2(g.num_objects(), kNone);
    for (Id x : objs) {
      tau[x] = g.hom(r, x)[0];
      tau2[x] = random_out(rng, h, y0);
      f.obj[x] = h.trg(tau2[x]);
    }
    const auto aut_h = h.hom(y0, y0);
    for (Id a : objs)
      for (Id b : objs)
        for (Id e : g.hom(a, b)) {
          const Id local = g.comp(g.inv(tau[b]), e, tau[a]);
          const Id img = aut_h[phi[g.hom_index(local)]];
          f.arr[e] = h.comp(tau2[b], img, h.inv(tau2[a]));
        }
  }
  return f;
}

Functor random_we_into(Rng& rng, const Groupoid& h, int max_objects, const std::string& prefix) {
  const std::size_t k = h.num_components();
  const std::size_t m = std::max<std::size_t>(k, 1 + rng.below(static_cast<std::size_t>(std::max(max_objects, 1))));
  std::vector<Id> f;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& objs = h.component_data(static_cast<int>(c)).objects;
    f.push_back(rng.pick(objs));
  }
  if (h.num_objects() > 0)
    while (f.size() < m) f.push_back(random_object(rng, h));
  for (std::size_t i = f.size(); i > 1; --i) std::swap(f[i - 1], f[rng.below(i)]);
  return base_change(h, point_labels(f.size(), prefix), f).comparison;
}

Functor random_swe_into(Rng& rng, const Groupoid& h, int max_objects, const std::string& prefix) {
  std::vector<Id> f;
  for (std::size_t y = 0; y < h.num_objects(); ++y) f.push_back(static_cast<Id>(y));
  const std::size_t extra = h.num_objects() == 0 ? 0
                            : static_cast<std::size_t>(max_objects) > f.size()
                                ? rng.below(static_cast<std::size_t>(max_objects) - f.size() + 1)
                                : 0;
  for (std::size_t i = 0; i < extra; ++i) f.push_back(random_object(rng, h));
  for (std::size_t i = f.size(); i > 1; --i) std::swap(f[i - 1], f[rng.below(i)]);
  return base_change(h, point_labels(f.size(), prefix), f).comparison;
}

Functor random_we_from(Rng& rng, const Groupoid& g) {
  if (rng.coin()) {
    // retraction onto one object per component
    std::vector<Id> reps;
    for (std::size_t c = 0; c < g.num_components(); ++c)
      reps.push_back(rng.pick(g.component_data(static_cast<int>(c)).objects));
    std::sort(reps.begin(), reps.end());
    Functor incl;
    const Groupoid sk = full_subgroupoid(g, reps, &incl);
    Functor f{g, sk, std::vector<Id>(g.num_objects()), std::vector<Id>(g.num_arrows())};
    std::vector<Id> tau(g.num_objects());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (Id x : g.component_data(g.component(reps[i])).objects) {
        tau[x] = rng.pick(std::vector<Id>(g.hom(reps[i], x).begin(), g.hom(reps[i], x).end()));
        f.obj[x] = static_cast<Id>(i);
      }
    // sk arrows are found through the inclusion
    std::unordered_map<Id, Id> back;
    for (std::size_t a = 0; a < sk.num_arrows(); ++a) back[incl.arr[a]] = static_cast<Id>(a);
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
      const Id ai = static_cast<Id>(a);
      f.arr[a] = back.at(g.comp(g.inv(tau[g.trg(ai)]), ai, tau[g.src(ai)]));
    }
    return f;
  }
  // inclusion into a base change over a larger point set
  std::vector<std::string> points = g.object_labels();
  std::vector<Id> f;
  for (std::size_t x = 0; x < g.num_objects(); ++x) f.push_back(static_cast<Id>(x));
  if (g.num_objects() > 0) {
    const std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra; ++i) {
      f.push_back(random_object(rng, g));
      std::string label = "e" + std::to_string(i);
      while (g.find_object(label)) label += "'";
      points.push_back(label);
    }
  }
  const BaseChange bc = base_change(g, points, f);
  Functor out{g, bc.groupoid, std::vector<Id>(g.num_objects()), std::vector<Id>(g.num_arrows())};
  for (std::size_t x = 0; x < g.num_objects(); ++x) out.obj[x] = static_cast<Id>(x);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const Id ai = static_cast<Id>(a);
    const auto hs = bc.groupoid.hom(g.src(ai), g.trg(ai));
    out.arr[a] = *std::find_if(hs.begin(), hs.end(), [&](Id e) { return bc.comparison.arr[e] == ai; });
  }
  return out;
}

NatTrans random_nat_from(Rng& rng, const Functor& f) {
  std::vector<Id> c(f.dom.num_objects());
  Functor f2{f.dom, f.cod, std::vector<Id>(f.obj.size()), std::vector<Id>(f.arr.size())};
  for (std::size_t x = 0; x < c.size(); ++x) {
    c[x] = random_out(rng, f.cod, f.obj[x]);
    f2.obj[x] = f.cod.trg(c[x]);
  }
  for (std::size_t a = 0; a < f.arr.size(); ++a) {
    const Id ai = static_cast<Id>(a);
    f2.arr[a] = f.cod.comp(c[f.dom.trg(ai)], f.arr[a], f.cod.inv(c[f.dom.src(ai)]));
  }
  return NatTrans{f, f2, std::move(c)};
}

GM random_gm(Rng& rng, const Groupoid& g, const Groupoid& h) {
  const Functor left = rng.coin() ? random_we_into(rng, g, 3, "k") : random_swe_into(rng, g, 3, "k");
  return make_gm(left, random_functor(rng, left.dom, h));
}

Anafunctor random_anafunctor(Rng& rng, const Groupoid& g, const Groupoid& h) {
  const Functor left = random_swe_into(rng, g, 3, "k");
  return make_anafunctor(left, random_functor(rng, left.dom, h));
}

TwoCellDiagram random_two_cell(Rng& rng, const Anafunctor& a) {
  const Functor mu = random_swe_into(rng, a.apex, static_cast<int>(a.apex.num_objects()) + 1, "m");
  const Functor phi_mu = a.left * mu;
  // twist the left leg by automorphisms only, so it stays surjective on objects
  std::vector<Id> t(mu.dom.num_objects());
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto aut = a.source().hom(phi_mu.obj[x], phi_mu.obj[x]);
    t[x] = aut[rng.below(aut.size())];
  }
  Functor phi2{phi_mu.dom, phi_mu.cod, phi_mu.obj, std::vector<Id>(phi_mu.arr.size())};
  for (std::size_t e = 0; e < phi2.arr.size(); ++e) {
    const Id ei = static_cast<Id>(e);
    phi2.arr[e] = phi_mu.cod.comp(t[mu.dom.trg(ei)], phi_mu.arr[e], phi_mu.cod.inv(t[mu.dom.src(ei)]));
  }
  const NatTrans tt{phi_mu, phi2, t};
  const NatTrans s = random_nat_from(rng, a.right * mu);
  const Anafunctor a2 = make_anafunctor(phi2, s.to);
  const Functor nu = random_swe_into(rng, mu.dom, static_cast<int>(mu.dom.num_objects()) + 1, "n");
  TwoCellDiagram c{a, a2, mu * nu, nu, tt * nu, s * nu};
  validate_two_cell(c);
  return c;
}

Bibundle random_right_principal(Rng& rng, const Groupoid& g, const Groupoid& h) {
  if (rng.coin()) return bibundlise(random_functor(rng, g, h));
  return gm_to_bibundle(random_gm(rng, g, h));
}

Bibundle random_biprincipal(Rng& rng, const Groupoid& g) {
  const Functor w = random_we_from(rng, g);
  if (rng.coin()) return bibundlise(w);
  // a span of two weak equivalences
  const Functor left = random_we_into(rng, g, 3, "k");
  return gm_to_bibundle(make_gm(left, w * left));
}

}  // namespace gloc::fuzz
