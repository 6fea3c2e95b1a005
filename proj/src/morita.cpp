#include "gloc/morita.hpp"

#include <algorithm>

namespace gloc {

OrbitSpace orbit_space(const Groupoid& g) {
  OrbitSpace o;
  o.proj.assign(g.num_objects(), kNone);
  std::vector<Id> of_comp(g.num_components(), kNone);
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    const int c = g.component(static_cast<Id>(x));
    if (of_comp[c] == kNone) {
      of_comp[c] = static_cast<Id>(o.rep.size());
      o.rep.push_back(static_cast<Id>(x));
    }
    const Id k = of_comp[c];
    o.proj[x] = k;
    if (g.object_label(static_cast<Id>(x)) < g.object_label(o.rep[k])) o.rep[k] = static_cast<Id>(x);
  }
  for (Id r : o.rep) o.labels.push_back("[" + g.object_label(r) + "]");
  return o;
}

bool is_fibrating(const Groupoid& g) { return g.num_components() <= 1; }

KernelGroupoid kernel_groupoid(const Groupoid& g) {
  GroupoidBuilder b;
  for (const auto& l : g.object_labels()) b.add_object(l);
  std::vector<Id> anew(g.num_arrows(), kNone), aold;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const Id ai = static_cast<Id>(a);
    if (g.src(ai) != g.trg(ai)) continue;
    anew[a] = b.add_arrow(g.arrow_label(ai), g.src(ai), g.src(ai));
    aold.push_back(ai);
  }
  KernelGroupoid k;
  k.groupoid = b.finish([&](Id x, Id y) { return anew[g.comp(aold[x], aold[y])]; },
                        [&](Id x) { return anew[g.inv(aold[x])]; },
                        [&](Id x) { return anew[g.unit(x)]; });
  std::vector<Id> obj(g.num_objects());
  for (std::size_t x = 0; x < obj.size(); ++x) obj[x] = static_cast<Id>(x);
  k.inclusion = Functor{k.groupoid, g, std::move(obj), std::move(aold)};
  return k;
}

Groupoid inertia_groupoid(const Groupoid& g) {
  GroupoidBuilder b;
  std::vector<Id> stab(g.num_arrows(), kNone), kold;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const Id ai = static_cast<Id>(a);
    if (g.src(ai) != g.trg(ai)) continue;
    stab[a] = b.add_object(g.arrow_label(ai));
    kold.push_back(ai);
  }
  std::size_t total = 0;
  for (Id k : kold) total += g.out_degree(g.src(k));
  check_size(total, "inertia groupoid");
  std::unordered_map<std::uint64_t, Id> index;
  std::vector<std::pair<Id, Id>> data;
  for (Id k : kold)
    for (std::size_t p = 0; p < g.out_degree(g.src(k)); ++p) {
      const Id a = g.out_arrow(g.src(k), p);
      const Id conj = g.comp(a, k, g.inv(a));
      index.emplace(pair_key(a, k), static_cast<Id>(data.size()));
      data.emplace_back(a, k);
      b.add_arrow(tuple_label({g.arrow_label(a), g.arrow_label(k)}), stab[k], stab[conj]);
    }
  auto find = [&](Id a, Id k) { return index.at(pair_key(a, k)); };
  return b.finish(
      [&](Id e2, Id e1) { return find(g.comp(data[e2].first, data[e1].first), data[e1].second); },
      [&](Id e) {
        const auto [a, k] = data[e];
        return find(g.inv(a), g.comp(a, k, g.inv(a)));
      },
      [&](Id x) { return find(g.unit(g.src(kold[x])), kold[x]); });
}

Functor inertia_functor(const Functor& phi, const Groupoid& ig, const Groupoid& ih) {
  const Groupoid& G = phi.dom;
  const Groupoid& H = phi.cod;
  Functor f{ig, ih, std::vector<Id>(ig.num_objects()), std::vector<Id>(ig.num_arrows())};
  auto need = [](std::optional<Id> v) {
    require(v.has_value(), "inertia functor: missing image");
    return *v;
  };
  for (std::size_t o = 0; o < ig.num_objects(); ++o) {
    const Id k = need(G.find_arrow(ig.object_label(static_cast<Id>(o))));
    f.obj[o] = need(ih.find_object(H.arrow_label(phi.arr[k])));
  }
  for (std::size_t e = 0; e < ig.num_arrows(); ++e) {
    const Id e_i = static_cast<Id>(e);
    const Id k = need(G.find_arrow(ig.object_label(ig.src(e_i))));
    // arrow (a, k) : k -> a k a^-1, so a is recovered from the hom position
    Id a = kNone;
    const Id kt = need(G.find_arrow(ig.object_label(ig.trg(e_i))));
    for (Id cand : G.hom(G.src(k), G.src(kt)))
      if (ig.arrow_label(e_i) == tuple_label({G.arrow_label(cand), G.arrow_label(k)})) a = cand;
    require(a != kNone, "inertia functor: malformed arrow");
    f.arr[e] = need(ih.find_arrow(tuple_label({H.arrow_label(phi.arr[a]), H.arrow_label(phi.arr[k])})));
  }
  return f;
}

Skeleton skeleton(const Groupoid& g) {
  Skeleton s;
  s.reps = orbit_space(g).rep;
  for (Id r : s.reps) s.autos.push_back(vertex_group(g, r));
  return s;
}

MoritaResult are_morita_equivalent(const Groupoid& g, const Groupoid& h) {
  MoritaResult res;
  const Skeleton sg = skeleton(g), sh = skeleton(h);
  if (sg.reps.size() != sh.reps.size()) {
    res.reason = "orbit count " + std::to_string(sg.reps.size()) + " vs " + std::to_string(sh.reps.size());
    return res;
  }
  const std::size_t n = sg.reps.size();
  std::vector<Id> match(n, kNone);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n && match[i] == kNone; ++j)
      if (!used[j] && isomorphic(sg.autos[i], sh.autos[j])) {
        match[i] = static_cast<Id>(j);
        used[j] = 1;
      }
  const auto gi = std::find(match.begin(), match.end(), kNone);
  if (gi != match.end()) {
    const auto hj = std::find(used.begin(), used.end(), 0);
    res.reason = "stabilizer " + group_name(sg.autos[gi - match.begin()]) + " vs " +
                 group_name(sh.autos[hj - used.begin()]);
    return res;
  }
  res.equivalent = true;

  // theta : Sk(G) -> Sk(H) through the vertex group isomorphisms.
  Functor ig, ih;
  const Groupoid skg = full_subgroupoid(g, sg.reps, &ig);
  std::vector<Id> hreps(n);
  for (std::size_t i = 0; i < n; ++i) hreps[i] = sh.reps[match[i]];
  const Groupoid skh = full_subgroupoid(h, hreps, &ih);
  Functor theta{skg, skh, std::vector<Id>(n), std::vector<Id>(skg.num_arrows())};
  for (std::size_t i = 0; i < n; ++i) {
    const Id x = static_cast<Id>(i);
    theta.obj[i] = x;
    const auto iso = find_isomorphism(vertex_group(skg, x), vertex_group(skh, x));
    require(iso.has_value(), "matched stabilisers are not isomorphic");
    const auto src = skg.hom(x, x);
    const auto dst = skh.hom(x, x);
    for (std::size_t p = 0; p < src.size(); ++p) theta.arr[src[p]] = dst[(*iso)[p]];
  }
  res.witness = tensor(opposite(bibundlise(ig)), bibundlise(ih * theta));
  return res;
}

InertiaSpan inertia_span(const Functor& phi) {
  auto rep = check_weak_equivalence(phi);
  if (!rep.is_weak_equivalence())
    fail(ErrorKind::NotWeakEquivalence, rep.es_violation ? *rep.es_violation : *rep.ff_violation);
  const WeakPullback w = weak_pullback(phi, identity_functor(phi.cod));
  InertiaSpan s;
  s.apex = inertia_groupoid(w.groupoid);
  s.psi = inertia_functor(w.pr1, s.apex, inertia_groupoid(phi.dom));
  s.omega = inertia_functor(w.pr3, s.apex, inertia_groupoid(phi.cod));
  return s;
}

ActionInvariants action_invariants(const Bibundle& a) {
  const Groupoid ag = left_action_groupoid(a);
  ActionInvariants inv;
  inv.orbits = ag.num_components();
  for (std::size_t c = 0; c < ag.num_components(); ++c)
    inv.stabilisers.push_back(static_cast<std::size_t>(ag.component_data(static_cast<int>(c)).order));
  std::sort(inv.stabilisers.begin(), inv.stabilisers.end());
  return inv;
}

Bibundle transport_action(const Bibundle& b, const Bibundle& y) {
  if (!check_principality(b).biprincipal()) fail(ErrorKind::NotBiprincipal, "transport needs a biprincipal bibundle");
  if (!(y.G == b.H)) fail(ErrorKind::BoundaryMismatch, "action is not by the right-hand groupoid");
  Bibundle out = tensor(b, y);
  require(action_invariants(out) == action_invariants(y), "transport changed orbit or stabiliser data");
  return out;
}

}  // namespace gloc
