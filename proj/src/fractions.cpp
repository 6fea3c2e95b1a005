#include "gloc/fractions.hpp"

namespace gloc {

bool operator==(const GM& a, const GM& b) {
  return a.left == b.left && a.right == b.right;
}

GM make_gm(Functor left, Functor right) {
  if (!(left.dom == right.dom)) fail(ErrorKind::BoundaryMismatch, "span legs have different apexes");
  auto rep = check_weak_equivalence(left);
  if (!rep.is_weak_equivalence())
    fail(ErrorKind::NotWeakEquivalence,
         "left leg: " + (rep.es_violation ? *rep.es_violation : *rep.ff_violation));
  return GM{left.dom, std::move(left), std::move(right)};
}

GM make_span(Functor left, Functor right) {
  if (!(left.dom == right.dom)) fail(ErrorKind::BoundaryMismatch, "span legs have different apexes");
  return GM{left.dom, std::move(left), std::move(right)};
}

std::optional<std::string> check_two_cell(const TwoCellDiagram& c) {
  if (!(c.source.source() == c.target.source()) || !(c.source.target() == c.target.target()))
    return std::string("outer spans have different endpoints");
  if (!(c.alpha.dom == c.alpha_p.dom)) return std::string("mediator legs have different domains");
  if (!(c.alpha.cod == c.source.apex) || !(c.alpha_p.cod == c.target.apex))
    return std::string("mediator legs miss the apexes");
  if (auto e = check_functor(c.alpha)) return "alpha: " + *e;
  if (auto e = check_functor(c.alpha_p)) return "alpha': " + *e;
  if (!is_weak_equivalence(c.alpha)) return std::string("alpha is not a weak equivalence");
  if (!is_weak_equivalence(c.alpha_p)) return std::string("alpha' is not a weak equivalence");
  if (!(c.s1.from == c.source.left * c.alpha) || !(c.s1.to == c.target.left * c.alpha_p))
    return std::string("S1 has the wrong ends");
  if (!(c.s2.from == c.source.right * c.alpha) || !(c.s2.to == c.target.right * c.alpha_p))
    return std::string("S2 has the wrong ends");
  if (auto e = check_nat(c.s1)) return "S1: " + *e;
  if (auto e = check_nat(c.s2)) return "S2: " + *e;
  return std::nullopt;
}

void validate_two_cell(const TwoCellDiagram& c) {
  if (auto e = check_two_cell(c)) fail(ErrorKind::AxiomViolation, "2-cell diagram: " + *e);
}

GM identity_gm(const Groupoid& g) {
  auto id = identity_functor(g);
  return GM{g, id, id};
}

GM spanise(const Functor& phi) { return GM{phi.dom, identity_functor(phi.dom), phi}; }

TwoCellDiagram spanise_2cell(const NatTrans& t) {
  GM a = spanise(t.from), b = spanise(t.to);
  auto id = identity_functor(t.from.dom);
  return TwoCellDiagram{a, b, id, id, identity_nat(id), t};
}

TwoCellDiagram identity_two_cell(const GM& a) {
  auto id = identity_functor(a.apex);
  return TwoCellDiagram{a, a, id, id, identity_nat(a.left), identity_nat(a.right)};
}

TwoCellDiagram inverse_two_cell(const TwoCellDiagram& c) {
  return TwoCellDiagram{c.target, c.source, c.alpha_p, c.alpha, inverse(c.s1), inverse(c.s2)};
}

GMComposite compose_gm_full(const GM& a, const GM& b) {
  if (!(a.target() == b.source())) fail(ErrorKind::BoundaryMismatch, "composition: middle groupoids differ");
  GMComposite r{{}, weak_pullback(a.right, b.left)};
  r.gm = GM{r.pullback.groupoid, a.left * r.pullback.pr1, b.right * r.pullback.pr3};
  require(is_weak_equivalence(r.gm.left), "composite left leg is not a weak equivalence");
  return r;
}

GM compose_gm(const GM& a, const GM& b) { return compose_gm_full(a, b).gm; }

TwoCellDiagram vcomp_gm(const TwoCellDiagram& c1, const TwoCellDiagram& c2) {
  if (!(c1.target == c2.source)) fail(ErrorKind::BoundaryMismatch, "vertical composition: spans differ");
  const WeakPullback w = weak_pullback(c1.alpha_p, c2.alpha);
  const Groupoid& P = w.groupoid;
  const Groupoid& G = c1.source.source();
  const Groupoid& H = c1.source.target();
  const Functor& phi_mid = c1.target.left;
  const Functor& psi_mid = c1.target.right;
  TwoCellDiagram r;
  r.source = c1.source;
  r.target = c2.target;
  r.alpha = c1.alpha * w.pr1;
  r.alpha_p = c2.alpha_p * w.pr3;
  std::vector<Id> v1(P.num_objects()), v2(P.num_objects());
  for (std::size_t o = 0; o < P.num_objects(); ++o) {
    const auto [l1, k, l2] = w.obj_triple[o];
    v1[o] = G.comp(c2.s1.at[l2], phi_mid.arr[k], c1.s1.at[l1]);
    v2[o] = H.comp(c2.s2.at[l2], psi_mid.arr[k], c1.s2.at[l1]);
  }
  r.s1 = NatTrans{r.source.left * r.alpha, r.target.left * r.alpha_p, std::move(v1)};
  r.s2 = NatTrans{r.source.right * r.alpha, r.target.right * r.alpha_p, std::move(v2)};
  return r;
}

TwoCellDiagram whisker_left_gm(const GM& a, const TwoCellDiagram& c) {
  if (!(a.target() == c.source.source())) fail(ErrorKind::BoundaryMismatch, "left whiskering");
  const GMComposite src = compose_gm_full(a, c.source);
  const GMComposite trg = compose_gm_full(a, c.target);
  const Groupoid& H = a.target();
  const WeakPullback q = weak_pullback(a.right, c.source.left * c.alpha);
  const Groupoid& Q = q.groupoid;
  Functor beta{Q, src.gm.apex, std::vector<Id>(Q.num_objects()), std::vector<Id>(Q.num_arrows())};
  Functor beta_p{Q, trg.gm.apex, std::vector<Id>(Q.num_objects()), std::vector<Id>(Q.num_arrows())};
  std::vector<Id> t1(Q.num_objects()), t2(Q.num_objects());
  const Groupoid& G = a.source();
  const Groupoid& N = c.mediator();
  for (std::size_t o = 0; o < Q.num_objects(); ++o) {
    const auto [l, h, n] = q.obj_triple[o];
    beta.obj[o] = src.pullback.find(l, h, c.alpha.obj[n]);
    beta_p.obj[o] = trg.pullback.find(l, H.comp(c.s1.at[n], h), c.alpha_p.obj[n]);
    t1[o] = G.unit(a.left.obj[l]);
    t2[o] = c.s2.at[n];
  }
  for (std::size_t e = 0; e < Q.num_arrows(); ++e) {
    const auto [g, h, nu] = q.arr_triple[e];
    beta.arr[e] = src.pullback.find_arrow(g, h, c.alpha.arr[nu]);
    beta_p.arr[e] = trg.pullback.find_arrow(g, H.comp(c.s1.at[N.src(nu)], h), c.alpha_p.arr[nu]);
  }
  TwoCellDiagram r{src.gm, trg.gm, beta, beta_p, {}, {}};
  r.s1 = NatTrans{src.gm.left * beta, trg.gm.left * beta_p, std::move(t1)};
  r.s2 = NatTrans{src.gm.right * beta, trg.gm.right * beta_p, std::move(t2)};
  return r;
}

TwoCellDiagram whisker_right_gm(const TwoCellDiagram& c, const GM& b) {
  if (!(c.source.target() == b.source())) fail(ErrorKind::BoundaryMismatch, "right whiskering");
  const GMComposite src = compose_gm_full(c.source, b);
  const GMComposite trg = compose_gm_full(c.target, b);
  const Groupoid& H = b.source();
  const Groupoid& J = b.target();
  const Groupoid& N = c.mediator();
  const WeakPullback q = weak_pullback(c.source.right * c.alpha, b.left);
  const Groupoid& Q = q.groupoid;
  Functor beta{Q, src.gm.apex, std::vector<Id>(Q.num_objects()), std::vector<Id>(Q.num_arrows())};
  Functor beta_p{Q, trg.gm.apex, std::vector<Id>(Q.num_objects()), std::vector<Id>(Q.num_arrows())};
  std::vector<Id> t1(Q.num_objects()), t2(Q.num_objects());
  for (std::size_t o = 0; o < Q.num_objects(); ++o) {
    const auto [n, h, m] = q.obj_triple[o];
    beta.obj[o] = src.pullback.find(c.alpha.obj[n], h, m);
    beta_p.obj[o] = trg.pullback.find(c.alpha_p.obj[n], H.comp(h, H.inv(c.s2.at[n])), m);
    t1[o] = c.s1.at[n];
    t2[o] = J.unit(b.right.obj[m]);
  }
  for (std::size_t e = 0; e < Q.num_arrows(); ++e) {
    const auto [nu, h, mu] = q.arr_triple[e];
    beta.arr[e] = src.pullback.find_arrow(c.alpha.arr[nu], h, mu);
    beta_p.arr[e] =
        trg.pullback.find_arrow(c.alpha_p.arr[nu], H.comp(h, H.inv(c.s2.at[N.src(nu)])), mu);
  }
  TwoCellDiagram r{src.gm, trg.gm, beta, beta_p, {}, {}};
  r.s1 = NatTrans{src.gm.left * beta, trg.gm.left * beta_p, std::move(t1)};
  r.s2 = NatTrans{src.gm.right * beta, trg.gm.right * beta_p, std::move(t2)};
  return r;
}

TwoCellDiagram hcomp_gm(const TwoCellDiagram& c1, const TwoCellDiagram& c2) {
  auto r1 = vcomp_gm(whisker_right_gm(c1, c2.source), whisker_left_gm(c1.target, c2));
  auto r2 = vcomp_gm(whisker_left_gm(c1.source, c2), whisker_right_gm(c1, c2.target));
  require(two_cells_equal(r1, r2), "horizontal composition depends on the whiskering order");
  return r1;
}

TwoCellDiagram unitor_left_gm(const GM& a) {
  const GMComposite p = compose_gm_full(identity_gm(a.source()), a);
  const Groupoid& P = p.gm.apex;
  TwoCellDiagram r{p.gm, a, identity_functor(P), p.pullback.pr3, {}, {}};
  r.s1 = NatTrans{p.gm.left, a.left * r.alpha_p, p.pullback.pr2.at};
  r.s2 = identity_nat(p.gm.right);
  r.s2.to = a.right * r.alpha_p;
  return r;
}

TwoCellDiagram unitor_right_gm(const GM& a) {
  const GMComposite p = compose_gm_full(a, identity_gm(a.target()));
  const Groupoid& P = p.gm.apex;
  const Groupoid& H = a.target();
  TwoCellDiagram r{p.gm, a, identity_functor(P), p.pullback.pr1, {}, {}};
  r.s1 = identity_nat(p.gm.left);
  r.s1.to = a.left * r.alpha_p;
  std::vector<Id> at(P.num_objects());
  for (std::size_t o = 0; o < at.size(); ++o) at[o] = H.inv(p.pullback.obj_triple[o][1]);
  r.s2 = NatTrans{p.gm.right, a.right * r.alpha_p, std::move(at)};
  return r;
}

TwoCellDiagram associator_gm(const GM& a, const GM& b, const GM& c) {
  const GMComposite ab = compose_gm_full(a, b);
  const GMComposite p = compose_gm_full(ab.gm, c);
  const GMComposite bc = compose_gm_full(b, c);
  const GMComposite q = compose_gm_full(a, bc.gm);
  const Groupoid& P = p.gm.apex;
  Functor rg{P, q.gm.apex, std::vector<Id>(P.num_objects()), std::vector<Id>(P.num_arrows())};
  for (std::size_t o = 0; o < P.num_objects(); ++o) {
    const auto [pab, k, n] = p.pullback.obj_triple[o];
    const auto [l, h, m] = ab.pullback.obj_triple[pab];
    rg.obj[o] = q.pullback.find(l, h, bc.pullback.find(m, k, n));
  }
  for (std::size_t e = 0; e < P.num_arrows(); ++e) {
    const auto [pab, k, nu] = p.pullback.arr_triple[e];
    const auto [g, h, mu] = ab.pullback.arr_triple[pab];
    rg.arr[e] = q.pullback.find_arrow(g, h, bc.pullback.find_arrow(mu, k, nu));
  }
  TwoCellDiagram r{p.gm, q.gm, identity_functor(P), rg, {}, {}};
  r.s1 = identity_nat(p.gm.left);
  r.s1.to = q.gm.left * rg;
  r.s2 = identity_nat(p.gm.right);
  r.s2.to = q.gm.right * rg;
  return r;
}

TwoCellDiagram reembed(const TwoCellDiagram& c, const Functor& mu) {
  return TwoCellDiagram{c.source, c.target, c.alpha * mu, c.alpha_p * mu, c.s1 * mu, c.s2 * mu};
}

QuasiInverseGM quasi_inverse_gm(const GM& a) {
  auto rep = check_weak_equivalence(a.right);
  if (!rep.is_weak_equivalence())
    fail(ErrorKind::RightLegNotWeakEquivalence,
         rep.es_violation ? *rep.es_violation : *rep.ff_violation);
  QuasiInverseGM r;
  r.inverse = GM{a.apex, a.right, a.left};
  const GMComposite fwd = compose_gm_full(a, r.inverse);  // apex K xw_{psi,psi} K
  const GMComposite bwd = compose_gm_full(r.inverse, a);  // apex K xw_{phi,phi} K
  const Groupoid& G = a.source();
  const Groupoid& H = a.target();
  {
    const Groupoid& W = fwd.gm.apex;
    std::vector<Id> at(W.num_objects());
    for (std::size_t o = 0; o < at.size(); ++o) {
      const auto [y1, h, y2] = fwd.pullback.obj_triple[o];
      at[o] = a.left.arr[rep.ff_inverse(y1, y2, h)];
    }
    r.witness = NatTrans{fwd.gm.left, fwd.gm.right, at};
    const Functor alpha = fwd.gm.left;
    TwoCellDiagram u{identity_gm(G), fwd.gm, alpha, identity_functor(W), {}, {}};
    u.s1 = NatTrans{alpha, fwd.gm.left, std::vector<Id>(W.num_objects())};
    for (std::size_t o = 0; o < at.size(); ++o) u.s1.at[o] = G.unit(alpha.obj[o]);
    u.s2 = NatTrans{alpha, fwd.gm.right, at};
    r.unit = std::move(u);
  }
  {
    const Groupoid& W = bwd.gm.apex;
    FFInverse finv(a.left);
    std::vector<Id> at(W.num_objects());
    for (std::size_t o = 0; o < at.size(); ++o) {
      const auto [y1, g, y2] = bwd.pullback.obj_triple[o];
      at[o] = H.inv(a.right.arr[finv(y1, y2, g)]);
    }
    const Functor alpha_p = bwd.gm.left;
    TwoCellDiagram c{bwd.gm, identity_gm(H), identity_functor(W), alpha_p, {}, {}};
    c.s1 = identity_nat(bwd.gm.left);
    c.s2 = NatTrans{bwd.gm.right, alpha_p, std::move(at)};
    r.counit = std::move(c);
  }
  return r;
}

CanonicalForm canonical_form(const TwoCellDiagram& c) {
  const GM& A = c.source;
  const GM& B = c.target;
  const Groupoid& K = A.apex;
  const Groupoid& K2 = B.apex;
  const Groupoid& L = c.mediator();
  const Groupoid& G = A.source();
  const Groupoid& H = A.target();
  FFInverse finv(B.left);

  // For each y, every (l, k) with k : y -> alpha(l).
  std::vector<std::vector<std::pair<Id, Id>>> reach(K.num_objects());
  for (std::size_t l = 0; l < L.num_objects(); ++l) {
    const Id al = c.alpha.obj[l];
    for (std::size_t y = 0; y < K.num_objects(); ++y)
      for (Id k : K.hom(static_cast<Id>(y), al)) reach[y].emplace_back(static_cast<Id>(l), k);
  }
  CanonicalForm r;
  for (std::size_t y = 0; y < K.num_objects(); ++y) {
    require(!reach[y].empty(), "mediator alpha is not essentially surjective");
    for (std::size_t y2 = 0; y2 < K2.num_objects(); ++y2)
      for (Id g : G.hom(A.left.obj[y], B.left.obj[y2])) {
        const Id g_inv = G.inv(g);
        Id u = kNone;
        for (const auto& [l, k] : reach[y]) {
          const Id t = finv(static_cast<Id>(y2), c.alpha_p.obj[l],
                            G.comp(c.s1.at[l], A.left.arr[k], g_inv));
          const Id cand = H.comp(H.inv(B.right.arr[t]), c.s2.at[l], A.right.arr[k]);
          if (u == kNone) u = cand;
          require(u == cand, "canonical 2-cell depends on the chosen mediator object");
        }
        r.index[{static_cast<Id>(y), g, static_cast<Id>(y2)}] = static_cast<Id>(r.objects.size());
        r.objects.push_back({static_cast<Id>(y), g, static_cast<Id>(y2)});
        r.u.push_back(u);
      }
  }
  return r;
}

bool two_cells_equal(const TwoCellDiagram& c1, const TwoCellDiagram& c2) {
  if (!(c1.source == c2.source) || !(c1.target == c2.target))
    fail(ErrorKind::BoundaryMismatch, "2-cells compared across different spans");
  return canonical_form(c1).u == canonical_form(c2).u;
}

}  // namespace gloc
