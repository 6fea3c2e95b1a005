#include "gloc/ana.hpp"

namespace gloc {

bool is_anafunctor(const GM& a) { return check_subductive_weak_equivalence(a.left); }

Anafunctor make_anafunctor(Functor left, Functor right) {
  if (!(left.dom == right.dom)) fail(ErrorKind::BoundaryMismatch, "span legs have different apexes");
  if (!check_subductive_weak_equivalence(left))
    fail(ErrorKind::NotAnafunctor, "left leg is not a subductive weak equivalence");
  return Anafunctor{left.dom, std::move(left), std::move(right)};
}

namespace {

void require_anafunctor(const GM& a, const char* what) {
  if (!is_anafunctor(a))
    fail(ErrorKind::NotAnafunctor, std::string(what) + ": left leg is not a subductive weak equivalence");
}

// Objects of K' grouped by their image in G.
std::vector<std::vector<Id>> fibres(const Functor& f) {
  std::vector<std::vector<Id>> r(f.cod.num_objects());
  for (std::size_t y = 0; y < f.dom.num_objects(); ++y) r[f.obj[y]].push_back(static_cast<Id>(y));
  return r;
}

WeakPullback anafunctise_pullback(const Functor& phi) {
  return weak_pullback(phi, identity_functor(phi.cod));
}

}  // namespace

Transformation make_transformation(const Anafunctor& a, const Anafunctor& b,
                                   const std::function<Id(Id, Id)>& f) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    fail(ErrorKind::BoundaryMismatch, "transformation between anafunctors with different ends");
  Transformation t{a, b, strict_pullback(a.left, b.left), {}};
  const Groupoid& P = t.base.groupoid;
  t.at.resize(P.num_objects());
  for (std::size_t o = 0; o < P.num_objects(); ++o) t.at[o] = f(t.base.pr1.obj[o], t.base.pr2.obj[o]);
  return t;
}

std::optional<std::string> check_transformation(const Transformation& t) {
  NatTrans n{t.source.right * t.base.pr1, t.target.right * t.base.pr2, t.at};
  return check_nat(n);
}

void validate_transformation(const Transformation& t) {
  if (auto e = check_transformation(t)) fail(ErrorKind::AxiomViolation, "transformation: " + *e);
}

bool operator==(const Transformation& a, const Transformation& b) {
  return a.at == b.at && a.source == b.source && a.target == b.target;
}

AnaComposite compose_ana_full(const Anafunctor& a, const Anafunctor& b) {
  if (!(a.target() == b.source())) fail(ErrorKind::BoundaryMismatch, "composition: middle groupoids differ");
  AnaComposite r{{}, strict_pullback(a.right, b.left)};
  r.ana = Anafunctor{r.pullback.groupoid, a.left * r.pullback.pr1, b.right * r.pullback.pr2};
  return r;
}

Anafunctor compose_ana(const Anafunctor& a, const Anafunctor& b) { return compose_ana_full(a, b).ana; }

Transformation identity_transformation(const Anafunctor& a) {
  FFInverse finv(a.left);
  const Groupoid& G = a.source();
  return make_transformation(a, a, [&](Id y1, Id y2) {
    return a.right.arr[finv(y1, y2, G.unit(a.left.obj[y1]))];
  });
}

Transformation inverse_transformation(const Transformation& s) {
  const Groupoid& H = s.source.target();
  return make_transformation(s.target, s.source, [&](Id y2, Id y1) { return H.inv(s(y1, y2)); });
}

Transformation vcomp_ana(const Transformation& s, const Transformation& t) {
  if (!(s.target == t.source)) fail(ErrorKind::BoundaryMismatch, "vertical composition: anafunctors differ");
  const auto mid = fibres(s.target.left);
  const Groupoid& H = s.source.target();
  return make_transformation(s.source, t.target, [&](Id y1, Id y3) {
    Id r = kNone;
    for (Id y2 : mid[s.source.left.obj[y1]]) {
      const Id c = H.comp(t(y2, y3), s(y1, y2));
      if (r == kNone) r = c;
      require(r == c, "vertical composite depends on the auxiliary object");
    }
    require(r != kNone, "no auxiliary object for vertical composition");
    return r;
  });
}

Transformation whisker_right_ana(const Transformation& s, const Anafunctor& b) {
  const AnaComposite src = compose_ana_full(s.source, b);
  const AnaComposite trg = compose_ana_full(s.target, b);
  FFInverse finv(b.left);
  return make_transformation(src.ana, trg.ana, [&](Id p, Id q) {
    const Id w = src.pullback.pr1.obj[p], v1 = src.pullback.pr2.obj[p];
    const Id w2 = trg.pullback.pr1.obj[q], v2 = trg.pullback.pr2.obj[q];
    return b.right.arr[finv(v1, v2, s(w, w2))];
  });
}

Transformation whisker_left_ana(const Anafunctor& a, const Transformation& s) {
  const AnaComposite src = compose_ana_full(a, s.source);
  const AnaComposite trg = compose_ana_full(a, s.target);
  FFInverse finv_a(a.left);
  FFInverse finv_t(s.target.left);
  const auto over = fibres(s.target.left);
  const Groupoid& G = a.source();
  const Groupoid& J = s.source.target();
  const Functor& omega2 = s.target.right;
  return make_transformation(src.ana, trg.ana, [&](Id p, Id q) {
    const Id y = src.pullback.pr1.obj[p], m = src.pullback.pr2.obj[p];
    const Id y2 = trg.pullback.pr1.obj[q], m2 = trg.pullback.pr2.obj[q];
    const Id h = a.right.arr[finv_a(y, y2, G.unit(a.left.obj[y]))];
    Id r = kNone;
    for (Id mm : over[s.source.left.obj[m]]) {
      const Id c = J.comp(omega2.arr[finv_t(mm, m2, h)], s(m, mm));
      if (r == kNone) r = c;
      require(r == c, "left whiskering depends on the chosen preimage");
    }
    require(r != kNone, "left whiskering found no preimage");
    return r;
  });
}

Transformation hcomp_ana(const Transformation& s, const Transformation& t) {
  auto r1 = vcomp_ana(whisker_left_ana(s.source, t), whisker_right_ana(s, t.target));
  auto r2 = vcomp_ana(whisker_right_ana(s, t.source), whisker_left_ana(s.target, t));
  require(r1 == r2, "horizontal composition depends on the whiskering order");
  return r1;
}

Transformation unitor_left_ana(const Anafunctor& a) {
  const AnaComposite p = compose_ana_full(identity_gm(a.source()), a);
  FFInverse finv(a.left);
  return make_transformation(p.ana, a, [&](Id o, Id y2) {
    const Id x = p.pullback.pr1.obj[o], y1 = p.pullback.pr2.obj[o];
    return a.right.arr[finv(y1, y2, a.source().unit(x))];
  });
}

Transformation unitor_right_ana(const Anafunctor& a) {
  const AnaComposite p = compose_ana_full(a, identity_gm(a.target()));
  FFInverse finv(a.left);
  return make_transformation(p.ana, a, [&](Id o, Id y2) {
    const Id y1 = p.pullback.pr1.obj[o];
    return a.right.arr[finv(y1, y2, a.source().unit(a.left.obj[y1]))];
  });
}

Transformation associator_ana(const Anafunctor& a, const Anafunctor& b, const Anafunctor& c) {
  const AnaComposite ab = compose_ana_full(a, b);
  const AnaComposite p = compose_ana_full(ab.ana, c);
  const AnaComposite bc = compose_ana_full(b, c);
  const AnaComposite q = compose_ana_full(a, bc.ana);
  FFInverse finv(p.ana.left);
  const Groupoid& G = a.source();
  return make_transformation(p.ana, q.ana, [&](Id o, Id o2) {
    const Id y = q.pullback.pr1.obj[o2], mn = q.pullback.pr2.obj[o2];
    const Id m = bc.pullback.pr1.obj[mn], n = bc.pullback.pr2.obj[mn];
    const Id back = p.pullback.find(ab.pullback.find(y, m), n);
    return p.ana.right.arr[finv(o, back, G.unit(p.ana.left.obj[o]))];
  });
}

Anafunctor anafunctise(const Functor& phi) {
  WeakPullback w = anafunctise_pullback(phi);
  return Anafunctor{w.groupoid, w.pr1, w.pr3};
}

Transformation anafunctise_2cell(const NatTrans& s) {
  const WeakPullback wa = anafunctise_pullback(s.from);
  const WeakPullback wb = anafunctise_pullback(s.to);
  const Groupoid& H = s.from.cod;
  return make_transformation(Anafunctor{wa.groupoid, wa.pr1, wa.pr3},
                             Anafunctor{wb.groupoid, wb.pr1, wb.pr3}, [&](Id o1, Id o2) {
                               const auto [x, h1, y1] = wa.obj_triple[o1];
                               const Id h2 = wb.obj_triple[o2][1];
                               return H.comp(h2, s.at[x], H.inv(h1));
                             });
}

Transformation anafunctise_identity(const Groupoid& g) {
  const WeakPullback w = anafunctise_pullback(identity_functor(g));
  return make_transformation(identity_gm(g), Anafunctor{w.groupoid, w.pr1, w.pr3},
                             [&](Id, Id o) { return w.obj_triple[o][1]; });
}

Transformation anafunctise_composition(const Functor& phi, const Functor& psi) {
  const WeakPullback w1 = anafunctise_pullback(phi);
  const WeakPullback w2 = anafunctise_pullback(psi);
  const WeakPullback w3 = anafunctise_pullback(psi * phi);
  const AnaComposite c =
      compose_ana_full(Anafunctor{w1.groupoid, w1.pr1, w1.pr3}, Anafunctor{w2.groupoid, w2.pr1, w2.pr3});
  const Groupoid& K = psi.cod;
  return make_transformation(c.ana, Anafunctor{w3.groupoid, w3.pr1, w3.pr3}, [&](Id p, Id o) {
    const Id h = w1.obj_triple[c.pullback.pr1.obj[p]][1];
    const Id k1 = w2.obj_triple[c.pullback.pr2.obj[p]][1];
    const Id k2 = w3.obj_triple[o][1];
    return K.comp(k2, psi.arr[psi.dom.inv(h)], K.inv(k1));
  });
}

CoherenceReport anafunctisation_coherence(const Functor& phi, const Functor& psi, const Functor& chi) {
  CoherenceReport r;
  const Anafunctor a1 = anafunctise(phi), a2 = anafunctise(psi), a3 = anafunctise(chi);
  {
    auto lhs = vcomp_ana(whisker_right_ana(anafunctise_composition(phi, psi), a3),
                         anafunctise_composition(psi * phi, chi));
    auto rhs = vcomp_ana(associator_ana(a1, a2, a3),
                         vcomp_ana(whisker_left_ana(a1, anafunctise_composition(psi, chi)),
                                   anafunctise_composition(phi, chi * psi)));
    r.associativity = lhs == rhs;
  }
  {
    const Groupoid& G = phi.dom;
    auto route = vcomp_ana(whisker_right_ana(anafunctise_identity(G), a1),
                           anafunctise_composition(identity_functor(G), phi));
    r.left_unit = route == unitor_left_ana(a1);
  }
  {
    const Groupoid& H = phi.cod;
    auto route = vcomp_ana(whisker_left_ana(a1, anafunctise_identity(H)),
                           anafunctise_composition(phi, identity_functor(H)));
    r.right_unit = route == unitor_right_ana(a1);
  }
  return r;
}

TwoCellDiagram transformation_to_2cell(const Transformation& t) {
  const StrictPullback& b = t.base;
  TwoCellDiagram c{t.source, t.target, b.pr1, b.pr2, {}, {}};
  std::vector<Id> units(b.groupoid.num_objects());
  const Groupoid& G = t.source.source();
  for (std::size_t o = 0; o < units.size(); ++o) units[o] = G.unit(t.source.left.obj[b.pr1.obj[o]]);
  c.s1 = NatTrans{t.source.left * b.pr1, t.target.left * b.pr2, std::move(units)};
  c.s2 = NatTrans{t.source.right * b.pr1, t.target.right * b.pr2, t.at};
  return c;
}

Transformation canonical_2cell(const TwoCellDiagram& c) {
  require_anafunctor(c.source, "canonical 2-cell source");
  require_anafunctor(c.target, "canonical 2-cell target");
  const Anafunctor& A = c.source;
  const Anafunctor& B = c.target;
  const Groupoid& K = A.apex;
  const Groupoid& L = c.mediator();
  const Groupoid& G = A.source();
  const Groupoid& H = A.target();
  FFInverse finv(B.left);
  // Objects ((y, y'), k, l) of (K x_G K') xw_{pr1, alpha} L, grouped by y.
  std::vector<std::vector<std::pair<Id, Id>>> reach(K.num_objects());
  for (std::size_t l = 0; l < L.num_objects(); ++l)
    for (std::size_t y = 0; y < K.num_objects(); ++y)
      for (Id k : K.hom(static_cast<Id>(y), c.alpha.obj[l])) reach[y].emplace_back(static_cast<Id>(l), k);
  return make_transformation(A, B, [&](Id y, Id y2) {
    Id u = kNone;
    for (const auto& [l, k] : reach[y]) {
      const Id t = finv(y2, c.alpha_p.obj[l], G.comp(c.s1.at[l], A.left.arr[k]));
      const Id cand = H.comp(H.inv(B.right.arr[t]), c.s2.at[l], A.right.arr[k]);
      if (u == kNone) u = cand;
      require(u == cand, "canonical 2-cell does not descend along pr1");
    }
    require(u != kNone, "canonical 2-cell: pr1 is not surjective");
    return u;
  });
}

AnafunctisedGM anafunctise_gm(const GM& gm) {
  WeakPullback w = weak_pullback(identity_functor(gm.source()), gm.left);
  AnafunctisedGM r{Anafunctor{w.groupoid, w.pr1, gm.right * w.pr3}, {}};
  const Functor id = identity_functor(w.groupoid);
  r.comparison = TwoCellDiagram{gm, r.ana, w.pr3, id, inverse(w.pr2), identity_nat(r.ana.right)};
  r.comparison.s1.from = gm.left * w.pr3;
  r.comparison.s1.to = r.ana.left * id;
  r.comparison.s2.from = gm.right * w.pr3;
  r.comparison.s2.to = r.ana.right * id;
  return r;
}

Transformation canonical_2cell_gm(const TwoCellDiagram& c) {
  const AnafunctisedGM a = anafunctise_gm(c.source);
  const AnafunctisedGM b = anafunctise_gm(c.target);
  return canonical_2cell(vcomp_gm(vcomp_gm(inverse_two_cell(a.comparison), c), b.comparison));
}

Anafunctor subductive_replacement(const Anafunctor& a) {
  WeakPullback w = weak_pullback(a.right, identity_functor(a.target()));
  return Anafunctor{w.groupoid, a.left * w.pr1, w.pr3};
}

QuasiInverseAna quasi_inverse_ana(const Anafunctor& a) {
  require_anafunctor(a, "quasi-inverse");
  auto rep = check_weak_equivalence(a.right);
  if (!rep.is_weak_equivalence())
    fail(ErrorKind::RightLegNotWeakEquivalence,
         rep.es_violation ? *rep.es_violation : *rep.ff_violation);
  QuasiInverseAna r;
  r.input = check_subductive_weak_equivalence(a.right) ? a : subductive_replacement(a);
  const Anafunctor& in = r.input;
  r.inverse = Anafunctor{in.apex, in.right, in.left};
  const Groupoid& G = in.source();
  const Groupoid& H = in.target();
  FFInverse finv_phi(in.left), finv_psi(in.right);
  const AnaComposite fwd = compose_ana_full(in, r.inverse);  // K x_{psi,psi} K
  const AnaComposite bwd = compose_ana_full(r.inverse, in);  // K x_{phi,phi} K
  r.unit = make_transformation(identity_gm(G), fwd.ana, [&](Id, Id o) {
    const Id y1 = fwd.pullback.pr1.obj[o], y2 = fwd.pullback.pr2.obj[o];
    return in.left.arr[finv_psi(y1, y2, H.unit(in.right.obj[y1]))];
  });
  r.counit = make_transformation(bwd.ana, identity_gm(H), [&](Id o, Id) {
    const Id y1 = bwd.pullback.pr1.obj[o], y2 = bwd.pullback.pr2.obj[o];
    return H.inv(in.right.arr[finv_phi(y1, y2, G.unit(in.left.obj[y1]))]);
  });

  const Anafunctor& ab = r.inverse;
  auto t1 = vcomp_ana(
      inverse_transformation(unitor_left_ana(in)),
      vcomp_ana(whisker_right_ana(r.unit, in),
                vcomp_ana(associator_ana(in, ab, in),
                          vcomp_ana(whisker_left_ana(in, r.counit), unitor_right_ana(in)))));
  auto t2 = vcomp_ana(
      inverse_transformation(unitor_right_ana(ab)),
      vcomp_ana(whisker_left_ana(ab, r.unit),
                vcomp_ana(inverse_transformation(associator_ana(ab, in, ab)),
                          vcomp_ana(whisker_right_ana(r.counit, ab), unitor_left_ana(ab)))));
  r.triangles_ok = t1 == identity_transformation(in) && t2 == identity_transformation(ab);
  return r;
}

}  // namespace gloc
