#include "common.hpp"
#include "gloc/fuzz.hpp"

using namespace t;

namespace {

Id non_unit(const Groupoid& g) {
  for (Id a = 0; a < static_cast<Id>(g.num_arrows()); ++a)
    if (!g.is_unit(a)) return a;
  return kNone;
}

bool all_units(const Transformation& s) {
  const Groupoid& h = s.target.target();
  for (Id a : s.at)
    if (!h.is_unit(a)) return false;
  return true;
}

}  // namespace

TEST_CASE("anafunctor composition uses the strict pullback") {
  const Anafunctor a = spanise(bang(pair2()));
  const Anafunctor flip = make_anafunctor(bang(pair2()), identity_functor(pair2()));
  const Anafunctor c = compose_ana(a, flip);
  CHECK(c.apex.num_objects() == 4);
  CHECK(check_subductive_weak_equivalence(c.left));

  const Anafunctor b = spanise(point_at(bc(2), 0));
  const Anafunctor l = compose_ana(compose_ana(a, b), identity_gm(bc(2)));
  const Anafunctor r = compose_ana(a, compose_ana(b, identity_gm(bc(2))));
  CHECK(l.apex.num_objects() == r.apex.num_objects());
  CHECK(l.apex.num_arrows() == r.apex.num_arrows());
  CHECK_FALSE(check_transformation(associator_ana(a, b, identity_gm(bc(2)))).has_value());
}

TEST_CASE("make_anafunctor rejects a non-subductive left leg") {
  try {
    make_anafunctor(point_at(pair2(), 0), identity_functor(pt()));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnafunctor);
  }
}

TEST_CASE("identity transformations") {
  const Transformation i = identity_transformation(identity_gm(pt()));
  CHECK(i.at.size() == 1);
  CHECK(all_units(i));
  CHECK(all_units(identity_transformation(spanise(bang(pair2())))));
  const Transformation b = identity_transformation(identity_gm(bc(2)));
  CHECK(all_units(b));
  CHECK_FALSE(check_transformation(b).has_value());
}

TEST_CASE("vertical and horizontal composition") {
  const Groupoid b = bc(2);
  const Functor p = point_at(b, 0);
  const Anafunctor a = anafunctise(p);
  const Transformation s = anafunctise_2cell(make_nat(p, p, {non_unit(b)}));
  CHECK_FALSE(check_transformation(s).has_value());
  CHECK(vcomp_ana(s, identity_transformation(a)) == s);
  CHECK(vcomp_ana(s, inverse_transformation(s)) == identity_transformation(a));
  CHECK_FALSE(s == identity_transformation(a));

  const Anafunctor x = spanise(bang(pair2()));
  const Transformation h = hcomp_ana(identity_transformation(x), identity_transformation(a));
  CHECK(h == identity_transformation(compose_ana(x, a)));
  CHECK(whisker_left_ana(x, identity_transformation(a)) == h);
}

TEST_CASE("unitors") {
  CHECK(all_units(unitor_left_ana(identity_gm(pt()))));
  const Anafunctor a = spanise(bang(pair2()));
  CHECK_FALSE(check_transformation(unitor_left_ana(a)).has_value());
  CHECK_FALSE(check_transformation(unitor_right_ana(a)).has_value());
}

TEST_CASE("anafunctisation") {
  const Anafunctor ap = anafunctise(identity_functor(pt()));
  CHECK(ap.apex.num_objects() == 1);
  const Functor p = point_at(bc(2), 0);
  CHECK(anafunctise(p).apex.num_objects() == 2);
  CHECK(anafunctise_2cell(identity_nat(p)) == identity_transformation(anafunctise(p)));

  const Functor id = identity_functor(pt());
  CHECK(anafunctisation_coherence(id, id, id).ok());
  const Groupoid b = bc(2);
  const Functor triv = make_functor(b, b, {0}, {b.unit(0), b.unit(0)});
  CHECK(anafunctisation_coherence(p, triv, identity_functor(b)).ok());
  CHECK(anafunctisation_coherence(p, identity_functor(b), triv).ok());
}

TEST_CASE("canonical 2-cells") {
  const Groupoid b = bc(2);
  const Functor p = point_at(b, 0);
  const Transformation s = anafunctise_2cell(make_nat(p, p, {non_unit(b)}));
  CHECK(canonical_2cell(transformation_to_2cell(s)) == s);
  const Anafunctor a = spanise(bang(pair2()));
  CHECK(canonical_2cell(identity_two_cell(a)) == identity_transformation(a));
  CHECK(two_cells_equal(transformation_to_2cell(s), transformation_to_2cell(canonical_2cell(transformation_to_2cell(s)))));
}

TEST_CASE("canonical 2-cells between generalized morphisms") {
  // Pair(2) <- Pt -> Pt: the left leg is a weak equivalence but not onto.
  const GM g = make_gm(point_at(pair2(), 0), identity_functor(pt()));
  CHECK_FALSE(is_anafunctor(g));
  const AnafunctisedGM ag = anafunctise_gm(g);
  CHECK(is_anafunctor(ag.ana));
  CHECK_FALSE(check_two_cell(ag.comparison).has_value());
  const Transformation u = canonical_2cell_gm(identity_two_cell(g));
  CHECK_FALSE(check_transformation(u).has_value());
  CHECK(u == identity_transformation(ag.ana));

  const Groupoid b = bc(2);
  const GM h = make_gm(point_at(pair2(), 1), point_at(b, 0));
  const Functor hr = h.right;
  const TwoCellDiagram c{h, h, identity_functor(pt()), identity_functor(pt()), identity_nat(h.left),
                         make_nat(hr, hr, {non_unit(b)})};
  validate_two_cell(c);
  const Transformation v = canonical_2cell_gm(c);
  CHECK_FALSE(check_transformation(v).has_value());
  CHECK_FALSE(v == identity_transformation(anafunctise_gm(h).ana));
  CHECK(vcomp_ana(v, v) == identity_transformation(anafunctise_gm(h).ana));
}

TEST_CASE("spanisation and anafunctisation are related by a 2-cell") {
  const Functor p = point_at(bc(2), 0);
  const AnafunctisedGM ag = anafunctise_gm(spanise(p));
  CHECK_FALSE(check_two_cell(ag.comparison).has_value());
  CHECK(ag.comparison.source == spanise(p));
  CHECK(ag.comparison.target == ag.ana);
}

TEST_CASE("quasi-inverse anafunctors") {
  const QuasiInverseAna qi = quasi_inverse_ana(identity_gm(bc(2)));
  CHECK(qi.inverse.apex == identity_gm(bc(2)).apex);
  CHECK(qi.triangles_ok);

  const QuasiInverseAna q = quasi_inverse_ana(spanise(bang(pair2())));
  CHECK(q.triangles_ok);
  CHECK_FALSE(check_transformation(q.unit).has_value());
  CHECK_FALSE(check_transformation(q.counit).has_value());

  try {
    quasi_inverse_ana(make_anafunctor(identity_functor(pt()), point_at(disc(2), 0)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RightLegNotWeakEquivalence);
  }
}
