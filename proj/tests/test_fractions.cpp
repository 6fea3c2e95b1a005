#include "common.hpp"
#include "gloc/fuzz.hpp"

using namespace t;

namespace {

Id non_unit(const Groupoid& g) {
  for (Id a = 0; a < static_cast<Id>(g.num_arrows()); ++a)
    if (!g.is_unit(a)) return a;
  return kNone;
}

}  // namespace

TEST_CASE("spanisation") {
  CHECK(spanise(identity_functor(pt())) == identity_gm(pt()));
  const GM s = spanise(bang(pair2()));
  CHECK(is_weak_equivalence(s.left));
  CHECK(is_weak_equivalence(s.right));
  const Functor f = point_at(bc(2), 0);
  CHECK(two_cells_equal(spanise_2cell(identity_nat(f)), identity_two_cell(spanise(f))));
}

TEST_CASE("composition of generalized morphisms") {
  const GM a = spanise(bang(pair2()));
  const QuasiInverseGM q = quasi_inverse_gm(a);
  CHECK(compose_gm(a, q.inverse).apex.num_objects() == 4);

  // Weakly unital: the composite with an identity is a different span,
  // related by the unitor.
  const GM ai = compose_gm(a, identity_gm(pt()));
  CHECK_FALSE(ai == a);
  const TwoCellDiagram r = unitor_right_gm(a);
  CHECK_FALSE(check_two_cell(r).has_value());
  CHECK(r.source == ai);
  CHECK(r.target == a);
  CHECK(two_cells_equal(unitor_left_gm(identity_gm(pt())), unitor_right_gm(identity_gm(pt()))));
}

TEST_CASE("composition is associative up to regrouping") {
  const GM a = spanise(bang(pair2()));
  const GM b = spanise(point_at(bc(2), 0));
  const GM c = identity_gm(bc(2));
  const GM l = compose_gm(compose_gm(a, b), c);
  const GM r = compose_gm(a, compose_gm(b, c));
  CHECK(l.apex.num_objects() == r.apex.num_objects());
  CHECK(l.apex.num_arrows() == r.apex.num_arrows());
  const TwoCellDiagram as = associator_gm(a, b, c);
  CHECK_FALSE(check_two_cell(as).has_value());
  CHECK(is_weak_equivalence(as.alpha));
  CHECK(is_weak_equivalence(as.alpha_p));
}

TEST_CASE("vertical composition with identities and inverses") {
  const Groupoid b = bc(2);
  const Functor id = identity_functor(b);
  const TwoCellDiagram c = spanise_2cell(make_nat(id, id, {non_unit(b)}));
  const TwoCellDiagram ci = vcomp_gm(c, identity_two_cell(c.target));
  CHECK(two_cells_equal(ci, c));
  CHECK(two_cells_equal(vcomp_gm(c, inverse_two_cell(c)), identity_two_cell(c.source)));
  CHECK_FALSE(two_cells_equal(c, identity_two_cell(c.source)));
}

TEST_CASE("two_cells_equal separates distinct transformations") {
  const Groupoid b = bc(2);
  const Functor p = point_at(b, 0);
  const TwoCellDiagram e = spanise_2cell(make_nat(p, p, {b.unit(0)}));
  const TwoCellDiagram t = spanise_2cell(make_nat(p, p, {non_unit(b)}));
  CHECK(two_cells_equal(e, e));
  CHECK_FALSE(two_cells_equal(e, t));
}

TEST_CASE("whiskering an identity is an identity") {
  const GM a = spanise(bang(pair2()));
  const GM b = spanise(point_at(bc(2), 0));
  const TwoCellDiagram w = whisker_left_gm(a, identity_two_cell(b));
  CHECK(two_cells_equal(w, identity_two_cell(compose_gm(a, b))));
  const TwoCellDiagram w2 = whisker_right_gm(identity_two_cell(a), b);
  CHECK(two_cells_equal(w2, identity_two_cell(compose_gm(a, b))));
}

TEST_CASE("quasi-inverse of a generalized morphism") {
  const GM id = identity_gm(bc(2));
  const QuasiInverseGM qi = quasi_inverse_gm(id);
  CHECK(qi.inverse.apex == id.apex);

  const GM a = spanise(bang(pair2()));
  const QuasiInverseGM q = quasi_inverse_gm(a);
  CHECK(q.inverse.source() == pt());
  CHECK(q.inverse.target() == pair2());
  CHECK_FALSE(check_two_cell(q.unit).has_value());
  CHECK_FALSE(check_two_cell(q.counit).has_value());
  CHECK_FALSE(check_nat(q.witness).has_value());
  CHECK(quasi_inverse_gm(q.inverse).inverse.apex == a.apex);

  const GM bad = make_gm(identity_functor(pt()), point_at(disc(2), 0));
  try {
    quasi_inverse_gm(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RightLegNotWeakEquivalence);
  }
}

TEST_CASE("two_cells_equal is symmetric and transitive on fuzzed diagrams") {
  fuzz::Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const Groupoid g = fuzz::random_groupoid(rng, 2, 4, "x");
    const Groupoid h = fuzz::random_groupoid(rng, 2, 4, "y");
    if (g.num_objects() != 0 && h.num_objects() == 0) continue;
    const Anafunctor a = fuzz::random_anafunctor(rng, g, h);
    const TwoCellDiagram c1 = fuzz::random_two_cell(rng, a);
    const TwoCellDiagram c2 = vcomp_gm(c1, identity_two_cell(c1.target));
    const TwoCellDiagram c3 = vcomp_gm(identity_two_cell(c1.source), c1);
    CHECK(two_cells_equal(c1, c2));
    CHECK(two_cells_equal(c2, c1));
    CHECK(two_cells_equal(c2, c3));
    CHECK(two_cells_equal(c1, c3));
  }
}
