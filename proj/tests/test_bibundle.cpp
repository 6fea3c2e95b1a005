#include "common.hpp"
#include "gloc/fuzz.hpp"
#include "oracles.hpp"

using namespace t;

namespace {

Id non_unit(const Groupoid& g) {
  for (Id a = 0; a < static_cast<Id>(g.num_arrows()); ++a)
    if (!g.is_unit(a)) return a;
  return kNone;
}

bool bijective(const BiequivariantMap& m) { return !check_biequivariant(m, true).has_value(); }

// Pt -> BC2 with a single point fixed by everything on the right.
Bibundle non_free() {
  return make_bibundle(pt(), bc(2), {"x"}, {0}, {0}, [](Id, Id x) { return x; }, [](Id x, Id) { return x; });
}

}  // namespace

TEST_CASE("principality") {
  const Bibundle i = identity_bibundle(bc(2));
  CHECK(i.size() == 2);
  CHECK(check_principality(i).biprincipal());
  // Pt -> BC2 is not fully faithful, so its bibundle is only right principal.
  const Bibundle p = bibundlise(point_at(bc(2), 0));
  CHECK(p.size() == 2);
  CHECK(check_principality(p).right_principal);
  CHECK_FALSE(check_principality(p).biprincipal());
  CHECK(check_principality(bibundlise(bang(pair2()))).biprincipal());
  const Bibundle n = non_free();
  CHECK_FALSE(check_bibundle(n).has_value());
  CHECK_FALSE(check_principality(n).right_principal);
}

TEST_CASE("identity bibundles") {
  CHECK(identity_bibundle(pt()).size() == 1);
  CHECK(identity_bibundle(pair2()).size() == 4);
  CHECK(check_principality(identity_bibundle(pair2())).biprincipal());
}

TEST_CASE("tensor products") {
  const Bibundle b = bibundlise(point_at(bc(2), 0));
  const Bibundle ib = tensor(identity_bibundle(pt()), b);
  CHECK(oracle::biequivariant_iso_exists(ib, b));
  CHECK(bijective(unitor_left_bi(b)));
  CHECK(bijective(unitor_right_bi(b)));

  const Bibundle m = bibundlise(bang(pair2()));
  CHECK(check_principality(m).biprincipal());
  CHECK(oracle::biequivariant_iso_exists(tensor(m, opposite(m)), identity_bibundle(pair2())));

  const Functor phi = bang(pair2()), psi = point_at(bc(2), 0);
  const BiequivariantMap g = bibundlise_composition(phi, psi);
  CHECK(bijective(g));
  CHECK(g.target == bibundlise(psi * phi));
}

TEST_CASE("pentagon and triangle on a mixed instance") {
  const Bibundle x = bibundlise(bang(pair2()));
  const Bibundle y = bibundlise(point_at(bc(2), 0));
  const Bibundle z = identity_bibundle(bc(2));
  const Bibundle w = bibundlise(identity_functor(bc(2)));
  const BiequivariantMap r1 = vcomp_bi(associator_bi(tensor(x, y), z, w), associator_bi(x, y, tensor(z, w)));
  const BiequivariantMap r2 =
      vcomp_bi(vcomp_bi(hcomp_bi(associator_bi(x, y, z), identity_map(w)), associator_bi(x, tensor(y, z), w)),
               hcomp_bi(identity_map(x), associator_bi(y, z, w)));
  CHECK(r1 == r2);

  const Bibundle id = identity_bibundle(pt());
  const BiequivariantMap t1 = hcomp_bi(unitor_right_bi(x), identity_map(y));
  const BiequivariantMap t2 = vcomp_bi(associator_bi(x, id, y), hcomp_bi(identity_map(x), unitor_left_bi(y)));
  CHECK(t1 == t2);
  CHECK(hcomp_bi(identity_map(x), identity_map(y)) == identity_map(tensor(x, y)));
}

TEST_CASE("bibundlisation") {
  CHECK(bibundlise(identity_functor(pt())).size() == 1);
  const Functor p = point_at(bc(2), 0);
  CHECK(bibundlise_2cell(identity_nat(p)) == identity_map(bibundlise(p)));
  const BiequivariantMap s = bibundlise_2cell(make_nat(p, p, {non_unit(bc(2))}));
  CHECK(bijective(s));
  CHECK_FALSE(s == identity_map(bibundlise(p)));
}

TEST_CASE("opposite bibundles") {
  const Bibundle i = identity_bibundle(bc(3));
  CHECK(oracle::biequivariant_iso_exists(opposite(i), i));
  const Bibundle b = bibundlise(point_at(disc(2), 0));
  CHECK(opposite(opposite(b)) == b);
  const Principality p = check_principality(b), q = check_principality(opposite(b));
  CHECK(p.right_principal);
  CHECK_FALSE(p.left_principal);
  CHECK(q.left_principal);
  CHECK_FALSE(q.right_principal);
}

TEST_CASE("quasi-inverse bibundles") {
  const Bibundle i = identity_bibundle(bc(2));
  const QuasiInverseBi qi = quasi_inverse_bi(i);
  CHECK(oracle::biequivariant_iso_exists(qi.inverse, i));
  const QuasiInverseBi q = quasi_inverse_bi(bibundlise(bang(pair2())));
  CHECK(bijective(q.unit));
  CHECK(bijective(q.counit));
  try {
    quasi_inverse_bi(bibundlise(point_at(disc(2), 0)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBiprincipal);
  }
}

TEST_CASE("bibundles to anafunctors and back") {
  const Anafunctor a = bibundle_to_anafunctor(identity_bibundle(pt()));
  CHECK(a.apex.num_objects() == 1);
  CHECK(bibundle_to_anafunctor(identity_bibundle(bc(2))).apex.num_objects() == 2);

  const Functor p = point_at(bc(2), 0);
  const Groupoid ag = action_groupoid(bibundlise(p)).groupoid;
  const Groupoid an = anafunctise(p).apex;
  CHECK(ag.num_objects() == an.num_objects());
  CHECK(ag.num_arrows() == an.num_arrows());

  CHECK(gm_to_bibundle(identity_gm(pt())).size() == 1);
  for (const Functor& f : {p, bang(pair2()), point_at(disc(2), 1)})
    CHECK(oracle::biequivariant_iso_exists(gm_to_bibundle(spanise(f)), bibundlise(f)));
  const Bibundle b = bibundlise(bang(pair2()));
  CHECK(oracle::biequivariant_iso_exists(gm_to_bibundle(bibundle_to_anafunctor(b)), b));
  CHECK(bijective(bibundle_roundtrip_iso(b)));
  try {
    bibundle_to_anafunctor(non_free());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRightPrincipal);
  }
}

TEST_CASE("2-cells to bi-equivariant maps and back") {
  const GM g = spanise(bang(pair2()));
  const BiequivariantMap m = twocell_to_biequiv(identity_two_cell(g));
  for (std::size_t x = 0; x < m.map.size(); ++x) CHECK(m.map[x] == static_cast<Id>(x));

  const Bibundle b = bibundlise(point_at(bc(2), 0));
  CHECK(biequiv_to_transformation(identity_map(b)) == identity_transformation(bibundle_to_anafunctor(b)));
}

TEST_CASE("isomorphism search agrees with the brute-force oracle") {
  fuzz::Rng rng(31);
  int isos = 0, non_isos = 0;
  for (int i = 0; i < 150; ++i) {
    const Groupoid g = fuzz::random_groupoid(rng, 2, 6, "x");
    const Groupoid h = fuzz::random_groupoid(rng, 2, 6, "y");
    if (g.num_objects() != 0 && h.num_objects() == 0) continue;
    const Bibundle a = fuzz::random_right_principal(rng, g, h);
    const Bibundle b = fuzz::random_right_principal(rng, g, h);
    if (a.size() > 8 || b.size() > 8) continue;
    const bool expect = oracle::biequivariant_iso_exists(a, b);
    const auto found = find_biequivariant_iso(a, b);
    CHECK(found.has_value() == expect);
    if (found) CHECK(oracle::equivariant(a, b, found->map));
    (expect ? isos : non_isos)++;
  }
  CHECK(isos > 0);
  CHECK(non_isos > 0);
}

TEST_CASE("tensor preserves principality on fuzzed inputs") {
  fuzz::Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    const Groupoid g = fuzz::random_groupoid(rng, 2, 6, "x");
    const Groupoid h = fuzz::random_groupoid(rng, 2, 6, "y");
    const Groupoid k = fuzz::random_groupoid(rng, 2, 6, "z");
    if ((g.num_objects() && !h.num_objects()) || (h.num_objects() && !k.num_objects())) continue;
    const Bibundle a = fuzz::random_right_principal(rng, g, h);
    const Bibundle b = fuzz::random_right_principal(rng, h, k);
    CHECK(check_principality(tensor(a, b)).right_principal);
    const Bibundle p = fuzz::random_biprincipal(rng, g);
    const Bibundle q = fuzz::random_biprincipal(rng, p.H);
    CHECK(check_principality(tensor(p, q)).biprincipal());
  }
}
