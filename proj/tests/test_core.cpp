#include "common.hpp"
#include "gloc/fuzz.hpp"
#include "oracles.hpp"

using namespace t;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Inconsistent;
}

Id non_unit(const Groupoid& g) {
  for (Id a = 0; a < static_cast<Id>(g.num_arrows()); ++a)
    if (!g.is_unit(a)) return a;
  return kNone;
}

}  // namespace

TEST_CASE("validate_groupoid accepts Pt and Pair(2)") {
  RawGroupoid raw;
  raw.objects = {"*"};
  raw.arrows = {{"id", "*", "*"}};
  raw.units = {{"*", "id"}};
  raw.inverse = {{"id", "id"}};
  raw.compose = {{"id", "id", "id"}};
  const Groupoid p = validate_groupoid(raw);
  CHECK(p.num_objects() == 1);
  CHECK(p.num_arrows() == 1);

  const Groupoid g = validate_groupoid(to_raw(pair2()));
  CHECK(g.num_objects() == 2);
  CHECK(g.num_arrows() == 4);
  CHECK(oracle::groupoid_axioms(g));
  const Id a01 = arrow(g, "(0,1)"), a10 = arrow(g, "(1,0)");
  CHECK(g.comp(a10, a01) == arrow(g, "(0,0)"));
}

TEST_CASE("validate_groupoid rejects a missing unit and dangling ids") {
  RawGroupoid raw;
  raw.objects = {"a", "b"};
  raw.arrows = {{"ia", "a", "a"}, {"ib", "b", "b"}};
  raw.units = {{"a", "ia"}};
  raw.inverse = {{"ia", "ia"}, {"ib", "ib"}};
  raw.compose = {{"ia", "ia", "ia"}, {"ib", "ib", "ib"}};
  CHECK(kind_of([&] { validate_groupoid(raw); }) == ErrorKind::AxiomViolation);
  raw.units.push_back({"b", "ib"});
  CHECK_NOTHROW(validate_groupoid(raw));
  raw.arrows.push_back({"x", "a", "c"});
  CHECK(kind_of([&] { validate_groupoid(raw); }) == ErrorKind::DanglingReference);
}

TEST_CASE("validate_groupoid rejects a non-associative table") {
  // C3 with the square of g swapped for the unit.
  RawGroupoid raw = to_raw(bc(3));
  for (auto& c : raw.compose)
    if (c[0] == c[1] && c[0] != raw.units[0].second) c[2] = raw.units[0].second;
  CHECK(kind_of([&] { validate_groupoid(raw); }) == ErrorKind::AxiomViolation);
}

TEST_CASE("characteristic functor") {
  const auto cp = characteristic_functor(pt());
  CHECK(cp.pair.num_arrows() == 1);
  const auto c2 = characteristic_functor(pair2());
  CHECK(is_weak_equivalence(c2.chi));
  CHECK(c2.chi.arr.size() == 4);
  CHECK(std::set<Id>(c2.chi.arr.begin(), c2.chi.arr.end()).size() == 4);
  const Groupoid b = bc(2);
  const auto cb = characteristic_functor(b);
  CHECK(cb.pair.num_arrows() == 1);
  CHECK(cb.chi.ar(0) == cb.chi.ar(1));
  CHECK(oracle::functor_axioms(cb.chi));
}

TEST_CASE("constructors") {
  const Groupoid d = trivial_groupoid({"a", "b"});
  CHECK(d.num_objects() == 2);
  CHECK(d.num_arrows() == 2);
  const Groupoid p3 = pair_groupoid({"0", "1", "2"});
  CHECK(p3.num_arrows() == 9);
  CHECK(oracle::groupoid_axioms(p3));
  const Groupoid r = relation_groupoid({"a", "b", "c"}, {0, 0, 1});
  CHECK(r.num_arrows() == 5);
  CHECK(r.num_components() == 2);

  const Groupoid b = bc(2);
  const Id t = non_unit(b);
  const Bibundle swap = make_left_action(b, {"0", "1"}, {0, 0}, [&](Id g, Id x) { return g == t ? 1 - x : x; });
  CHECK_FALSE(check_bibundle(swap).has_value());
  const Groupoid ag = left_action_groupoid(swap);
  CHECK(ag.num_objects() == 2);
  CHECK(ag.num_arrows() == 4);
  CHECK(ag.num_components() == 1);
  CHECK(ag.hom(0, 0).size() == 1);
  CHECK(oracle::groupoid_axioms(ag));
}

TEST_CASE("weak equivalences") {
  const auto r = check_weak_equivalence(bang(pair2()));
  CHECK(r.is_weak_equivalence());
  const Functor inc = point_at(disc(2), 0);
  const auto r2 = check_weak_equivalence(inc);
  CHECK(r2.fully_faithful);
  CHECK_FALSE(r2.essentially_surjective);
  CHECK(is_weak_equivalence(identity_functor(bc(3))));

  CHECK(check_subductive_weak_equivalence(bang(pair2())));
  const Functor p0 = point_at(pair2(), 0);
  CHECK(is_weak_equivalence(p0));
  CHECK_FALSE(check_subductive_weak_equivalence(p0));
  CHECK(check_subductive_weak_equivalence(identity_functor(pair2())));
}

TEST_CASE("strict pullbacks") {
  const auto s = strict_pullback(identity_functor(pt()), identity_functor(pt()));
  CHECK(s.groupoid.num_arrows() == 1);
  const Groupoid p = pair2();
  const auto e = strict_pullback(point_at(p, 0), point_at(p, 1));
  CHECK(e.groupoid.num_objects() == 0);
  const auto d = strict_pullback(bang(disc(2)), bang(disc(3)));
  CHECK(d.groupoid.num_objects() == 6);
  CHECK(d.groupoid.num_arrows() == 6);
}

TEST_CASE("weak pullbacks") {
  const auto w = weak_pullback(identity_functor(pt()), identity_functor(pt()));
  CHECK(w.groupoid.num_objects() == 1);
  const Groupoid p = pair2();
  const auto w2 = weak_pullback(point_at(p, 0), point_at(p, 1));
  REQUIRE(w2.groupoid.num_objects() == 1);
  CHECK(w2.obj_triple[0][1] == arrow(p, "(0,1)"));
  const Groupoid b = bc(2);
  const auto w3 = weak_pullback(identity_functor(b), identity_functor(b));
  CHECK(w3.groupoid.num_objects() == 2);
  CHECK(w3.groupoid.num_arrows() == 8);
  CHECK(oracle::groupoid_axioms(w3.groupoid));
}

TEST_CASE("mediator and the strict-to-weak comparison") {
  const auto w = weak_pullback(identity_functor(pt()), identity_functor(pt()));
  const Functor id = identity_functor(pt());
  const Functor th = weak_pullback_mediator(w, id, id, identity_nat(id));
  CHECK(th.ob(0) == 0);
  const Functor phi = bang(pair2()), psi = bang(disc(2));
  const auto s = strict_pullback(phi, psi);
  const auto wp = weak_pullback(phi, psi);
  const Functor c = strict_to_weak(s, wp);
  CHECK(oracle::functor_axioms(c));
  CHECK(wp.pr1 * c == s.pr1);
  CHECK(wp.pr3 * c == s.pr2);
}

TEST_CASE("base change") {
  const Groupoid b = bc(2);
  const auto same = base_change(b, {"*"}, {0});
  CHECK(same.groupoid.num_arrows() == 2);
  CHECK(is_weak_equivalence(same.comparison));
  const auto p = base_change(pt(), {"a", "b"}, {0, 0});
  CHECK(p.groupoid.num_arrows() == 4);
  CHECK(p.groupoid.num_components() == 1);
  const auto q = base_change(b, {"a", "b"}, {0, 0});
  CHECK(q.groupoid.num_objects() == 2);
  CHECK(q.groupoid.num_arrows() == 8);
}

TEST_CASE("factorisations through fully faithful and subductive functors") {
  const Functor phi = bang(pair2());
  const Functor id = identity_functor(pair2());
  const NatTrans s = identity_nat(phi * id);
  const NatTrans f = rep_ff_factor(phi, id, id, s);
  CHECK(f == identity_nat(id));

  const Groupoid b = bc(2);
  const Functor psi = point_at(b, 0);
  const Id t = non_unit(b);
  const NatTrans s2 = make_nat(psi * phi, psi * phi, {t, t});
  const NatTrans f2 = coff_factor(phi, psi, psi, s2);
  CHECK(f2.at == std::vector<Id>{t});
  CHECK(f2 * phi == s2);
  CHECK(kind_of([&] { coff_factor(point_at(pair2(), 0), identity_functor(pair2()), identity_functor(pair2()),
                                  identity_nat(point_at(pair2(), 0))); }) == ErrorKind::NotSubductive);
}

TEST_CASE("weak equivalence report agrees with the brute-force oracle") {
  fuzz::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Groupoid g = fuzz::random_groupoid(rng, 3, 12, "x");
    const Groupoid h = fuzz::random_groupoid(rng, 3, 12, "y");
    if (g.num_objects() != 0 && h.num_objects() == 0) continue;
    const Functor f = fuzz::random_functor(rng, g, h);
    REQUIRE(oracle::functor_axioms(f));
    const auto r = check_weak_equivalence(f);
    const auto o = oracle::weak_equivalence(f);
    CHECK(r.essentially_surjective == o.essentially_surjective);
    CHECK(r.fully_faithful == o.fully_faithful);
    bool onto = true;
    for (std::size_t y = 0; y < h.num_objects(); ++y)
      onto = onto && std::find(f.obj.begin(), f.obj.end(), static_cast<Id>(y)) != f.obj.end();
    CHECK(check_subductive_weak_equivalence(f) == (onto && o.fully_faithful));
  }
}

TEST_CASE("fully faithful iff the base change comparison is an isomorphism") {
  fuzz::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Groupoid g = fuzz::random_groupoid(rng, 3, 12, "x");
    const Groupoid h = fuzz::random_groupoid(rng, 3, 12, "y");
    if (g.num_objects() != 0 && h.num_objects() == 0) continue;
    const Functor f = fuzz::random_functor(rng, g, h);
    const auto bcg = base_change(h, g.object_labels(), f.obj);
    // The canonical comparison G -> base change is identity on objects.
    Functor c{g, bcg.groupoid, std::vector<Id>(g.num_objects()), std::vector<Id>(g.num_arrows())};
    for (std::size_t x = 0; x < g.num_objects(); ++x) c.obj[x] = static_cast<Id>(x);
    for (Id a = 0; a < static_cast<Id>(g.num_arrows()); ++a) {
      const auto hs = bcg.groupoid.hom(g.src(a), g.trg(a));
      for (Id e : hs)
        if (bcg.comparison.ar(e) == f.ar(a)) c.arr[a] = e;
    }
    const bool iso = bcg.groupoid.num_arrows() == g.num_arrows() &&
                     std::set<Id>(c.arr.begin(), c.arr.end()).size() == g.num_arrows();
    CHECK(iso == oracle::weak_equivalence(f).fully_faithful);
  }
}

TEST_CASE("size cap") {
  const std::size_t old = size_cap();
  set_size_cap(10);
  const Groupoid b = bc(4);
  CHECK(kind_of([&] { weak_pullback(identity_functor(b), identity_functor(b)); }) ==
        ErrorKind::SizeCapExceeded);
  set_size_cap(old);
}
