#include "gloc/laws.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gloc/cech.hpp"
#include "gloc/fuzz.hpp"
#include "gloc/morita.hpp"

namespace gloc {

namespace {

using fuzz::Rng;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// A failed law; the message ends up in the transcript.
struct LawFailure {
  std::string what;
};

void law(bool ok, const std::string& what) {
  if (!ok) throw LawFailure{what};
}

std::string size_of(const Groupoid& g) {
  return std::to_string(g.num_objects()) + "/" + std::to_string(g.num_arrows());
}

Groupoid nonempty_groupoid(Rng& rng, int max_objects, int max_arrows, const std::string& prefix) {
  for (;;) {
    Groupoid g = fuzz::random_groupoid(rng, max_objects, max_arrows, prefix);
    if (g.num_objects() > 0) return g;
  }
}

// A groupoid that can receive a functor from g.
Groupoid target_for(Rng& rng, const Groupoid& g, int max_objects, int max_arrows, const std::string& prefix) {
  return g.num_objects() > 0 ? nonempty_groupoid(rng, max_objects, max_arrows, prefix)
                             : fuzz::random_groupoid(rng, max_objects, max_arrows, prefix);
}

bool small(const Groupoid& g) { return g.num_objects() <= 4 && g.num_arrows() <= 20; }

// ---- we -------------------------------------------------------------------

std::string case_we(Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    const Groupoid b = fuzz::random_groupoid(rng, 4, 20, "b");
    Functor phi, psi;
    if (rng.coin()) {
      phi = fuzz::random_we_into(rng, b, 4, "a");
    } else {
      const Groupoid a = fuzz::random_groupoid(rng, 4, 20, "a");
      if (a.num_objects() > 0 && b.num_objects() == 0) continue;
      phi = fuzz::random_functor(rng, a, b);
    }
    if (rng.coin()) {
      psi = fuzz::random_we_from(rng, b);
    } else {
      const Groupoid c = target_for(rng, b, 4, 20, "c");
      psi = fuzz::random_functor(rng, b, c);
    }
    if (!(small(phi.dom) && small(psi.cod)) && attempt < 50) continue;
    const Functor comp = psi * phi;
    validate_functor(comp);
    const bool w1 = is_weak_equivalence(phi), w2 = is_weak_equivalence(psi), w3 = is_weak_equivalence(comp);
    law(!(w1 && w2) || w3, "phi, psi weak equivalences but psi phi is not");
    law(!(w1 && w3) || w2, "phi, psi phi weak equivalences but psi is not");
    law(!(w2 && w3) || w1, "psi, psi phi weak equivalences but phi is not");
    const NatTrans s = fuzz::random_nat_from(rng, phi);
    validate_nat(s);
    law(is_weak_equivalence(s.to) == w1, "natural isomorphism changed the weak equivalence verdict");
    return "A=" + size_of(phi.dom) + " B=" + size_of(b) + " C=" + size_of(psi.cod) + " we=" +
           std::to_string(w1) + std::to_string(w2) + std::to_string(w3);
  }
}

// ---- pullback -------------------------------------------------------------

std::string case_pullback(Rng& rng) {
  const Groupoid k = nonempty_groupoid(rng, 3, 12, "k");
  const Groupoid g = fuzz::random_groupoid(rng, 3, 12, "g");
  const Functor phi = fuzz::random_functor(rng, g, k);
  const bool psi_we = rng.coin();
  const Functor psi = psi_we ? fuzz::random_we_into(rng, k, 3, "h")
                             : fuzz::random_functor(rng, fuzz::random_groupoid(rng, 3, 12, "h"), k);
  const WeakPullback w = weak_pullback(phi, psi);
  validate_nat(w.pr2);
  if (is_weak_equivalence(psi)) law(check_subductive_weak_equivalence(w.pr1), "pr1 is not a subductive weak equivalence");

  // mediator for a twisted cone over the pullback itself
  const Functor mu = fuzz::random_swe_into(rng, w.groupoid, static_cast<int>(w.groupoid.num_objects()) + 1, "l");
  const Functor alpha = w.pr1 * mu;
  const NatTrans s = fuzz::random_nat_from(rng, w.pr3 * mu);
  const NatTrans t = vcomp(w.pr2 * mu, psi * s);
  const Functor theta = weak_pullback_mediator(w, alpha, s.to, t);
  validate_functor(theta);
  law(w.pr1 * theta == alpha, "pr1 theta != alpha");
  law(w.pr3 * theta == s.to, "pr3 theta != beta");
  law((w.pr2 * theta).at == t.at, "pr2 theta != T");

  const StrictPullback sp = strict_pullback(phi, psi);
  validate_functor(strict_to_weak(sp, w));
  if (check_subductive_weak_equivalence(psi))
    law(check_subductive_weak_equivalence(sp.pr1), "strict pr1 is not a subductive weak equivalence");
  return "P=" + size_of(w.groupoid) + " strict=" + size_of(sp.groupoid) + " psi_we=" + std::to_string(psi_we);
}

// ---- coherence ------------------------------------------------------------

constexpr std::size_t kChainBudget = 16;

std::size_t chain_weight(std::initializer_list<const Groupoid*> gs) {
  std::size_t w = 1;
  for (const Groupoid* g : gs) w *= std::max<std::size_t>(1, g->num_arrows());
  return w;
}

std::string case_coherence(Rng& rng) {
  // the associativity check compares transformations over pullbacks of triple
  // composites; their size grows like the fourth power of the weight
  Groupoid g, h, k, l;
  do {
    g = fuzz::random_groupoid(rng, 2, 4, "g");
    h = target_for(rng, g, 2, 4, "h");
    k = target_for(rng, h, 2, 4, "k");
    l = target_for(rng, k, 2, 4, "l");
  } while (chain_weight({&g, &h, &k, &l}) > kChainBudget);
  const Functor phi = fuzz::random_functor(rng, g, h);
  const Functor psi = fuzz::random_functor(rng, h, k);
  const Functor chi = fuzz::random_functor(rng, k, l);
  const CoherenceReport r = anafunctisation_coherence(phi, psi, chi);
  law(r.associativity, "associativity coherence fails");
  law(r.left_unit, "left unit coherence fails");
  law(r.right_unit, "right unit coherence fails");
  const NatTrans s = fuzz::random_nat_from(rng, phi);
  validate_transformation(anafunctise_2cell(s));
  return "G=" + size_of(g) + " H=" + size_of(h) + " K=" + size_of(k) + " L=" + size_of(l);
}

// ---- bicategory -----------------------------------------------------------

BiequivariantMap after(const BiequivariantMap& a, const BiequivariantMap& b) { return vcomp_bi(a, b); }

std::string case_bicategory(Rng& rng) {
  std::vector<Groupoid> gs{fuzz::random_groupoid(rng, 2, 6, "g")};
  for (int i = 1; i < 5; ++i) gs.push_back(target_for(rng, gs.back(), 2, 6, std::string(1, static_cast<char>('g' + i))));
  std::vector<Functor> f;
  for (int i = 0; i < 4; ++i) f.push_back(fuzz::random_functor(rng, gs[i], gs[i + 1]));
  std::vector<Bibundle> x;
  for (int i = 0; i < 4; ++i)
    x.push_back(rng.coin() ? bibundlise(f[i]) : fuzz::random_right_principal(rng, gs[i], gs[i + 1]));
  const Bibundle &X = x[0], &Y = x[1], &Z = x[2], &W = x[3];
  for (const auto& b : x) validate_bibundle(b);

  // pentagon
  const Bibundle XY = tensor(X, Y), YZ = tensor(Y, Z), ZW = tensor(Z, W);
  const BiequivariantMap p1 = after(associator_bi(XY, Z, W), associator_bi(X, Y, ZW));
  const BiequivariantMap p2 =
      after(after(hcomp_bi(associator_bi(X, Y, Z), identity_map(W)), associator_bi(X, YZ, W)),
            hcomp_bi(identity_map(X), associator_bi(Y, Z, W)));
  law(p1 == p2, "pentagon");

  // triangles
  const Bibundle idH = identity_bibundle(Y.G);
  const BiequivariantMap t1 =
      after(associator_bi(X, idH, Y), hcomp_bi(identity_map(X), unitor_left_bi(Y)));
  law(t1 == hcomp_bi(unitor_right_bi(X), identity_map(Y)), "triangle (middle unit)");
  law(after(associator_bi(identity_bibundle(X.G), X, Y), unitor_left_bi(XY)) ==
          hcomp_bi(unitor_left_bi(X), identity_map(Y)),
      "triangle (left unit)");
  law(after(associator_bi(X, Y, identity_bibundle(Y.H)), hcomp_bi(identity_map(X), unitor_right_bi(Y))) ==
          unitor_right_bi(XY),
      "triangle (right unit)");

  // interchange, with maps from bibundlised natural transformations
  const NatTrans a1 = fuzz::random_nat_from(rng, f[0]);
  const NatTrans a2 = fuzz::random_nat_from(rng, a1.to);
  const NatTrans b1 = fuzz::random_nat_from(rng, f[1]);
  const NatTrans b2 = fuzz::random_nat_from(rng, b1.to);
  const BiequivariantMap A1 = bibundlise_2cell(a1), A2 = bibundlise_2cell(a2);
  const BiequivariantMap B1 = bibundlise_2cell(b1), B2 = bibundlise_2cell(b2);
  law(hcomp_bi(after(A1, A2), after(B1, B2)) == after(hcomp_bi(A1, B1), hcomp_bi(A2, B2)), "interchange");
  law(after(A1, A2) == bibundlise_2cell(vcomp(a1, a2)), "bibundlise_2cell respects vertical composition");

  // bibundlisation coherence
  const Functor &phi = f[0], &psi = f[1], &chi = f[2];
  const Bibundle Bp = bibundlise(phi), Bq = bibundlise(psi), Bc = bibundlise(chi);
  const BiequivariantMap lhs =
      after(hcomp_bi(bibundlise_composition(phi, psi), identity_map(Bc)), bibundlise_composition(psi * phi, chi));
  const BiequivariantMap rhs =
      after(after(associator_bi(Bp, Bq, Bc), hcomp_bi(identity_map(Bp), bibundlise_composition(psi, chi))),
            bibundlise_composition(phi, chi * psi));
  law(lhs == rhs, "gamma associativity");
  const Groupoid& G = phi.dom;
  law(after(hcomp_bi(bibundlise_identity(G), identity_map(Bp)),
            bibundlise_composition(identity_functor(G), phi)) == unitor_left_bi(Bp),
      "gamma left unit");
  law(after(hcomp_bi(identity_map(Bp), bibundlise_identity(phi.cod)),
            bibundlise_composition(phi, identity_functor(phi.cod))) == unitor_right_bi(Bp),
      "gamma right unit");
  std::string sizes;
  for (const auto& b : x) sizes += " " + std::to_string(b.size());
  return "points" + sizes;
}

// ---- canonical ------------------------------------------------------------

std::string case_canonical(Rng& rng) {
  const Groupoid g = fuzz::random_groupoid(rng, 3, 8, "g");
  const Groupoid h = target_for(rng, g, 3, 8, "h");
  const Anafunctor a = fuzz::random_anafunctor(rng, g, h);
  const TwoCellDiagram c = fuzz::random_two_cell(rng, a);
  const Transformation t = canonical_2cell(c);
  validate_transformation(t);
  const TwoCellDiagram tc = transformation_to_2cell(t);
  law(two_cells_equal(tc, c), "canonical transformation not identified with the input");
  law(canonical_2cell(tc) == t, "canonical_2cell not idempotent");
  const Functor mu = fuzz::random_swe_into(rng, c.mediator(), static_cast<int>(c.mediator().num_objects()) + 1, "r");
  const TwoCellDiagram c2 = reembed(c, mu);
  law(two_cells_equal(c, c2), "re-embedded diagram not identified");
  law(canonical_2cell(c2) == t, "equivalent diagrams give different transformations");
  law(two_cells_equal(c, c), "two_cells_equal not reflexive");
  return "K=" + size_of(a.apex) + " L=" + size_of(c.mediator()) + " base=" + size_of(t.base.groupoid);
}

// ---- equivalence ----------------------------------------------------------

std::string case_equivalence(Rng& rng) {
  const Groupoid g = fuzz::random_groupoid(rng, 2, 6, "g");
  const Groupoid h = target_for(rng, g, 2, 6, "h");
  const GM gm = fuzz::random_gm(rng, g, h);
  const GMBibundle r = gm_to_bibundle_full(gm);
  validate_bibundle(r.bundle);
  law(is_right_principal(r.bundle), "gm bibundle is not right principal");
  const Anafunctor ana = bibundle_to_anafunctor(r.bundle);
  validate_two_cell(r.witness);
  law(r.witness.source == gm && r.witness.target == ana, "witness has the wrong ends");

  const Bibundle b = fuzz::random_right_principal(rng, g, h);
  const BiequivariantMap iso = bibundle_roundtrip_iso(b);
  auto err = check_biequivariant(iso, true);
  law(!err, "round trip map: " + err.value_or(""));
  law(find_biequivariant_iso(iso.source, b).has_value(), "search finds no isomorphism");

  const BiequivariantMap m = twocell_to_biequiv(r.witness);
  err = check_biequivariant(m, true);
  law(!err, "2-cell to bi-equivariant map: " + err.value_or(""));
  return "K=" + size_of(gm.apex) + " points=" + std::to_string(r.bundle.size()) + "/" + std::to_string(b.size());
}

// ---- quasi-inverse --------------------------------------------------------

constexpr std::size_t kApexBudget = 8;

// Arrows of the apex quasi_inverse_ana actually works with.
std::size_t effective_apex(const Anafunctor& a) {
  if (!is_weak_equivalence(a.right) || check_subductive_weak_equivalence(a.right)) return a.apex.num_arrows();
  return subductive_replacement(a).apex.num_arrows();
}

std::string case_quasi_inverse(Rng& rng) {
  const Groupoid g = nonempty_groupoid(rng, 2, 6, "g");
  Bibundle b = rng.coin() ? fuzz::random_biprincipal(rng, g)
                          : fuzz::random_right_principal(rng, g, nonempty_groupoid(rng, 2, 6, "h"));
  const bool bi = check_principality(b).biprincipal();
  bool got = false;
  try {
    const QuasiInverseBi q = quasi_inverse_bi(b);
    got = true;
    for (const auto* m : {&q.unit, &q.counit}) {
      auto e = check_biequivariant(*m, true);
      law(!e, "quasi-inverse witness: " + e.value_or(""));
    }
    // zig-zag: X (Xbar X) -> X Id -> X equals X (Xbar X) -> (X Xbar) X -> Id X -> X
    const BiequivariantMap z1 = after(hcomp_bi(identity_map(b), q.counit), unitor_right_bi(b));
    const BiequivariantMap z2 =
        after(after(inverse_map(associator_bi(b, q.inverse, b)), hcomp_bi(q.unit, identity_map(b))),
              unitor_left_bi(b));
    law(z1 == z2, "triangle identity for the bibundle quasi-inverse");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotBiprincipal) throw;
  }
  law(got == bi, "quasi_inverse_bi success does not match biprincipality");

  // spans
  const Functor left = fuzz::random_we_into(rng, g, 2, "k");
  const bool want_we = rng.coin();
  const Functor right = want_we ? fuzz::random_we_from(rng, left.dom)
                                : fuzz::random_functor(rng, left.dom, nonempty_groupoid(rng, 2, 6, "h"));
  const GM a = make_gm(left, right);
  const bool we = is_weak_equivalence(right);
  bool span_ok = false;
  try {
    const QuasiInverseGM q = quasi_inverse_gm(a);
    span_ok = true;
    validate_nat(q.witness);
    validate_two_cell(q.unit);
    validate_two_cell(q.counit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RightLegNotWeakEquivalence) throw;
  }
  law(span_ok == we, "quasi_inverse_gm success does not match the right leg");

  // anafunctors; the triangle identities live on triple composites, so the
  // apex is kept small
  Anafunctor ana;
  do {
    const Groupoid g2 = nonempty_groupoid(rng, 2, 4, "a");
    const Functor l2 = fuzz::random_swe_into(rng, g2, 3, "k");
    const Functor r2 = rng.coin() ? fuzz::random_we_from(rng, l2.dom)
                                  : fuzz::random_functor(rng, l2.dom, nonempty_groupoid(rng, 2, 4, "h"));
    ana = make_anafunctor(l2, r2);
  } while (effective_apex(ana) > kApexBudget);
  const bool ana_we = is_weak_equivalence(ana.right);
  bool ana_ok = false;
  try {
    const QuasiInverseAna qa = quasi_inverse_ana(ana);
    ana_ok = true;
    validate_transformation(qa.unit);
    validate_transformation(qa.counit);
    law(qa.triangles_ok, "anafunctor triangle identities");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RightLegNotWeakEquivalence) throw;
  }
  law(ana_ok == ana_we, "quasi_inverse_ana success does not match the right leg");
  return "points=" + std::to_string(b.size()) + " biprincipal=" + std::to_string(bi) +
         " right_we=" + std::to_string(we) + " ana=" + size_of(ana.apex);
}

// ---- morita ---------------------------------------------------------------

// Per orbit, the sorted element orders of the stabiliser; sorted.  Differs
// between groupoids that cannot be Morita equivalent.
std::vector<std::vector<int>> order_profile(const Groupoid& g) {
  std::vector<std::vector<int>> out;
  for (Id r : orbit_space(g).rep) {
    const Group a = vertex_group(g, r);
    std::vector<int> ords;
    for (int e = 0; e < a.order(); ++e) ords.push_back(a.element_order(e));
    std::sort(ords.begin(), ords.end());
    out.push_back(ords);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string case_morita(Rng& rng, std::size_t index) {
  const Groupoid g = fuzz::random_groupoid(rng, 3, 12, "g");
  const Bibundle b = fuzz::random_biprincipal(rng, g);
  const Groupoid& h = b.H;
  law(check_principality(b).biprincipal(), "generator produced a non-biprincipal bibundle");
  law(orbit_space(g).labels.size() == orbit_space(h).labels.size(), "orbit counts differ");
  law(is_fibrating(g) == is_fibrating(h), "fibration flags differ");
  law(are_morita_equivalent(inertia_groupoid(g), inertia_groupoid(h)).equivalent, "inertia groupoids differ");
  const MoritaResult m = are_morita_equivalent(g, h);
  law(m.equivalent, "decision says not equivalent: " + m.reason);
  law(m.witness && check_principality(*m.witness).biprincipal(), "witness is not biprincipal");

  // actions transported along b and back
  const Bibundle y = bibundlise(terminal_functor(h, point_groupoid()));
  const Bibundle xy = transport_action(b, y);
  validate_bibundle(xy);
  const Bibundle back = transport_action(quasi_inverse_bi(b).inverse, xy);
  law(find_biequivariant_iso(back, y).has_value(), "transport round trip is not isomorphic");

  std::string note;
  if (index < morita_negatives().size()) {
    const NegativePair& n = morita_negatives()[index];
    const MoritaResult r = are_morita_equivalent(n.g, n.h);
    law(!r.equivalent && !r.witness, n.name + ": decided equivalent");
    law(order_profile(n.g) != order_profile(n.h), n.name + ": invariants agree");
    note = " negative " + n.name + ": " + r.reason;
  }
  return "G=" + size_of(g) + " H=" + size_of(h) + note;
}

// ---- driver ---------------------------------------------------------------

SuiteResult run_cases(const std::string& name, std::uint64_t seed, std::size_t count,
                      const std::function<std::string(Rng&, std::size_t)>& body) {
  SuiteResult r;
  r.suite = name;
  r.total = count;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(splitmix(splitmix(seed) ^ static_cast<std::uint64_t>(i)));
    std::ostringstream line;
    line << name << " " << i << " ";
    try {
      const std::string info = body(rng, i);
      ++r.passed;
      line << "ok " << info;
    } catch (const LawFailure& f) {
      line << "FAIL " << f.what;
    } catch (const Error& e) {
      line << "FAIL " << kind_name(e.kind()) << ": " << e.what();
    }
    r.lines.push_back(line.str());
  }
  return r;
}

SuiteResult run_cech() {
  SuiteResult r;
  r.suite = "cech";
  for (const char* gname : {"C2", "C3"}) {
    const Group g = gname[1] == '2' ? cyclic_group(2) : cyclic_group(3);
    const CechSweep s = cech_sweep(3, 3, g);
    r.total += s.covers;
    r.passed += s.passed;
    r.lines.push_back("cech " + std::string(gname) + " covers " + std::to_string(s.covers) + " passed " +
                      std::to_string(s.passed));
    for (const auto& f : s.failures) r.lines.push_back("cech " + std::string(gname) + " FAIL " + f);
  }
  return r;
}

Groupoid bg(const Group& g) { return one_object_groupoid(g, "*"); }

Groupoid disjoint(const Groupoid& a, const Groupoid& b) {
  // relabel b's elements with a prime to keep labels unique
  RawGroupoid ra = to_raw(a), rb = to_raw(b);
  auto p = [](const std::string& s) { return s + "'"; };
  for (auto& o : rb.objects) ra.objects.push_back(p(o));
  for (auto& x : rb.arrows) ra.arrows.push_back({p(x.id), p(x.src), p(x.trg)});
  for (auto& [o, u] : rb.units) ra.units.emplace_back(p(o), p(u));
  for (auto& [x, y] : rb.inverse) ra.inverse.emplace_back(p(x), p(y));
  for (auto& t : rb.compose) ra.compose.push_back({p(t[0]), p(t[1]), p(t[2])});
  return validate_groupoid(ra);
}

}  // namespace

std::string SuiteResult::transcript() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  out += std::to_string(passed) + "/" + std::to_string(total) + " passed\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"we",        "pullback",    "coherence",     "bicategory", "canonical",
                                                 "equivalence", "quasi-inverse", "morita", "cech"};
  return names;
}

std::size_t default_count(const std::string& suite) {
  if (suite == "we") return 500;
  if (suite == "pullback" || suite == "coherence" || suite == "bicategory") return 200;
  if (suite == "morita") return 50;
  return 100;
}

const std::vector<NegativePair>& morita_negatives() {
  static const std::vector<NegativePair> pairs = [] {
    const Group c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
    const Group v4 = direct_product(c2, c2), s3 = symmetric_group3();
    const Groupoid pt = trivial_groupoid({"*"});
    const Groupoid disc2 = trivial_groupoid({"a", "b"}), disc3 = trivial_groupoid({"a", "b", "c"});
    const Groupoid pair2 = pair_groupoid({"a", "b"}), pair3 = pair_groupoid({"a", "b", "c"});
    std::vector<NegativePair> v = {
        {"BC2 vs Pt", bg(c2), pt},
        {"Disc(2) vs Disc(3)", disc2, disc3},
        {"BC2 vs BC3", bg(c2), bg(c3)},
        {"BC4 vs B(C2xC2)", bg(c4), bg(v4)},
        {"BS3 vs BC6", bg(s3), bg(cyclic_group(6))},
        {"Pair(2) vs Disc(2)", pair2, disc2},
        {"Pt vs empty", pt, empty_groupoid()},
        {"BC2 vs Disc(2)", bg(c2), disc2},
        {"BC3 vs Pair(3)", bg(c3), pair3},
        {"B(C2xC2) vs BC2+BC2", bg(v4), disjoint(bg(c2), bg(c2))},
        {"BQ8 vs BD4", bg(quaternion_group()), bg(dihedral_group(4))},
        {"BS3 vs BC3", bg(s3), bg(c3)},
        {"BC2+Pt vs Pair(2)+Pt", disjoint(bg(c2), pt), disjoint(pair2, pt)},
        {"BC2+BC3 vs BC2+BC2", disjoint(bg(c2), bg(c3)), disjoint(bg(c2), bg(c2))},
        {"Pair(3) vs Disc(3)", pair3, disc3},
        {"BC4 vs BC2", bg(c4), bg(c2)},
        {"B(C2xC4) vs B(C2xC2xC2)", bg(direct_product(c2, c4)), bg(direct_product(v4, c2))},
        {"BS3 vs Pair(2)xBC3", bg(s3), fuzz::connected_groupoid(2, c3, "p")},
        {"Pair(2)xBC2 vs BC4", fuzz::connected_groupoid(2, c2, "p"), bg(c4)},
        {"BC1 vs empty", bg(c1), empty_groupoid()},
    };
    return v;
  }();
  return pairs;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t count) {
  auto plain = [](std::string (*f)(Rng&)) {
    return [f](Rng& r, std::size_t) { return f(r); };
  };
  if (suite == "we") return run_cases(suite, seed, count, plain(case_we));
  if (suite == "pullback") return run_cases(suite, seed, count, plain(case_pullback));
  if (suite == "coherence") return run_cases(suite, seed, count, plain(case_coherence));
  if (suite == "bicategory") return run_cases(suite, seed, count, plain(case_bicategory));
  if (suite == "canonical") return run_cases(suite, seed, count, plain(case_canonical));
  if (suite == "equivalence") return run_cases(suite, seed, count, plain(case_equivalence));
  if (suite == "quasi-inverse") return run_cases(suite, seed, count, plain(case_quasi_inverse));
  if (suite == "morita") return run_cases(suite, seed, count, case_morita);
  if (suite == "cech") return run_cech();
  fail(ErrorKind::ParseError, "unknown suite " + suite);
}

}  // namespace gloc
