#pragma once

#include "gloc/core.hpp"

namespace gloc {

// A span G <-left- K -right-> H with left a weak equivalence.
struct GeneralizedMorphism {
  Groupoid apex;
  Functor left, right;

  const Groupoid& source() const { return left.cod; }
  const Groupoid& target() const { return right.cod; }
};
using GM = GeneralizedMorphism;

bool operator==(const GM& a, const GM& b);

// Checks that left is a weak equivalence (throws NotWeakEquivalence).
GM make_gm(Functor left, Functor right);
// Same, without the check; for spans whose left leg is only known to be a
// functor (used by the quasi-inverse characterisation).
GM make_span(Functor left, Functor right);

// A diagram K <-alpha- L -alpha'-> K' between spans A = (K, phi, psi) and
// A' = (K', phi', psi') with S1 : phi alpha => phi' alpha' and
// S2 : psi alpha => psi' alpha'.
struct TwoCellDiagram {
  GM source, target;
  Functor alpha, alpha_p;
  NatTrans s1, s2;
  const Groupoid& mediator() const { return alpha.dom; }
};

std::optional<std::string> check_two_cell(const TwoCellDiagram& c);
void validate_two_cell(const TwoCellDiagram& c);

GM identity_gm(const Groupoid& g);
GM spanise(const Functor& phi);
TwoCellDiagram spanise_2cell(const NatTrans& t);
TwoCellDiagram identity_two_cell(const GM& a);
TwoCellDiagram inverse_two_cell(const TwoCellDiagram& c);

// a : G -> H then b : H -> K.  Apex L xw_{psi, phi'} M.
struct GMComposite {
  GM gm;
  WeakPullback pullback;
};
GMComposite compose_gm_full(const GM& a, const GM& b);
GM compose_gm(const GM& a, const GM& b);

TwoCellDiagram vcomp_gm(const TwoCellDiagram& c1, const TwoCellDiagram& c2);
TwoCellDiagram whisker_left_gm(const GM& a, const TwoCellDiagram& c);   // a then c
TwoCellDiagram whisker_right_gm(const TwoCellDiagram& c, const GM& b);  // c then b
TwoCellDiagram hcomp_gm(const TwoCellDiagram& c1, const TwoCellDiagram& c2);
TwoCellDiagram unitor_left_gm(const GM& a);   // id o a => a
TwoCellDiagram unitor_right_gm(const GM& a);  // a o id => a
// (a b) c => a (b c), the triple regrouping.
TwoCellDiagram associator_gm(const GM& a, const GM& b, const GM& c);

// Re-embed a diagram along mu : M -> L (a weak equivalence); the result is
// equivalent to c by definition of the equivalence relation.
TwoCellDiagram reembed(const TwoCellDiagram& c, const Functor& mu);

struct QuasiInverseGM {
  GM inverse;
  // S(y1, h, y2) = phi(Phi_psi^-1(y1, y2, h)) on K xw_{psi,psi} K.
  NatTrans witness;
  TwoCellDiagram unit;    // id_G => a o a^-1
  TwoCellDiagram counit;  // a^-1 o a => id_H
};
QuasiInverseGM quasi_inverse_gm(const GM& a);

// Canonical form of a diagram: U on the objects (y, g, y') of K xw_{phi,phi'} K'
// with U(y, g, y') : psi y -> psi' y'.  Two diagrams between the same spans
// are equivalent iff their canonical forms agree.
struct CanonicalForm {
  std::vector<std::array<Id, 3>> objects;
  TripleIndex index;
  std::vector<Id> u;
  Id at(Id y, Id g, Id y2) const { return u[index.at({y, g, y2})]; }
};
CanonicalForm canonical_form(const TwoCellDiagram& c);

bool two_cells_equal(const TwoCellDiagram& c1, const TwoCellDiagram& c2);

}  // namespace gloc
