#pragma once

#include "gloc/fractions.hpp"

namespace gloc {

// A span whose left leg is a subductive weak equivalence.
using Anafunctor = GeneralizedMorphism;

Anafunctor make_anafunctor(Functor left, Functor right);  // throws NotAnafunctor
bool is_anafunctor(const GM& a);

// A transformation between anafunctors a = (K, phi, psi) and a' = (K', phi', psi'):
// a natural transformation psi pr1 => psi' pr2 on K x_{phi,phi'} K'.
struct Transformation {
  Anafunctor source, target;
  StrictPullback base;
  std::vector<Id> at;  // indexed by objects of base.groupoid
  Id operator()(Id y, Id y2) const { return at[base.find(y, y2)]; }
};

std::optional<std::string> check_transformation(const Transformation& t);
void validate_transformation(const Transformation& t);
bool operator==(const Transformation& a, const Transformation& b);

// Builds the base pullback and fills components from f(y, y').
Transformation make_transformation(const Anafunctor& a, const Anafunctor& b,
                                   const std::function<Id(Id, Id)>& f);

struct AnaComposite {
  Anafunctor ana;
  StrictPullback pullback;  // L x_{psi, chi} M
};
AnaComposite compose_ana_full(const Anafunctor& a, const Anafunctor& b);
Anafunctor compose_ana(const Anafunctor& a, const Anafunctor& b);

Transformation identity_transformation(const Anafunctor& a);
Transformation inverse_transformation(const Transformation& s);
Transformation vcomp_ana(const Transformation& s, const Transformation& t);  // t after s
Transformation whisker_left_ana(const Anafunctor& a, const Transformation& s);   // a then s
Transformation whisker_right_ana(const Transformation& s, const Anafunctor& b);  // s then b
Transformation hcomp_ana(const Transformation& s, const Transformation& t);
Transformation unitor_left_ana(const Anafunctor& a);   // id o a => a
Transformation unitor_right_ana(const Anafunctor& a);  // a o id => a
Transformation associator_ana(const Anafunctor& a, const Anafunctor& b, const Anafunctor& c);

// Anafunctisation: G <-pr1- G xw_{phi,id} H -pr3-> H.
Anafunctor anafunctise(const Functor& phi);
Transformation anafunctise_2cell(const NatTrans& s);
// ID_G : identity anafunctor of G => anafunctise(id_G).
Transformation anafunctise_identity(const Groupoid& g);
// C_{phi,psi} : anafunctise(phi) o anafunctise(psi) => anafunctise(psi phi).
Transformation anafunctise_composition(const Functor& phi, const Functor& psi);

struct CoherenceReport {
  bool associativity = false, left_unit = false, right_unit = false;
  bool ok() const { return associativity && left_unit && right_unit; }
};
// phi : G -> H, psi : H -> K, chi : K -> L.
CoherenceReport anafunctisation_coherence(const Functor& phi, const Functor& psi, const Functor& chi);

// The diagram with mediator K x_G K', S1 = id, S2 = t.
TwoCellDiagram transformation_to_2cell(const Transformation& t);
Transformation canonical_2cell(const TwoCellDiagram& c);

// G <-pr1- G xw_{id,phi} K -psi pr3-> H together with the comparison gm => ana.
struct AnafunctisedGM {
  Anafunctor ana;
  TwoCellDiagram comparison;
};
AnafunctisedGM anafunctise_gm(const GM& gm);
// canonical_2cell for diagrams whose ends are only generalized morphisms: both
// ends are replaced by anafunctise_gm first.
Transformation canonical_2cell_gm(const TwoCellDiagram& c);

struct QuasiInverseAna {
  Anafunctor input;    // the anafunctor actually inverted (canonicalised if needed)
  Anafunctor inverse;
  Transformation unit;    // id_G => input o inverse
  Transformation counit;  // inverse o input => id_H
  bool triangles_ok = false;
};
QuasiInverseAna quasi_inverse_ana(const Anafunctor& a);

// Replace a span with a weak-equivalence right leg by one whose legs are
// both subductive: K xw_{psi,id} H with legs phi pr1 and pr3.
Anafunctor subductive_replacement(const Anafunctor& a);

}  // namespace gloc
