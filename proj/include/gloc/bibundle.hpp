#pragma once

#include "gloc/ana.hpp"

namespace gloc {

// A G-H bibundle.  g.x is defined when src g = l(x) and lands over trg g;
// x.h is defined when trg h = r(x) and lands over src h.
struct Bibundle {
  Groupoid G, H;
  std::vector<std::string> points;
  std::vector<Id> l, r;
  std::vector<std::size_t> loff, roff;
  std::vector<Id> ltab, rtab;

  std::size_t size() const { return points.size(); }
  Id act_left(Id g, Id x) const { return ltab[loff[x] + G.out_pos(g)]; }
  Id act_right(Id x, Id h) const { return rtab[roff[x] + H.in_pos(h)]; }
  std::optional<Id> find(const std::string& label) const;
};

bool operator==(const Bibundle& a, const Bibundle& b);

// Fills the action tables from callbacks.  Does not check the axioms.
Bibundle make_bibundle(const Groupoid& g, const Groupoid& h, std::vector<std::string> points,
                       std::vector<Id> l, std::vector<Id> r,
                       const std::function<Id(Id, Id)>& left,
                       const std::function<Id(Id, Id)>& right);

std::optional<std::string> check_bibundle(const Bibundle& b);
void validate_bibundle(const Bibundle& b);  // throws ActionAxiomViolation

// A left G-action is a bibundle from G to the one-point groupoid.
Groupoid point_groupoid();
Bibundle make_left_action(const Groupoid& g, std::vector<std::string> points, std::vector<Id> anchor,
                          const std::function<Id(Id, Id)>& act);
// Objects are the points, arrows (g, x) : x -> g.x.
Groupoid left_action_groupoid(const Bibundle& a);

struct Principality {
  bool left_principal = false, right_principal = false;
  // (x, x') -> the h with x.h = x', resp. the g with g.x = x'.
  std::unordered_map<std::uint64_t, Id> right_div, left_div;
  bool biprincipal() const { return left_principal && right_principal; }
  Id rdiv(Id x, Id x2) const { return right_div.at(pair_key(x, x2)); }
  Id ldiv(Id x, Id x2) const { return left_div.at(pair_key(x, x2)); }
};
Principality check_principality(const Bibundle& b);
bool is_right_principal(const Bibundle& b);

struct BiequivariantMap {
  Bibundle source, target;
  std::vector<Id> map;
  Id operator()(Id x) const { return map[x]; }
};
bool operator==(const BiequivariantMap& a, const BiequivariantMap& b);
std::optional<std::string> check_biequivariant(const BiequivariantMap& m, bool bijective);
BiequivariantMap identity_map(const Bibundle& b);
BiequivariantMap inverse_map(const BiequivariantMap& m);  // throws NotBijective
BiequivariantMap vcomp_bi(const BiequivariantMap& a, const BiequivariantMap& b);  // b after a

Bibundle identity_bibundle(const Groupoid& g);

struct Tensor {
  Bibundle bundle;
  std::vector<std::pair<Id, Id>> pairs;     // X x_{r,l} Y
  std::vector<Id> cls;                      // pair -> orbit
  std::vector<Id> rep;                      // orbit -> least pair
  std::unordered_map<std::uint64_t, Id> index;
  Id find(Id x, Id y) const { return cls[index.at(pair_key(x, y))]; }
};
Tensor tensor_full(const Bibundle& x, const Bibundle& y);
Bibundle tensor(const Bibundle& x, const Bibundle& y);

BiequivariantMap associator_bi(const Bibundle& x, const Bibundle& y, const Bibundle& z);
BiequivariantMap unitor_left_bi(const Bibundle& x);   // Id_G (x) X -> X
BiequivariantMap unitor_right_bi(const Bibundle& x);  // X (x) Id_H -> X
BiequivariantMap hcomp_bi(const BiequivariantMap& a, const BiequivariantMap& b);

Bibundle bibundlise(const Functor& phi);  // points (x, h) with trg h = phi x
BiequivariantMap bibundlise_2cell(const NatTrans& s);
// gamma_{phi,psi} : B(phi) (x) B(psi) -> B(psi phi), [(x,h),(y,k)] -> (x, psi(h) k).
BiequivariantMap bibundlise_composition(const Functor& phi, const Functor& psi);
// iota_G : Id_G -> B(id_G), g -> (trg g, g).
BiequivariantMap bibundlise_identity(const Groupoid& g);

Bibundle opposite(const Bibundle& b);

struct QuasiInverseBi {
  Bibundle inverse;
  BiequivariantMap unit;    // X (x) Xbar -> Id_G
  BiequivariantMap counit;  // Xbar (x) X -> Id_H
};
QuasiInverseBi quasi_inverse_bi(const Bibundle& b);  // throws NotBiprincipal

// G |x X x| H: arrows ((g, h), x) : x -> g.x.h^-1.
struct ActionGroupoid {
  Groupoid groupoid;
  std::vector<std::array<Id, 3>> arrow_data;  // (g, h, x)
  TripleIndex arrows;
};
ActionGroupoid action_groupoid(const Bibundle& b);
Anafunctor bibundle_to_anafunctor(const Bibundle& b);  // throws NotRightPrincipal

struct GMBibundle {
  Bibundle bundle;
  StrictPullback ltilde;           // (G xw K) x_K (K xw H)
  WeakPullback left_w, right_w;    // G xw_{id,phi} K and K xw_{psi,id} H
  std::vector<Id> orbit;           // ltilde object -> point
  TwoCellDiagram witness;          // gm => bibundle_to_anafunctor(bundle)
};
GMBibundle gm_to_bibundle_full(const GM& gm);
Bibundle gm_to_bibundle(const GM& gm);

// gm_to_bibundle(bibundle_to_anafunctor(b)) -> b, [(x,g,w),(w,h,z)] -> g^-1.w.h^-1.
BiequivariantMap bibundle_roundtrip_iso(const Bibundle& b);

BiequivariantMap twocell_to_biequiv(const TwoCellDiagram& c);
// Between the action-groupoid anafunctors; S(x, w) is the h with w.h = m(x).
Transformation biequiv_to_transformation(const BiequivariantMap& m);

// Brute force over orbit representatives; nullopt if none exists.
std::optional<BiequivariantMap> find_biequivariant_iso(const Bibundle& a, const Bibundle& b);

}  // namespace gloc
