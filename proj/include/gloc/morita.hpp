#pragma once

#include "gloc/bibundle.hpp"
#include "gloc/group.hpp"

namespace gloc {

struct OrbitSpace {
  std::vector<std::string> labels;  // "[least object label]"
  std::vector<Id> proj;             // object -> class
  std::vector<Id> rep;              // class -> least object
};
OrbitSpace orbit_space(const Groupoid& g);

bool is_fibrating(const Groupoid& g);

struct KernelGroupoid {
  Groupoid groupoid;
  Functor inclusion;
};
KernelGroupoid kernel_groupoid(const Groupoid& g);

// Objects are the stabiliser arrows k, arrows (g, k) : k -> g k g^-1.
Groupoid inertia_groupoid(const Groupoid& g);
Functor inertia_functor(const Functor& phi, const Groupoid& ig, const Groupoid& ih);

struct Skeleton {
  std::vector<Id> reps;      // one object per orbit
  std::vector<Group> autos;  // vertex group at each representative
};
Skeleton skeleton(const Groupoid& g);

struct MoritaResult {
  bool equivalent = false;
  std::string reason;                // distinguishing invariant when not equivalent
  std::optional<Bibundle> witness;   // biprincipal when present
};
MoritaResult are_morita_equivalent(const Groupoid& g, const Groupoid& h);

struct InertiaSpan {
  Groupoid apex;  // inertia groupoid of G xw_{phi,id} H
  Functor psi, omega;
};
InertiaSpan inertia_span(const Functor& phi);  // throws NotWeakEquivalence

// Orbit count and sorted stabiliser orders of a left action (a bibundle to Pt).
struct ActionInvariants {
  std::size_t orbits = 0;
  std::vector<std::size_t> stabilisers;
  bool operator==(const ActionInvariants&) const = default;
};
ActionInvariants action_invariants(const Bibundle& a);

// X (x)_H Y for a biprincipal X : G -> H and a left H-action Y.
Bibundle transport_action(const Bibundle& b, const Bibundle& y);

}  // namespace gloc
