#pragma once

#include "gloc/group.hpp"

namespace gloc {

struct Chart {
  std::string name;
  std::vector<std::string> points;
  std::vector<Id> map;  // into the base
};

struct Cover {
  std::vector<std::string> base;
  std::vector<Chart> charts;
};

// Charts U1, U2, ... given as subsets of the base.
Cover subset_cover(const std::vector<std::string>& base, const std::vector<std::vector<Id>>& subsets);
void validate_cover(const Cover& c);  // throws NotCovering

struct Nebula {
  Groupoid groupoid;  // objects "(U,u)", one arrow per pair with equal evaluation
  Groupoid base;      // trivial groupoid on the base
  Functor ev;
  std::vector<Id> root;  // base point -> least nebula object over it
};
Nebula nebulaic_groupoid(const Cover& c);

using Cochain = std::vector<int>;  // value per nebula object
using Cocycle = std::vector<int>;  // value per nebula arrow

struct CocycleCategory {
  Group group;
  Nebula nebula;
  std::vector<Cocycle> cocycles;

  // (delta a)(u -> v) = a(v) a(u)^-1
  Cocycle coboundary(const Cochain& a) const;
  bool is_cocycle(const Cocycle& f) const;
  // Hom(f1, f2) = { a : delta a = f2 f1^-1 }.
  std::vector<Cochain> homs(const Cocycle& f1, const Cocycle& f2) const;
};
CocycleCategory cocycle_category(const Cover& c, const Group& g);  // throws GroupNotAbelian

// Right principal G-bundles over the discrete base with carrier X x G:
// one regular right action of G on each fibre.
struct BundleCategory {
  Group group;
  std::vector<std::string> base;
  std::vector<std::vector<int>> actions;      // regular action tables a.b, |G| x |G|
  std::vector<std::vector<int>> bundles;      // bundle -> action index per fibre
  // Equivariant bijections of one fibre, as tables.
  std::vector<std::vector<int>> fibre_homs(int action1, int action2) const;
  std::size_t count_homs(std::size_t b1, std::size_t b2) const;
  std::optional<std::size_t> find(const std::vector<int>& fibre_actions) const;
};
BundleCategory bundle_category(const std::vector<std::string>& base, const Group& g);

struct CechReport {
  std::size_t cocycles = 0, cocycle_classes = 0, cocycle_aut = 0;
  std::size_t bundles = 0, bundle_classes = 0, bundle_aut = 0;
  bool functorial = false, essentially_surjective = false, fully_faithful = false;
  bool all_pairs = false;  // full faithfulness checked on every pair of objects
  bool ok() const { return functorial && essentially_surjective && fully_faithful; }
};
CechReport cech_equivalence_check(const Cover& c, const Group& g);

struct CechSweep {
  std::size_t covers = 0, passed = 0;
  std::vector<std::string> failures;
};
// Every cover of a base with at most max_points points by at most max_charts
// nonempty subsets.
CechSweep cech_sweep(int max_points, int max_charts, const Group& g);

}  // namespace gloc
