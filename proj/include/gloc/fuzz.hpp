#pragma once

#include <cstdint>
#include <random>

#include "gloc/bibundle.hpp"
#include "gloc/group.hpp"

namespace gloc::fuzz {

// Seeded generator.  below() avoids std distributions so streams match
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n);
  bool coin() { return (next() >> 63) != 0; }
  bool chance(int num, int den) { return below(static_cast<std::size_t>(den)) < static_cast<std::size_t>(num); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 eng_;
};

// Groups used by the fuzzer: trivial, C2, C3, C4, C2xC2, S3.
Group random_group(Rng& rng, int max_order = 6);

// A groupoid with at most max_objects objects and max_arrows arrows, built
// from connected components Pair(n) x BG.  Object labels carry the prefix.
Groupoid random_groupoid(Rng& rng, int max_objects = 4, int max_arrows = 20, const std::string& prefix = "x");
Groupoid connected_groupoid(int n, const Group& g, const std::string& prefix);

Functor random_functor(Rng& rng, const Groupoid& g, const Groupoid& h);
// A weak equivalence into h (a base change along a component-surjective map).
Functor random_we_into(Rng& rng, const Groupoid& h, int max_objects = 4, const std::string& prefix = "w");
// A weak equivalence out of g (onto a skeleton-like quotient or into a base change).
Functor random_we_from(Rng& rng, const Groupoid& g);
// A subductive weak equivalence into h.
Functor random_swe_into(Rng& rng, const Groupoid& h, int max_objects = 5, const std::string& prefix = "s");
// Random components c_x : f(x) -> ?, returns S : f => f'.
NatTrans random_nat_from(Rng& rng, const Functor& f);

GM random_gm(Rng& rng, const Groupoid& g, const Groupoid& h);
Anafunctor random_anafunctor(Rng& rng, const Groupoid& g, const Groupoid& h);
// A diagram between a and a second anafunctor built from a by a random
// re-presentation; the two ends are 2-isomorphic.
TwoCellDiagram random_two_cell(Rng& rng, const Anafunctor& a);

Bibundle random_right_principal(Rng& rng, const Groupoid& g, const Groupoid& h);
Bibundle random_biprincipal(Rng& rng, const Groupoid& g);

}  // namespace gloc::fuzz
