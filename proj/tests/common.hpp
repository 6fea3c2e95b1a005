#pragma once

#include <doctest.h>

#include "gloc/bibundle.hpp"
#include "gloc/group.hpp"

namespace t {

using namespace gloc;

inline Groupoid pt() { return trivial_groupoid({"pt"}); }
inline Groupoid pair2() { return pair_groupoid({"0", "1"}); }
inline Groupoid disc(int n) {
  std::vector<std::string> p;
  for (int i = 0; i < n; ++i) p.push_back("d" + std::to_string(i));
  return trivial_groupoid(p);
}
inline Groupoid bc(int n) { return one_object_groupoid(cyclic_group(n)); }

inline Id arrow(const Groupoid& g, const std::string& s) { return g.find_arrow(s).value(); }
inline Id object(const Groupoid& g, const std::string& s) { return g.find_object(s).value(); }

inline Functor bang(const Groupoid& g) { return terminal_functor(g, pt()); }
// Pt -> g at object x.
inline Functor point_at(const Groupoid& g, Id x) { return make_functor(pt(), g, {x}, {g.unit(x)}); }

}  // namespace t
