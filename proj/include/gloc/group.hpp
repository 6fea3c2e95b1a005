#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gloc/core.hpp"

namespace gloc {

// A finite group given by its multiplication table.
struct Group {
  std::vector<std::string> names;
  std::vector<int> mul;  // mul[a * n + b] = a b
  std::vector<int> inv;
  int e = 0;

  int order() const { return static_cast<int>(names.size()); }
  int op(int a, int b) const { return mul[a * order() + b]; }
  int element_order(int a) const;
  bool abelian() const;
};

Group cyclic_group(int n);
Group direct_product(const Group& a, const Group& b);
Group symmetric_group3();
Group quaternion_group();
Group dihedral_group(int n);  // order 2n
std::optional<std::string> check_group(const Group& g);

// The one-object groupoid BG; its arrows carry the element names.
Groupoid one_object_groupoid(const Group& g, const std::string& object = "*");
// Aut(x) as a group, elements in hom(x, x) order.
Group vertex_group(const Groupoid& g, Id x);

// Isomorphism search with pruning by element orders.  Throws GroupTooLarge
// past 64 elements.  Returns the image of each element of a.
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);
bool isomorphic(const Group& a, const Group& b);

// All homomorphisms a -> b (brute force over images of a generating set).
std::vector<std::vector<int>> homomorphisms(const Group& a, const Group& b);
std::vector<int> generators(const Group& g);

// "trivial", "C2", "C2xC2", "S3", "D4", "Q8", or "group of order n".
std::string group_name(const Group& g);

}  // namespace gloc
