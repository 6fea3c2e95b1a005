#pragma once
// Brute-force reference implementations.  They only use labels, src/trg and
// comp on explicit arrows, never the hom tables or the library's searches.

#include <algorithm>
#include <numeric>
#include <set>

#include "gloc/bibundle.hpp"
#include "gloc/cech.hpp"
#include "gloc/group.hpp"

namespace oracle {

using namespace gloc;

inline std::vector<Id> arrows_between(const Groupoid& g, Id a, Id b) {
  std::vector<Id> out;
  for (std::size_t e = 0; e < g.num_arrows(); ++e)
    if (g.src(e) == a && g.trg(e) == b) out.push_back(static_cast<Id>(e));
  return out;
}

// Every unit, inverse and associativity instance.
inline bool groupoid_axioms(const Groupoid& g) {
  const Id n = static_cast<Id>(g.num_arrows());
  for (Id f = 0; f < n; ++f) {
    if (g.comp(g.unit(g.trg(f)), f) != f || g.comp(f, g.unit(g.src(f))) != f) return false;
    if (g.comp(g.inv(f), f) != g.unit(g.src(f))) return false;
    for (Id h = 0; h < n; ++h) {
      if (g.src(h) != g.trg(f)) continue;
      const Id hf = g.comp(h, f);
      if (g.src(hf) != g.src(f) || g.trg(hf) != g.trg(h)) return false;
      for (Id k = 0; k < n; ++k)
        if (g.src(k) == g.trg(h) && g.comp(k, hf) != g.comp(g.comp(k, h), f)) return false;
    }
  }
  return true;
}

inline bool functor_axioms(const Functor& f) {
  const Groupoid &G = f.dom, &H = f.cod;
  for (std::size_t x = 0; x < G.num_objects(); ++x)
    if (f.ar(G.unit(x)) != H.unit(f.ob(x))) return false;
  for (Id a = 0; a < static_cast<Id>(G.num_arrows()); ++a) {
    if (H.src(f.ar(a)) != f.ob(G.src(a)) || H.trg(f.ar(a)) != f.ob(G.trg(a))) return false;
    for (Id b = 0; b < static_cast<Id>(G.num_arrows()); ++b)
      if (G.src(b) == G.trg(a) && f.ar(G.comp(b, a)) != H.comp(f.ar(b), f.ar(a))) return false;
  }
  return true;
}

struct WE {
  bool essentially_surjective, fully_faithful;
};

// Essential surjectivity by scanning all arrows; full faithfulness by
// comparing hom-set images as sets.
inline WE weak_equivalence(const Functor& f) {
  const Groupoid &G = f.dom, &H = f.cod;
  WE r{true, true};
  for (std::size_t y = 0; y < H.num_objects() && r.essentially_surjective; ++y) {
    bool hit = false;
    for (std::size_t e = 0; e < H.num_arrows() && !hit; ++e)
      if (H.src(e) == static_cast<Id>(y))
        for (std::size_t x = 0; x < G.num_objects() && !hit; ++x) hit = H.trg(e) == f.ob(x);
    r.essentially_surjective = hit;
  }
  for (std::size_t x1 = 0; x1 < G.num_objects() && r.fully_faithful; ++x1)
    for (std::size_t x2 = 0; x2 < G.num_objects() && r.fully_faithful; ++x2) {
      std::set<Id> image;
      const auto src_arrows = arrows_between(G, x1, x2);
      for (Id a : src_arrows) image.insert(f.ar(a));
      const auto tgt = arrows_between(H, f.ob(x1), f.ob(x2));
      r.fully_faithful = image.size() == src_arrows.size() && image == std::set<Id>(tgt.begin(), tgt.end());
    }
  return r;
}

inline bool equivariant(const Bibundle& a, const Bibundle& b, const std::vector<Id>& m) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Id xi = static_cast<Id>(x);
    if (b.l[m[x]] != a.l[x] || b.r[m[x]] != a.r[x]) return false;
    for (std::size_t g = 0; g < a.G.num_arrows(); ++g)
      if (a.G.src(g) == a.l[x] && m[a.act_left(g, xi)] != b.act_left(g, m[x])) return false;
    for (std::size_t h = 0; h < a.H.num_arrows(); ++h)
      if (a.H.trg(h) == a.r[x] && m[a.act_right(xi, h)] != b.act_right(m[x], h)) return false;
  }
  return true;
}

// Every bijection a -> b.
inline bool biequivariant_iso_exists(const Bibundle& a, const Bibundle& b) {
  if (a.size() != b.size()) return false;
  std::vector<Id> m(a.size());
  std::iota(m.begin(), m.end(), 0);
  do {
    if (equivariant(a, b, m)) return true;
  } while (std::next_permutation(m.begin(), m.end()));
  return false;
}

inline bool group_iso_exists(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> m(a.order());
  std::iota(m.begin(), m.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.order() && ok; ++x)
      for (int y = 0; y < a.order() && ok; ++y) ok = m[a.op(x, y)] == b.op(m[x], m[y]);
    if (ok) return true;
  } while (std::next_permutation(m.begin(), m.end()));
  return false;
}

// All G-valued assignments on nebula arrows satisfying f(h g) = f(h) f(g).
inline std::vector<Cocycle> cocycles(const Groupoid& n, const Group& g) {
  const std::size_t m = n.num_arrows();
  std::vector<Cocycle> out;
  Cocycle f(m, 0);
  for (;;) {
    bool ok = true;
    for (Id a = 0; a < static_cast<Id>(m) && ok; ++a)
      for (Id b = 0; b < static_cast<Id>(m) && ok; ++b)
        if (n.src(b) == n.trg(a)) ok = f[n.comp(b, a)] == g.op(f[b], f[a]);
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < m && ++f[i] == g.order()) f[i++] = 0;
    if (i == m) break;
  }
  return out;
}

// Hom(f1, f2) in the cocycle category: cochains a with a(v) f1(e) = f2(e) a(u).
inline std::size_t cocycle_homs(const Groupoid& n, const Group& g, const Cocycle& f1, const Cocycle& f2) {
  const std::size_t k = n.num_objects();
  std::size_t count = 0;
  Cochain a(k, 0);
  for (;;) {
    bool ok = true;
    for (Id e = 0; e < static_cast<Id>(n.num_arrows()) && ok; ++e)
      ok = g.op(a[n.trg(e)], f1[e]) == g.op(f2[e], a[n.src(e)]);
    count += ok;
    std::size_t i = 0;
    while (i < k && ++a[i] == g.order()) a[i++] = 0;
    if (i == k) break;
  }
  return count;
}

}  // namespace oracle
