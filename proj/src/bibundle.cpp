#include "gloc/bibundle.hpp"

#include <algorithm>
#include <numeric>

namespace gloc {

namespace {

struct UnionFind {
  std::vector<Id> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Id find(Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Classes of a union-find numbered by first appearance, with "[least label]"
// labels and the index of the least member.
struct Quotient {
  std::vector<Id> cls, rep;
  std::vector<std::string> labels;
};

Quotient quotient(UnionFind& uf, const std::vector<std::string>& member_labels) {
  const std::size_t n = member_labels.size();
  Quotient q;
  q.cls.assign(n, kNone);
  std::vector<Id> root_cls(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const Id r = uf.find(static_cast<Id>(i));
    if (root_cls[r] == kNone) {
      root_cls[r] = static_cast<Id>(q.rep.size());
      q.rep.push_back(static_cast<Id>(i));
    }
    const Id c = root_cls[r];
    q.cls[i] = c;
    if (member_labels[i] < member_labels[q.rep[c]]) q.rep[c] = static_cast<Id>(i);
  }
  for (Id r : q.rep) q.labels.push_back("[" + member_labels[r] + "]");
  return q;
}

// Anafunctor on the action groupoid, without the principality check.
Anafunctor action_anafunctor(const Bibundle& b) {
  ActionGroupoid a = action_groupoid(b);
  const Groupoid& A = a.groupoid;
  Functor lh{A, b.G, b.l, std::vector<Id>(A.num_arrows())};
  Functor rh{A, b.H, b.r, std::vector<Id>(A.num_arrows())};
  for (std::size_t e = 0; e < A.num_arrows(); ++e) {
    lh.arr[e] = a.arrow_data[e][0];
    rh.arr[e] = a.arrow_data[e][1];
  }
  return Anafunctor{A, std::move(lh), std::move(rh)};
}

// Right half of the principality check, filling the division table.
bool right_principal_part(const Bibundle& b, std::unordered_map<std::uint64_t, Id>& div) {
  std::vector<std::size_t> fibre(b.G.num_objects(), 0);
  for (Id v : b.l) ++fibre[v];
  bool ok = std::find(fibre.begin(), fibre.end(), 0u) == fibre.end();
  std::size_t expected = 0;
  for (Id v : b.l) expected += fibre[v];
  div.clear();
  div.reserve(expected);
  for (std::size_t x = 0; x < b.size(); ++x) {
    const Id rx = b.r[x];
    for (std::size_t p = 0; p < b.H.out_degree(rx); ++p) {
      const Id h = b.H.in_arrow(rx, p);
      const Id y = b.act_right(static_cast<Id>(x), h);
      if (!div.emplace(pair_key(static_cast<Id>(x), y), h).second) ok = false;
    }
  }
  return ok && div.size() == expected;
}

struct BibundlisationIndex {
  std::vector<std::pair<Id, Id>> decode;
  std::vector<std::size_t> offset;  // per object of G
  Id find(const Groupoid& H, Id x, Id h) const { return static_cast<Id>(offset[x] + H.in_pos(h)); }
};

BibundlisationIndex bibundlisation_index(const Functor& phi) {
  BibundlisationIndex ix;
  const Groupoid& G = phi.dom;
  const Groupoid& H = phi.cod;
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    ix.offset.push_back(ix.decode.size());
    const Id px = phi.obj[x];
    for (std::size_t p = 0; p < H.out_degree(px); ++p)
      ix.decode.emplace_back(static_cast<Id>(x), H.in_arrow(px, p));
  }
  return ix;
}

// Builds a map class by class: value(member) must agree within each class.
std::vector<Id> descend(const std::vector<Id>& cls, std::size_t classes,
                        const std::function<Id(std::size_t)>& value, const char* what) {
  std::vector<Id> out(classes, kNone);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const Id v = value(i);
    Id& slot = out[cls[i]];
    if (slot == kNone) slot = v;
    require(slot == v, what);
  }
  return out;
}

}  // namespace

std::optional<Id> Bibundle::find(const std::string& label) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == label) return static_cast<Id>(i);
  return std::nullopt;
}

bool operator==(const Bibundle& a, const Bibundle& b) {
  return a.points == b.points && a.l == b.l && a.r == b.r && a.ltab == b.ltab && a.rtab == b.rtab &&
         a.G == b.G && a.H == b.H;
}

Bibundle make_bibundle(const Groupoid& g, const Groupoid& h, std::vector<std::string> points,
                       std::vector<Id> l, std::vector<Id> r,
                       const std::function<Id(Id, Id)>& left,
                       const std::function<Id(Id, Id)>& right) {
  Bibundle b{g, h, std::move(points), std::move(l), std::move(r), {}, {}, {}, {}};
  const std::size_t n = b.points.size();
  if (b.l.size() != n || b.r.size() != n) fail(ErrorKind::ActionAxiomViolation, "anchor size mismatch");
  std::size_t lt = 0, rt = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (b.l[x] < 0 || static_cast<std::size_t>(b.l[x]) >= g.num_objects() || b.r[x] < 0 ||
        static_cast<std::size_t>(b.r[x]) >= h.num_objects())
      fail(ErrorKind::ActionAxiomViolation, "anchor of " + b.points[x] + " out of range");
    b.loff.push_back(lt);
    b.roff.push_back(rt);
    lt += g.out_degree(b.l[x]);
    rt += h.out_degree(b.r[x]);
  }
  check_size(lt + rt, "bibundle action tables");
  b.ltab.resize(lt);
  b.rtab.resize(rt);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < g.out_degree(b.l[x]); ++p)
      b.ltab[b.loff[x] + p] = left(g.out_arrow(b.l[x], p), static_cast<Id>(x));
    for (std::size_t p = 0; p < h.out_degree(b.r[x]); ++p)
      b.rtab[b.roff[x] + p] = right(static_cast<Id>(x), h.in_arrow(b.r[x], p));
  }
  return b;
}

std::optional<std::string> check_bibundle(const Bibundle& b) {
  const Groupoid& G = b.G;
  const Groupoid& H = b.H;
  const Id n = static_cast<Id>(b.size());
  auto bad = [&](Id y) { return y < 0 || y >= n; };
  for (Id x = 0; x < n; ++x) {
    const std::string& px = b.points[x];
    const Id lx = b.l[x], rx = b.r[x];
    if (b.act_left(G.unit(lx), x) != x) return "left unit does not fix " + px;
    if (b.act_right(x, H.unit(rx)) != x) return "right unit does not fix " + px;
    for (std::size_t p = 0; p < G.out_degree(lx); ++p) {
      const Id g = G.out_arrow(lx, p);
      const Id y = b.act_left(g, x);
      if (bad(y)) return "left action undefined at " + px;
      if (b.l[y] != G.trg(g)) return "left anchor not compatible at " + px;
      if (b.r[y] != rx) return "right anchor not left invariant at " + px;
      for (std::size_t q = 0; q < G.out_degree(G.trg(g)); ++q) {
        const Id g2 = G.out_arrow(G.trg(g), q);
        if (b.act_left(g2, y) != b.act_left(G.comp(g2, g), x))
          return "left action not associative at " + px;
      }
      for (std::size_t q = 0; q < H.out_degree(rx); ++q) {
        const Id h = H.in_arrow(rx, q);
        const Id xh = b.act_right(x, h);
        if (bad(xh)) return "right action undefined at " + px;
        if (b.act_right(y, h) != b.act_left(g, xh)) return "actions do not commute at " + px;
      }
    }
    for (std::size_t p = 0; p < H.out_degree(rx); ++p) {
      const Id h = H.in_arrow(rx, p);
      const Id y = b.act_right(x, h);
      if (bad(y)) return "right action undefined at " + px;
      if (b.r[y] != H.src(h)) return "right anchor not compatible at " + px;
      if (b.l[y] != lx) return "left anchor not right invariant at " + px;
      for (std::size_t q = 0; q < H.out_degree(H.src(h)); ++q) {
        const Id h2 = H.in_arrow(H.src(h), q);
        if (b.act_right(y, h2) != b.act_right(x, H.comp(h, h2)))
          return "right action not associative at " + px;
      }
    }
  }
  return std::nullopt;
}

void validate_bibundle(const Bibundle& b) {
  if (auto e = check_bibundle(b)) fail(ErrorKind::ActionAxiomViolation, *e);
}

Groupoid point_groupoid() { return trivial_groupoid({"*"}); }

Bibundle make_left_action(const Groupoid& g, std::vector<std::string> points, std::vector<Id> anchor,
                          const std::function<Id(Id, Id)>& act) {
  std::vector<Id> r(points.size(), 0);
  return make_bibundle(g, point_groupoid(), std::move(points), std::move(anchor), std::move(r), act,
                       [](Id x, Id) { return x; });
}

Groupoid left_action_groupoid(const Bibundle& a) {
  const Groupoid& G = a.G;
  GroupoidBuilder gb;
  for (const auto& p : a.points) gb.add_object(p);
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    off.push_back(total);
    total += G.out_degree(a.l[x]);
  }
  check_size(total, "action groupoid");
  std::vector<std::pair<Id, Id>> data;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t p = 0; p < G.out_degree(a.l[x]); ++p) {
      const Id g = G.out_arrow(a.l[x], p);
      gb.add_arrow(tuple_label({G.arrow_label(g), a.points[x]}), static_cast<Id>(x), a.act_left(g, static_cast<Id>(x)));
      data.emplace_back(g, static_cast<Id>(x));
    }
  auto find = [&](Id g, Id x) { return static_cast<Id>(off[x] + G.out_pos(g)); };
  return gb.finish(
      [&](Id e2, Id e1) { return find(G.comp(data[e2].first, data[e1].first), data[e1].second); },
      [&](Id e) { return find(G.inv(data[e].first), a.act_left(data[e].first, data[e].second)); },
      [&](Id x) { return find(G.unit(a.l[x]), x); });
}

Principality check_principality(const Bibundle& b) {
  Principality p;
  p.right_principal = right_principal_part(b, p.right_div);
  std::unordered_map<std::uint64_t, Id> op_div;
  p.left_principal = right_principal_part(opposite(b), op_div);
  // In the opposite, x'.g = g^-1 x' = x  iff  g x = x'.
  p.left_div.reserve(op_div.size());
  for (const auto& [k, g] : op_div) {
    const Id a = static_cast<Id>(k >> 32), c = static_cast<Id>(k & 0xffffffffu);
    p.left_div.emplace(pair_key(c, a), g);
  }
  return p;
}

bool is_right_principal(const Bibundle& b) {
  std::unordered_map<std::uint64_t, Id> div;
  return right_principal_part(b, div);
}

bool operator==(const BiequivariantMap& a, const BiequivariantMap& b) {
  return a.map == b.map && a.source == b.source && a.target == b.target;
}

std::optional<std::string> check_biequivariant(const BiequivariantMap& m, bool bijective) {
  const Bibundle& X = m.source;
  const Bibundle& Y = m.target;
  if (!(X.G == Y.G) || !(X.H == Y.H)) return std::string("bibundles have different ends");
  if (m.map.size() != X.size()) return std::string("map has the wrong size");
  for (std::size_t x = 0; x < X.size(); ++x) {
    const Id y = m.map[x];
    const Id xi = static_cast<Id>(x);
    if (y < 0 || static_cast<std::size_t>(y) >= Y.size()) return "map undefined at " + X.points[x];
    if (Y.l[y] != X.l[x] || Y.r[y] != X.r[x]) return "anchors not preserved at " + X.points[x];
    for (std::size_t p = 0; p < X.G.out_degree(X.l[x]); ++p) {
      const Id g = X.G.out_arrow(X.l[x], p);
      if (m.map[X.act_left(g, xi)] != Y.act_left(g, y)) return "not left equivariant at " + X.points[x];
    }
    for (std::size_t p = 0; p < X.H.out_degree(X.r[x]); ++p) {
      const Id h = X.H.in_arrow(X.r[x], p);
      if (m.map[X.act_right(xi, h)] != Y.act_right(y, h)) return "not right equivariant at " + X.points[x];
    }
  }
  if (bijective) {
    if (X.size() != Y.size()) return std::string("not bijective: sizes differ");
    std::vector<char> hit(Y.size(), 0);
    for (Id y : m.map) {
      if (hit[y]) return "not injective at " + Y.points[y];
      hit[y] = 1;
    }
  }
  return std::nullopt;
}

BiequivariantMap identity_map(const Bibundle& b) {
  std::vector<Id> m(b.size());
  std::iota(m.begin(), m.end(), 0);
  return BiequivariantMap{b, b, std::move(m)};
}

BiequivariantMap inverse_map(const BiequivariantMap& m) {
  if (m.source.size() != m.target.size()) fail(ErrorKind::NotBijective, "map between sets of different size");
  std::vector<Id> inv(m.target.size(), kNone);
  for (std::size_t x = 0; x < m.map.size(); ++x) {
    if (inv[m.map[x]] != kNone) fail(ErrorKind::NotBijective, "map is not injective");
    inv[m.map[x]] = static_cast<Id>(x);
  }
  return BiequivariantMap{m.target, m.source, std::move(inv)};
}

BiequivariantMap vcomp_bi(const BiequivariantMap& a, const BiequivariantMap& b) {
  if (!(a.target == b.source)) fail(ErrorKind::BoundaryMismatch, "vertical composition: bibundles differ");
  std::vector<Id> m(a.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = b.map[a.map[x]];
  return BiequivariantMap{a.source, b.target, std::move(m)};
}

Bibundle identity_bibundle(const Groupoid& g) {
  std::vector<Id> l(g.num_arrows()), r(g.num_arrows());
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    l[a] = g.trg(static_cast<Id>(a));
    r[a] = g.src(static_cast<Id>(a));
  }
  return make_bibundle(g, g, g.arrow_labels(), std::move(l), std::move(r),
                       [&](Id f, Id a) { return g.comp(f, a); }, [&](Id a, Id h) { return g.comp(a, h); });
}

Tensor tensor_full(const Bibundle& x, const Bibundle& y) {
  if (!(x.H == y.G)) fail(ErrorKind::BoundaryMismatch, "tensor: middle groupoids differ");
  const Groupoid& H = x.H;
  std::vector<std::vector<Id>> over(H.num_objects());
  for (std::size_t j = 0; j < y.size(); ++j) over[y.l[j]].push_back(static_cast<Id>(j));
  Tensor t;
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += over[x.r[i]].size();
  check_size(count, "tensor fibred product");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (Id j : over[x.r[i]]) {
      t.index.emplace(pair_key(static_cast<Id>(i), j), static_cast<Id>(t.pairs.size()));
      t.pairs.emplace_back(static_cast<Id>(i), j);
      labels.push_back(tuple_label({x.points[i], y.points[j]}));
    }
  UnionFind uf(t.pairs.size());
  for (std::size_t p = 0; p < t.pairs.size(); ++p) {
    const auto [i, j] = t.pairs[p];
    const Id ri = x.r[i];
    for (std::size_t q = 0; q < H.out_degree(ri); ++q) {
      const Id h = H.in_arrow(ri, q);
      uf.unite(static_cast<Id>(p), t.index.at(pair_key(x.act_right(i, h), y.act_left(H.inv(h), j))));
    }
  }
  Quotient q = quotient(uf, labels);
  t.cls = std::move(q.cls);
  t.rep = std::move(q.rep);
  std::vector<Id> l, r;
  for (Id p : t.rep) {
    l.push_back(x.l[t.pairs[p].first]);
    r.push_back(y.r[t.pairs[p].second]);
  }
  t.bundle = make_bibundle(
      x.G, y.H, std::move(q.labels), std::move(l), std::move(r),
      [&](Id g, Id o) {
        const auto [i, j] = t.pairs[t.rep[o]];
        return t.find(x.act_left(g, i), j);
      },
      [&](Id o, Id k) {
        const auto [i, j] = t.pairs[t.rep[o]];
        return t.find(i, y.act_right(j, k));
      });
  return t;
}

Bibundle tensor(const Bibundle& x, const Bibundle& y) { return tensor_full(x, y).bundle; }

BiequivariantMap associator_bi(const Bibundle& x, const Bibundle& y, const Bibundle& z) {
  const Tensor xy = tensor_full(x, y);
  const Tensor lhs = tensor_full(xy.bundle, z);
  const Tensor yz = tensor_full(y, z);
  const Tensor rhs = tensor_full(x, yz.bundle);
  auto m = descend(lhs.cls, lhs.rep.size(), [&](std::size_t p) {
    const auto [a, k] = lhs.pairs[p];
    const auto [i, j] = xy.pairs[xy.rep[a]];
    return rhs.find(i, yz.find(j, k));
  }, "associator is not well defined");
  return BiequivariantMap{lhs.bundle, rhs.bundle, std::move(m)};
}

BiequivariantMap unitor_left_bi(const Bibundle& x) {
  const Tensor t = tensor_full(identity_bibundle(x.G), x);
  auto m = descend(t.cls, t.rep.size(), [&](std::size_t p) {
    return x.act_left(t.pairs[p].first, t.pairs[p].second);
  }, "left unitor is not well defined");
  return BiequivariantMap{t.bundle, x, std::move(m)};
}

BiequivariantMap unitor_right_bi(const Bibundle& x) {
  const Tensor t = tensor_full(x, identity_bibundle(x.H));
  auto m = descend(t.cls, t.rep.size(), [&](std::size_t p) {
    return x.act_right(t.pairs[p].first, t.pairs[p].second);
  }, "right unitor is not well defined");
  return BiequivariantMap{t.bundle, x, std::move(m)};
}

BiequivariantMap hcomp_bi(const BiequivariantMap& a, const BiequivariantMap& b) {
  const Tensor s = tensor_full(a.source, b.source);
  const Tensor t = tensor_full(a.target, b.target);
  auto m = descend(s.cls, s.rep.size(), [&](std::size_t p) {
    return t.find(a.map[s.pairs[p].first], b.map[s.pairs[p].second]);
  }, "horizontal composite is not well defined");
  return BiequivariantMap{s.bundle, t.bundle, std::move(m)};
}

Bibundle bibundlise(const Functor& phi) {
  const Groupoid& G = phi.dom;
  const Groupoid& H = phi.cod;
  const BibundlisationIndex ix = bibundlisation_index(phi);
  std::vector<std::string> points;
  std::vector<Id> l, r;
  for (const auto& [x, h] : ix.decode) {
    points.push_back(tuple_label({G.object_label(x), H.arrow_label(h)}));
    l.push_back(x);
    r.push_back(H.src(h));
  }
  return make_bibundle(
      G, H, std::move(points), std::move(l), std::move(r),
      [&](Id g, Id p) { return ix.find(H, G.trg(g), H.comp(phi.arr[g], ix.decode[p].second)); },
      [&](Id p, Id h) { return ix.find(H, ix.decode[p].first, H.comp(ix.decode[p].second, h)); });
}

BiequivariantMap bibundlise_2cell(const NatTrans& s) {
  const BibundlisationIndex src = bibundlisation_index(s.from);
  const BibundlisationIndex trg = bibundlisation_index(s.to);
  const Groupoid& H = s.from.cod;
  std::vector<Id> m;
  for (const auto& [x, h] : src.decode) m.push_back(trg.find(H, x, H.comp(s.at[x], h)));
  return BiequivariantMap{bibundlise(s.from), bibundlise(s.to), std::move(m)};
}

BiequivariantMap bibundlise_composition(const Functor& phi, const Functor& psi) {
  const Functor comp = psi * phi;
  const Tensor t = tensor_full(bibundlise(phi), bibundlise(psi));
  const BibundlisationIndex a = bibundlisation_index(phi);
  const BibundlisationIndex b = bibundlisation_index(psi);
  const BibundlisationIndex c = bibundlisation_index(comp);
  const Groupoid& K = psi.cod;
  auto m = descend(t.cls, t.rep.size(), [&](std::size_t p) {
    const auto [x, h] = a.decode[t.pairs[p].first];
    const Id k = b.decode[t.pairs[p].second].second;
    return c.find(K, x, K.comp(psi.arr[h], k));
  }, "bibundlisation compositor is not well defined");
  return BiequivariantMap{t.bundle, bibundlise(comp), std::move(m)};
}

BiequivariantMap bibundlise_identity(const Groupoid& g) {
  const Functor id = identity_functor(g);
  const BibundlisationIndex ix = bibundlisation_index(id);
  std::vector<Id> m(g.num_arrows());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = ix.find(g, g.trg(static_cast<Id>(a)), static_cast<Id>(a));
  return BiequivariantMap{identity_bibundle(g), bibundlise(id), std::move(m)};
}

Bibundle opposite(const Bibundle& b) {
  return make_bibundle(
      b.H, b.G, b.points, b.r, b.l, [&](Id h, Id x) { return b.act_right(x, b.H.inv(h)); },
      [&](Id x, Id g) { return b.act_left(b.G.inv(g), x); });
}

QuasiInverseBi quasi_inverse_bi(const Bibundle& b) {
  const Principality pr = check_principality(b);
  if (!pr.biprincipal())
    fail(ErrorKind::NotBiprincipal, pr.right_principal ? "bibundle is not left principal"
                                                       : "bibundle is not right principal");
  QuasiInverseBi q;
  q.inverse = opposite(b);
  const Tensor t1 = tensor_full(b, q.inverse);
  auto m1 = descend(t1.cls, t1.rep.size(), [&](std::size_t p) {
    return pr.ldiv(t1.pairs[p].second, t1.pairs[p].first);
  }, "left division does not descend");
  q.unit = BiequivariantMap{t1.bundle, identity_bibundle(b.G), std::move(m1)};
  const Tensor t2 = tensor_full(q.inverse, b);
  auto m2 = descend(t2.cls, t2.rep.size(), [&](std::size_t p) {
    return pr.rdiv(t2.pairs[p].first, t2.pairs[p].second);
  }, "right division does not descend");
  q.counit = BiequivariantMap{t2.bundle, identity_bibundle(b.H), std::move(m2)};
  return q;
}

ActionGroupoid action_groupoid(const Bibundle& b) {
  const Groupoid& G = b.G;
  const Groupoid& H = b.H;
  std::size_t total = 0;
  for (std::size_t x = 0; x < b.size(); ++x) total += G.out_degree(b.l[x]) * H.out_degree(b.r[x]);
  check_size(total, "action groupoid");
  ActionGroupoid a;
  GroupoidBuilder gb;
  for (const auto& p : b.points) gb.add_object(p);
  for (std::size_t xi = 0; xi < b.size(); ++xi) {
    const Id x = static_cast<Id>(xi);
    for (std::size_t p = 0; p < G.out_degree(b.l[x]); ++p) {
      const Id g = G.out_arrow(b.l[x], p);
      for (std::size_t q = 0; q < H.out_degree(b.r[x]); ++q) {
        const Id h = H.out_arrow(b.r[x], q);
        const Id y = b.act_left(g, b.act_right(x, H.inv(h)));
        a.arrows.emplace(std::array<Id, 3>{g, h, x}, static_cast<Id>(a.arrow_data.size()));
        a.arrow_data.push_back({g, h, x});
        gb.add_arrow(tuple_label({tuple_label({G.arrow_label(g), H.arrow_label(h)}), b.points[x]}), x, y);
      }
    }
  }
  auto find = [&](Id g, Id h, Id x) { return a.arrows.at({g, h, x}); };
  a.groupoid = gb.finish(
      [&](Id e2, Id e1) {
        const auto& s = a.arrow_data[e1];
        const auto& t = a.arrow_data[e2];
        return find(G.comp(t[0], s[0]), H.comp(t[1], s[1]), s[2]);
      },
      [&](Id e) {
        const auto& s = a.arrow_data[e];
        return find(G.inv(s[0]), H.inv(s[1]), b.act_left(s[0], b.act_right(s[2], H.inv(s[1]))));
      },
      [&](Id x) { return find(G.unit(b.l[x]), H.unit(b.r[x]), x); });
  return a;
}

Anafunctor bibundle_to_anafunctor(const Bibundle& b) {
  if (!is_right_principal(b)) fail(ErrorKind::NotRightPrincipal, "bibundle is not right principal");
  return action_anafunctor(b);
}

namespace {

// Points of the bibundle of a span before the quotient: (x, g, y, h, z) with
// g : x -> phi y and h : psi y -> z, in the object order of the strict
// pullback (G xw K) x_K (K xw H).
struct GMPoints {
  std::vector<std::array<Id, 5>> tuples;
  TripleIndex index;  // (g, y, h)
  std::vector<Id> orbit;
  Bibundle bundle;
  Id find(Id g, Id y, Id h) const { return index.at({g, y, h}); }
};

GMPoints gm_points(const GM& gm) {
  const Groupoid& G = gm.source();
  const Groupoid& H = gm.target();
  const Groupoid& K = gm.apex;
  const Functor& phi = gm.left;
  const Functor& psi = gm.right;
  GMPoints r;
  std::size_t count = 0;
  for (std::size_t y = 0; y < K.num_objects(); ++y)
    count += G.out_degree(phi.obj[y]) * H.out_degree(psi.obj[y]);
  check_size(count, "bibundle of a span");
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < G.num_objects(); ++x)
    for (std::size_t y = 0; y < K.num_objects(); ++y)
      for (Id g : G.hom(static_cast<Id>(x), phi.obj[y]))
        for (std::size_t z = 0; z < H.num_objects(); ++z)
          for (Id h : H.hom(psi.obj[y], static_cast<Id>(z))) {
            const Id yi = static_cast<Id>(y);
            r.index[{g, yi, h}] = static_cast<Id>(r.tuples.size());
            r.tuples.push_back({static_cast<Id>(x), g, yi, h, static_cast<Id>(z)});
            labels.push_back(tuple_label({tuple_label({G.object_label(static_cast<Id>(x)), G.arrow_label(g),
                                                       K.object_label(yi)}),
                                          tuple_label({K.object_label(yi), H.arrow_label(h),
                                                       H.object_label(static_cast<Id>(z))})}));
          }
  const std::size_t n = r.tuples.size();
  UnionFind uf(n);
  for (std::size_t oi = 0; oi < n; ++oi) {
    const auto [x, g, y, h, z] = r.tuples[oi];
    for (std::size_t p = 0; p < K.out_degree(y); ++p) {
      const Id k = K.in_arrow(y, p);
      uf.unite(static_cast<Id>(oi), r.find(G.comp(G.inv(phi.arr[k]), g), K.src(k), H.comp(h, psi.arr[k])));
    }
  }
  Quotient q = quotient(uf, labels);
  r.orbit = q.cls;
  std::vector<Id> l, rr;
  for (Id o : q.rep) {
    l.push_back(r.tuples[o][0]);
    rr.push_back(r.tuples[o][4]);
  }
  auto left = [&](Id gt, Id o) {
    const auto [x, g, y, h, z] = r.tuples[o];
    return r.find(G.comp(g, G.inv(gt)), y, h);
  };
  auto right = [&](Id o, Id ht) {
    const auto [x, g, y, h, z] = r.tuples[o];
    return r.find(g, y, H.comp(H.inv(ht), h));
  };
  r.bundle = make_bibundle(
      G, H, std::move(q.labels), std::move(l), std::move(rr),
      [&](Id gt, Id c) { return r.orbit[left(gt, q.rep[c])]; },
      [&](Id c, Id ht) { return r.orbit[right(q.rep[c], ht)]; });
  for (std::size_t oi = 0; oi < n; ++oi) {
    const Id o = static_cast<Id>(oi);
    const auto& v = r.tuples[oi];
    const Id c = r.orbit[o];
    for (std::size_t p = 0; p < G.out_degree(v[0]); ++p) {
      const Id gt = G.out_arrow(v[0], p);
      require(r.orbit[left(gt, o)] == r.bundle.act_left(gt, c), "left action does not descend to orbits");
    }
    for (std::size_t p = 0; p < H.out_degree(v[4]); ++p) {
      const Id ht = H.in_arrow(v[4], p);
      require(r.orbit[right(o, ht)] == r.bundle.act_right(c, ht), "right action does not descend to orbits");
    }
  }
  return r;
}

}  // namespace

GMBibundle gm_to_bibundle_full(const GM& gm) {
  const Groupoid& G = gm.source();
  const Functor& phi = gm.left;
  const Functor& psi = gm.right;
  GMPoints pts = gm_points(gm);
  GMBibundle r{std::move(pts.bundle), {}, weak_pullback(identity_functor(G), phi),
               weak_pullback(psi, identity_functor(gm.target())), {}, {}};
  r.ltilde = strict_pullback(r.left_w.pr3, r.right_w.pr1);
  const StrictPullback& L = r.ltilde;
  const Groupoid& LG = L.groupoid;
  const std::size_t n = LG.num_objects();
  require(n == pts.tuples.size(), "span bibundle: point count mismatch");
  r.orbit.resize(n);
  std::vector<Id> s1(n), s2(n);
  for (std::size_t oi = 0; oi < n; ++oi) {
    const auto& a = r.left_w.obj_triple[L.pr1.obj[oi]];
    const auto& b = r.right_w.obj_triple[L.pr2.obj[oi]];
    r.orbit[oi] = pts.orbit[pts.find(a[1], a[2], b[1])];
    s1[oi] = G.inv(a[1]);
    s2[oi] = b[1];
  }

  const Anafunctor target = action_anafunctor(r.bundle);
  ActionGroupoid act = action_groupoid(r.bundle);
  Functor alpha = r.left_w.pr3 * L.pr1;
  Functor alpha_p{LG, target.apex, r.orbit, std::vector<Id>(LG.num_arrows())};
  for (std::size_t e = 0; e < LG.num_arrows(); ++e) {
    const Id gt = r.left_w.arr_triple[L.pr1.arr[e]][0];
    const Id ht = r.right_w.arr_triple[L.pr2.arr[e]][2];
    alpha_p.arr[e] = act.arrows.at({gt, ht, r.orbit[LG.src(static_cast<Id>(e))]});
  }
  r.witness = TwoCellDiagram{gm, target, alpha, alpha_p, {}, {}};
  r.witness.s1 = NatTrans{phi * alpha, target.left * alpha_p, std::move(s1)};
  r.witness.s2 = NatTrans{psi * alpha, target.right * alpha_p, std::move(s2)};
  return r;
}

Bibundle gm_to_bibundle(const GM& gm) { return gm_points(gm).bundle; }

BiequivariantMap bibundle_roundtrip_iso(const Bibundle& b) {
  const GMPoints rt = gm_points(bibundle_to_anafunctor(b));
  auto m = descend(rt.orbit, rt.bundle.size(), [&](std::size_t o) {
    const auto [x, g, w, h, z] = rt.tuples[o];
    return b.act_left(b.G.inv(g), b.act_right(w, b.H.inv(h)));
  }, "round-trip map is not well defined");
  return BiequivariantMap{rt.bundle, b, std::move(m)};
}

BiequivariantMap twocell_to_biequiv(const TwoCellDiagram& c) {
  const GMPoints ra = gm_points(c.source);
  const GMPoints rb = gm_points(c.target);
  const CanonicalForm U = canonical_form(c);
  const Groupoid& G = c.source.source();
  const Groupoid& H = c.source.target();
  const Groupoid& K2 = c.target.apex;
  const Functor& phi2 = c.target.left;
  auto m = descend(ra.orbit, ra.bundle.size(), [&](std::size_t o) {
    const auto [x, g0, y, h, z] = ra.tuples[o];
    Id val = kNone;
    for (std::size_t yi = 0; yi < K2.num_objects(); ++yi) {
      const Id y2 = static_cast<Id>(yi);
      for (Id g2 : G.hom(x, phi2.obj[y2])) {
        const Id u = U.at(y, G.comp(g2, G.inv(g0)), y2);
        const Id v = rb.orbit[rb.find(g2, y2, H.comp(h, H.inv(u)))];
        if (val == kNone) val = v;
        require(val == v, "bi-equivariant map depends on the chosen object");
      }
    }
    require(val != kNone, "target span is not essentially surjective");
    return val;
  }, "bi-equivariant map does not descend to orbits");
  BiequivariantMap r{ra.bundle, rb.bundle, std::move(m)};
  if (auto e = check_biequivariant(r, true)) fail(ErrorKind::NotBijective, "2-cell translation: " + *e);
  return r;
}

Transformation biequiv_to_transformation(const BiequivariantMap& m) {
  if (auto e = check_biequivariant(m, true)) fail(ErrorKind::NotBijective, *e);
  if (!is_right_principal(m.source) || !is_right_principal(m.target))
    fail(ErrorKind::NotRightPrincipal, "bibundle is not right principal");
  const Principality py = check_principality(m.target);
  return make_transformation(action_anafunctor(m.source), action_anafunctor(m.target),
                             [&](Id x, Id w) { return py.rdiv(w, m.map[x]); });
}

std::optional<BiequivariantMap> find_biequivariant_iso(const Bibundle& a, const Bibundle& b) {
  if (!(a.G == b.G) || !(a.H == b.H)) fail(ErrorKind::BoundaryMismatch, "bibundles have different ends");
  if (a.size() != b.size()) return std::nullopt;
  const Groupoid& G = a.G;
  const Groupoid& H = a.H;
  auto orbits = [&](const Bibundle& x) {
    UnionFind uf(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Id xi = static_cast<Id>(i);
      for (std::size_t p = 0; p < G.out_degree(x.l[i]); ++p) uf.unite(xi, x.act_left(G.out_arrow(x.l[i], p), xi));
      for (std::size_t p = 0; p < H.out_degree(x.r[i]); ++p) uf.unite(xi, x.act_right(xi, H.in_arrow(x.r[i], p)));
    }
    std::vector<std::vector<Id>> out;
    std::vector<Id> at(x.size(), kNone);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Id r = uf.find(static_cast<Id>(i));
      if (at[r] == kNone) {
        at[r] = static_cast<Id>(out.size());
        out.emplace_back();
      }
      out[at[r]].push_back(static_cast<Id>(i));
    }
    return out;
  };
  const auto oa = orbits(a);
  const auto ob = orbits(b);
  if (oa.size() != ob.size()) return std::nullopt;
  std::vector<Id> orbit_of_b(b.size());
  for (std::size_t k = 0; k < ob.size(); ++k)
    for (Id y : ob[k]) orbit_of_b[y] = static_cast<Id>(k);
  std::vector<Id> m(a.size(), kNone);
  std::vector<char> used(ob.size(), 0);

  // Map the orbit of x0 by g.x0.h -> g.y0.h; false if not a well-defined bijection.
  auto try_orbit = [&](Id x0, Id y0, std::vector<Id>& assigned) {
    for (std::size_t q = 0; q < H.out_degree(a.r[x0]); ++q) {
      const Id h = H.in_arrow(a.r[x0], q);
      const Id xh = a.act_right(x0, h), yh = b.act_right(y0, h);
      for (std::size_t p = 0; p < G.out_degree(a.l[x0]); ++p) {
        const Id g = G.out_arrow(a.l[x0], p);
        const Id x = a.act_left(g, xh), y = b.act_left(g, yh);
        if (m[x] == kNone) {
          m[x] = y;
          assigned.push_back(x);
        } else if (m[x] != y) {
          return false;
        }
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == oa.size()) return true;
    const Id x0 = oa[k].front();
    for (std::size_t c = 0; c < ob.size(); ++c) {
      if (used[c] || ob[c].size() != oa[k].size()) continue;
      for (Id y0 : ob[c]) {
        if (b.l[y0] != a.l[x0] || b.r[y0] != a.r[x0]) continue;
        std::vector<Id> assigned;
        bool ok = try_orbit(x0, y0, assigned);
        if (ok) {
          std::vector<char> hit(b.size(), 0);
          for (Id x : assigned) {
            if (hit[m[x]] || orbit_of_b[m[x]] != static_cast<Id>(c)) ok = false;
            hit[m[x]] = 1;
          }
        }
        if (ok) {
          used[c] = 1;
          if (rec(k + 1)) return true;
          used[c] = 0;
        }
        for (Id x : assigned) m[x] = kNone;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  BiequivariantMap r{a, b, m};
  require(!check_biequivariant(r, true), "orbit matching produced an invalid map");
  return r;
}

}  // namespace gloc
