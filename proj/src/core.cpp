#include "gloc/core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace gloc {

std::string tuple_label(std::initializer_list<std::string_view> parts) {
  std::string s = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) s += ',';
    s += p;
    first = false;
  }
  s += ')';
  return s;
}

// ---------------------------------------------------------------- Groupoid

Groupoid::Groupoid() : d_(std::make_shared<Data>()) {}

std::optional<Id> Groupoid::find_object(const std::string& s) const {
  auto it = d_->ofind.find(s);
  if (it == d_->ofind.end()) return std::nullopt;
  return it->second;
}

std::optional<Id> Groupoid::find_arrow(const std::string& s) const {
  auto it = d_->afind.find(s);
  if (it == d_->afind.end()) return std::nullopt;
  return it->second;
}

std::size_t Groupoid::hom_offset(Id a, Id b) const {
  const auto& c = d_->comps[d_->comp_of[a]];
  const std::size_t n = c.objects.size();
  return c.offset + (static_cast<std::size_t>(d_->local[a]) * n + d_->local[b]) * c.order;
}

Id Groupoid::unit(Id x) const {
  const auto& c = d_->comps[d_->comp_of[x]];
  return d_->table[hom_offset(x, x) + c.identity];
}

Id Groupoid::inv(Id a) const {
  const auto& c = d_->comps[d_->comp_of[d_->src[a]]];
  return d_->table[hom_offset(d_->trg[a], d_->src[a]) + c.ginv[d_->gamma[a]]];
}

Id Groupoid::comp(Id g, Id f) const {
  const Id a = d_->src[f];
  const auto& c = d_->comps[d_->comp_of[a]];
  const int gm = c.mul[d_->gamma[g] * c.order + d_->gamma[f]];
  return d_->table[hom_offset(a, d_->trg[g]) + gm];
}

std::span<const Id> Groupoid::hom(Id a, Id b) const {
  if (d_->comp_of[a] != d_->comp_of[b]) return {};
  const auto& c = d_->comps[d_->comp_of[a]];
  return {d_->table.data() + hom_offset(a, b), static_cast<std::size_t>(c.order)};
}

std::size_t Groupoid::out_degree(Id x) const {
  const auto& c = d_->comps[d_->comp_of[x]];
  return c.objects.size() * c.order;
}

std::size_t Groupoid::out_pos(Id g) const {
  const auto& c = d_->comps[d_->comp_of[d_->src[g]]];
  return static_cast<std::size_t>(d_->local[d_->trg[g]]) * c.order + d_->gamma[g];
}

Id Groupoid::out_arrow(Id x, std::size_t pos) const {
  const auto& c = d_->comps[d_->comp_of[x]];
  const std::size_t n = c.objects.size();
  return d_->table[c.offset + (d_->local[x] * n + pos / c.order) * c.order + pos % c.order];
}

std::size_t Groupoid::in_pos(Id h) const {
  const auto& c = d_->comps[d_->comp_of[d_->trg[h]]];
  return static_cast<std::size_t>(d_->local[d_->src[h]]) * c.order + d_->gamma[h];
}

Id Groupoid::in_arrow(Id x, std::size_t pos) const {
  const auto& c = d_->comps[d_->comp_of[x]];
  const std::size_t n = c.objects.size();
  return d_->table[c.offset + ((pos / c.order) * n + d_->local[x]) * c.order + pos % c.order];
}

bool Groupoid::same_as(const Groupoid& o) const {
  if (d_ == o.d_) return true;
  const Data& a = *d_;
  const Data& b = *o.d_;
  if (a.olab != b.olab || a.alab != b.alab || a.src != b.src || a.trg != b.trg ||
      a.gamma != b.gamma || a.table != b.table || a.comps.size() != b.comps.size())
    return false;
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (a.comps[i].mul != b.comps[i].mul || a.comps[i].objects != b.comps[i].objects) return false;
  return true;
}

// ---------------------------------------------------------------- Builder

Id GroupoidBuilder::add_object(std::string label) {
  olab_.push_back(std::move(label));
  return static_cast<Id>(olab_.size() - 1);
}

Id GroupoidBuilder::add_arrow(std::string label, Id s, Id t) {
  alab_.push_back(std::move(label));
  src_.push_back(s);
  trg_.push_back(t);
  return static_cast<Id>(alab_.size() - 1);
}

Groupoid GroupoidBuilder::finish(const std::function<Id(Id, Id)>& comp,
                                 const std::function<Id(Id)>& inv,
                                 const std::function<Id(Id)>& unit) {
  auto d = std::make_shared<Groupoid::Data>();
  const std::size_t n = olab_.size(), m = alab_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!d->ofind.emplace(olab_[i], static_cast<Id>(i)).second)
      fail(ErrorKind::AxiomViolation, "duplicate object identifier " + olab_[i]);
  for (std::size_t i = 0; i < m; ++i)
    if (!d->afind.emplace(alab_[i], static_cast<Id>(i)).second)
      fail(ErrorKind::AxiomViolation, "duplicate arrow identifier " + alab_[i]);

  std::vector<std::vector<Id>> incident(n);
  for (std::size_t e = 0; e < m; ++e) {
    incident[src_[e]].push_back(static_cast<Id>(e));
    if (trg_[e] != src_[e]) incident[trg_[e]].push_back(static_cast<Id>(e));
  }

  std::vector<int> comp_of(n, -1), local(n, 0);
  std::vector<Id> tau(n, kNone);
  std::vector<Groupoid::Component> comps;
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    if (comp_of[x0] != -1) continue;
    const int c = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<Id> queue{static_cast<Id>(x0)};
    comp_of[x0] = c;
    tau[x0] = unit(static_cast<Id>(x0));
    std::vector<Id> objs;
    while (!queue.empty()) {
      Id cur = queue.front();
      queue.pop_front();
      objs.push_back(cur);
      for (Id e : incident[cur]) {
        Id other = src_[e] == cur ? trg_[e] : src_[e];
        if (comp_of[other] != -1) continue;
        comp_of[other] = c;
        tau[other] = src_[e] == cur ? comp(e, tau[cur]) : comp(inv(e), tau[cur]);
        queue.push_back(other);
      }
    }
    std::sort(objs.begin(), objs.end());
    for (std::size_t i = 0; i < objs.size(); ++i) local[objs[i]] = static_cast<int>(i);
    comps[c].objects = std::move(objs);
  }

  std::vector<std::vector<Id>> aut(comps.size());
  for (std::size_t e = 0; e < m; ++e) {
    const Id r = comps[comp_of[src_[e]]].objects.front();
    if (src_[e] == r && trg_[e] == r) aut[comp_of[r]].push_back(static_cast<Id>(e));
  }
  std::vector<int> aut_index(m, -1);
  std::size_t offset = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto& C = comps[c];
    const int k = static_cast<int>(aut[c].size());
    if (k == 0) fail(ErrorKind::AxiomViolation, "component without unit arrow");
    for (int i = 0; i < k; ++i) aut_index[aut[c][i]] = i;
    C.order = k;
    C.mul.assign(static_cast<std::size_t>(k) * k, -1);
    C.ginv.assign(k, -1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const int r = aut_index[comp(aut[c][i], aut[c][j])];
        if (r < 0) fail(ErrorKind::AxiomViolation, "composition leaves the vertex group");
        C.mul[i * k + j] = r;
      }
      C.ginv[i] = aut_index[inv(aut[c][i])];
      if (C.ginv[i] < 0) fail(ErrorKind::AxiomViolation, "inverse leaves the vertex group");
    }
    C.identity = aut_index[unit(C.objects.front())];
    if (C.identity < 0) fail(ErrorKind::AxiomViolation, "unit is not an automorphism");
    C.offset = offset;
    offset += C.objects.size() * C.objects.size() * k;
  }
  if (offset != m) fail(ErrorKind::AxiomViolation, "hom-sets are not torsors of the vertex groups");

  d->table.assign(m, kNone);
  d->gamma.assign(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const Id a = src_[e], b = trg_[e];
    const auto& C = comps[comp_of[a]];
    const Id core = comp(inv(tau[b]), comp(static_cast<Id>(e), tau[a]));
    const int g = core >= 0 && static_cast<std::size_t>(core) < m ? aut_index[core] : -1;
    if (g < 0) fail(ErrorKind::AxiomViolation, "arrow does not normalise into the vertex group");
    const std::size_t slot =
        C.offset + (static_cast<std::size_t>(local[a]) * C.objects.size() + local[b]) * C.order + g;
    if (d->table[slot] != kNone)
      fail(ErrorKind::AxiomViolation, "arrows " + alab_[d->table[slot]] + " and " + alab_[e] +
                                          " coincide under composition");
    d->table[slot] = static_cast<Id>(e);
    d->gamma[e] = g;
  }
  d->olab = std::move(olab_);
  d->alab = std::move(alab_);
  d->src = std::move(src_);
  d->trg = std::move(trg_);
  d->comp_of = std::move(comp_of);
  d->local = std::move(local);
  d->comps = std::move(comps);
  *this = GroupoidBuilder();
  return Groupoid(std::move(d));
}

// ---------------------------------------------------------------- raw input

namespace {

// Identifiers may be structured labels such as "(a,[b])", but brackets must
// balance and commas may only appear inside them, so tuple labels built from
// identifiers stay unambiguous.
bool bad_identifier(const std::string& s) {
  if (s.empty()) return true;
  std::string open;
  for (char c : s) {
    if (c == '(' || c == '[') {
      open += c;
    } else if (c == ')' || c == ']') {
      if (open.empty() || open.back() != (c == ')' ? '(' : '[')) return true;
      open.pop_back();
    } else if (c == ',' && open.empty()) {
      return true;
    }
  }
  return !open.empty();
}

}  // namespace

Groupoid validate_groupoid(const RawGroupoid& raw) {
  std::vector<std::string> bad;
  std::unordered_map<std::string, Id> oid, aid;
  for (const auto& o : raw.objects) {
    if (bad_identifier(o))
      fail(ErrorKind::ParseError, "identifier '" + o + "' is empty, has unbalanced brackets or a top-level comma");
    if (!oid.emplace(o, static_cast<Id>(oid.size())).second)
      bad.push_back("uniqueness: object " + o + " listed twice");
  }
  for (const auto& a : raw.arrows) {
    if (bad_identifier(a.id))
      fail(ErrorKind::ParseError, "identifier '" + a.id + "' is empty, has unbalanced brackets or a top-level comma");
    if (!aid.emplace(a.id, static_cast<Id>(aid.size())).second)
      bad.push_back("uniqueness: arrow " + a.id + " listed twice");
  }
  if (!bad.empty()) throw Error(ErrorKind::AxiomViolation, bad.front(), bad);

  std::vector<std::string> dangling;
  auto obj = [&](const std::string& s, const std::string& ctx) -> Id {
    auto it = oid.find(s);
    if (it == oid.end()) {
      dangling.push_back(ctx + " refers to unknown object " + s);
      return kNone;
    }
    return it->second;
  };
  auto arr = [&](const std::string& s, const std::string& ctx) -> Id {
    auto it = aid.find(s);
    if (it == aid.end()) {
      dangling.push_back(ctx + " refers to unknown arrow " + s);
      return kNone;
    }
    return it->second;
  };

  const std::size_t n = raw.objects.size(), m = raw.arrows.size();
  std::vector<Id> src(m), trg(m), unit(n, kNone), inv(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    src[i] = obj(raw.arrows[i].src, "src of " + raw.arrows[i].id);
    trg[i] = obj(raw.arrows[i].trg, "trg of " + raw.arrows[i].id);
  }
  for (const auto& [x, u] : raw.units) {
    Id xi = obj(x, "units"), ui = arr(u, "units");
    if (xi != kNone && ui != kNone) {
      if (unit[xi] != kNone && unit[xi] != ui) bad.push_back("unit: object " + x + " has two units");
      unit[xi] = ui;
    }
  }
  for (const auto& [f, g] : raw.inverse) {
    Id fi = arr(f, "inverse"), gi = arr(g, "inverse");
    if (fi != kNone && gi != kNone) {
      if (inv[fi] != kNone && inv[fi] != gi) bad.push_back("inverse: arrow " + f + " has two inverses");
      inv[fi] = gi;
    }
  }
  std::unordered_map<std::uint64_t, Id> table;
  for (const auto& c : raw.compose) {
    Id g = arr(c[0], "compose"), f = arr(c[1], "compose"), h = arr(c[2], "compose");
    if (g == kNone || f == kNone || h == kNone) continue;
    auto [it, fresh] = table.emplace(pair_key(g, f), h);
    if (!fresh && it->second != h)
      bad.push_back("comp: (" + c[0] + "," + c[1] + ") has two values");
  }
  if (!dangling.empty()) throw Error(ErrorKind::DanglingReference, dangling.front(), dangling);

  const auto& A = raw.arrows;
  for (std::size_t x = 0; x < n; ++x) {
    if (unit[x] == kNone) {
      bad.push_back("unit: object " + raw.objects[x] + " has no unit");
    } else if (src[unit[x]] != static_cast<Id>(x) || trg[unit[x]] != static_cast<Id>(x)) {
      bad.push_back("unit: unit of " + raw.objects[x] + " is not a loop at it");
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (inv[f] == kNone) {
      bad.push_back("inverse: arrow " + A[f].id + " has no inverse");
    } else if (src[inv[f]] != trg[f] || trg[inv[f]] != src[f]) {
      bad.push_back("inverse: inverse of " + A[f].id + " has wrong endpoints");
    }
  }
  for (const auto& [key, h] : table) {
    Id g = static_cast<Id>(key >> 32), f = static_cast<Id>(key & 0xffffffffu);
    if (src[g] != trg[f]) {
      bad.push_back("comp: defined on non-composable pair (" + A[g].id + "," + A[f].id + ")");
    } else if (src[h] != src[f] || trg[h] != trg[g]) {
      bad.push_back("comp: " + A[g].id + "*" + A[f].id + " = " + A[h].id + " has wrong endpoints");
    }
  }
  std::vector<std::vector<Id>> into(n), outof(n);
  for (std::size_t f = 0; f < m; ++f) {
    into[trg[f]].push_back(static_cast<Id>(f));
    outof[src[f]].push_back(static_cast<Id>(f));
  }
  auto lookup = [&](Id g, Id f) -> Id {
    auto it = table.find(pair_key(g, f));
    return it == table.end() ? kNone : it->second;
  };
  for (std::size_t f = 0; f < m; ++f)
    for (Id g : outof[trg[f]])
      if (lookup(g, static_cast<Id>(f)) == kNone)
        bad.push_back("comp: missing composite of composable pair (" + A[g].id + "," + A[f].id + ")");
  if (!bad.empty()) throw Error(ErrorKind::AxiomViolation, bad.front(), bad);

  for (std::size_t fi = 0; fi < m; ++fi) {
    const Id f = static_cast<Id>(fi);
    if (lookup(unit[trg[f]], f) != f || lookup(f, unit[src[f]]) != f)
      bad.push_back("unit law fails at " + A[f].id);
    if (lookup(inv[f], f) != unit[src[f]] || lookup(f, inv[f]) != unit[trg[f]])
      bad.push_back("inverse law fails at " + A[f].id);
    for (Id g : outof[trg[f]]) {
      const Id gf = lookup(g, f);
      for (Id h : outof[trg[g]]) {
        if (lookup(lookup(h, g), f) != lookup(h, gf))
          bad.push_back("associativity fails at (" + A[h].id + "," + A[g].id + "," + A[f].id + ")");
      }
    }
  }
  if (!bad.empty()) throw Error(ErrorKind::AxiomViolation, bad.front(), bad);

  GroupoidBuilder b;
  for (const auto& o : raw.objects) b.add_object(o);
  for (std::size_t f = 0; f < m; ++f) b.add_arrow(A[f].id, src[f], trg[f]);
  return b.finish(lookup, [&](Id f) { return inv[f]; }, [&](Id x) { return unit[x]; });
}

RawGroupoid to_raw(const Groupoid& g) {
  RawGroupoid r;
  r.objects = g.object_labels();
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    r.arrows.push_back({g.arrow_label(a), g.object_label(g.src(a)), g.object_label(g.trg(a))});
  for (std::size_t x = 0; x < g.num_objects(); ++x)
    r.units.emplace_back(g.object_label(x), g.arrow_label(g.unit(x)));
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    r.inverse.emplace_back(g.arrow_label(a), g.arrow_label(g.inv(a)));
  for (std::size_t gi = 0; gi < g.num_arrows(); ++gi) {
    const Id x = g.src(gi);
    std::vector<Id> fs;
    for (std::size_t p = 0; p < g.out_degree(x); ++p) fs.push_back(g.in_arrow(x, p));
    std::sort(fs.begin(), fs.end());
    for (Id f : fs)
      r.compose.push_back({g.arrow_label(gi), g.arrow_label(f), g.arrow_label(g.comp(gi, f))});
  }
  return r;
}

// ---------------------------------------------------------------- checks

std::optional<std::string> check_groupoid(const Groupoid& g) {
  const std::size_t m = g.num_arrows();
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    Id u = g.unit(x);
    if (g.src(u) != static_cast<Id>(x) || g.trg(u) != static_cast<Id>(x))
      return "unit of " + g.object_label(x) + " is not a loop";
  }
  for (std::size_t fi = 0; fi < m; ++fi) {
    const Id f = static_cast<Id>(fi);
    if (g.comp(g.unit(g.trg(f)), f) != f || g.comp(f, g.unit(g.src(f))) != f)
      return "unit law at " + g.arrow_label(f);
    if (g.comp(g.inv(f), f) != g.unit(g.src(f))) return "inverse law at " + g.arrow_label(f);
    const Id y = g.trg(f);
    for (std::size_t p = 0; p < g.out_degree(y); ++p) {
      const Id h = g.out_arrow(y, p);
      const Id hf = g.comp(h, f);
      if (g.src(hf) != g.src(f) || g.trg(hf) != g.trg(h))
        return "composite endpoints at " + g.arrow_label(h) + "*" + g.arrow_label(f);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_functor(const Functor& F) {
  const Groupoid &G = F.dom, &H = F.cod;
  if (F.obj.size() != G.num_objects() || F.arr.size() != G.num_arrows())
    return std::string("functor tables have the wrong size");
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    if (F.obj[x] < 0 || static_cast<std::size_t>(F.obj[x]) >= H.num_objects())
      return "object " + G.object_label(x) + " maps outside the codomain";
    if (F.arr[G.unit(x)] != H.unit(F.obj[x])) return "unit of " + G.object_label(x) + " not preserved";
  }
  for (std::size_t fi = 0; fi < G.num_arrows(); ++fi) {
    const Id f = static_cast<Id>(fi);
    const Id h = F.arr[f];
    if (h < 0 || static_cast<std::size_t>(h) >= H.num_arrows())
      return "arrow " + G.arrow_label(f) + " maps outside the codomain";
    if (H.src(h) != F.obj[G.src(f)] || H.trg(h) != F.obj[G.trg(f)])
      return "arrow " + G.arrow_label(f) + " endpoints not preserved";
  }
  for (std::size_t fi = 0; fi < G.num_arrows(); ++fi) {
    const Id f = static_cast<Id>(fi);
    const Id y = G.trg(f);
    for (std::size_t p = 0; p < G.out_degree(y); ++p) {
      const Id g = G.out_arrow(y, p);
      if (F.arr[G.comp(g, f)] != H.comp(F.arr[g], F.arr[f]))
        return "composition not preserved at " + G.arrow_label(g) + "*" + G.arrow_label(f);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_nat(const NatTrans& s) {
  const Functor &F = s.from, &E = s.to;
  if (!(F.dom == E.dom) || !(F.cod == E.cod)) return std::string("functors have different ends");
  const Groupoid &G = F.dom, &H = F.cod;
  if (s.at.size() != G.num_objects()) return std::string("component table has the wrong size");
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    const Id c = s.at[x];
    if (c < 0 || static_cast<std::size_t>(c) >= H.num_arrows())
      return "component at " + G.object_label(x) + " is not an arrow";
    if (H.src(c) != F.obj[x] || H.trg(c) != E.obj[x])
      return "component at " + G.object_label(x) + " has wrong endpoints";
  }
  for (std::size_t gi = 0; gi < G.num_arrows(); ++gi) {
    const Id g = static_cast<Id>(gi);
    if (H.comp(s.at[G.trg(g)], F.arr[g]) != H.comp(E.arr[g], s.at[G.src(g)]))
      return "naturality fails at " + G.arrow_label(g);
  }
  return std::nullopt;
}

void validate_functor(const Functor& f) {
  if (auto e = check_functor(f)) fail(ErrorKind::AxiomViolation, "functor: " + *e);
}

void validate_nat(const NatTrans& s) {
  if (auto e = check_nat(s)) fail(ErrorKind::AxiomViolation, "natural transformation: " + *e);
}

bool operator==(const Functor& a, const Functor& b) {
  return a.obj == b.obj && a.arr == b.arr && a.dom == b.dom && a.cod == b.cod;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.at == b.at && a.from == b.from && a.to == b.to;
}

// ---------------------------------------------------------------- functors

Functor make_functor(const Groupoid& dom, const Groupoid& cod, std::vector<Id> obj,
                     std::vector<Id> arr) {
  return Functor{dom, cod, std::move(obj), std::move(arr)};
}

Functor identity_functor(const Groupoid& g) {
  Functor f{g, g, {}, {}};
  f.obj.resize(g.num_objects());
  f.arr.resize(g.num_arrows());
  for (std::size_t i = 0; i < f.obj.size(); ++i) f.obj[i] = static_cast<Id>(i);
  for (std::size_t i = 0; i < f.arr.size(); ++i) f.arr[i] = static_cast<Id>(i);
  return f;
}

Functor operator*(const Functor& e, const Functor& f) {
  if (!(f.cod == e.dom)) fail(ErrorKind::BoundaryMismatch, "functor composition: codomain mismatch");
  Functor r{f.dom, e.cod, std::vector<Id>(f.obj.size()), std::vector<Id>(f.arr.size())};
  for (std::size_t i = 0; i < f.obj.size(); ++i) r.obj[i] = e.obj[f.obj[i]];
  for (std::size_t i = 0; i < f.arr.size(); ++i) r.arr[i] = e.arr[f.arr[i]];
  return r;
}

NatTrans make_nat(const Functor& from, const Functor& to, std::vector<Id> at) {
  return NatTrans{from, to, std::move(at)};
}

NatTrans identity_nat(const Functor& f) {
  std::vector<Id> at(f.dom.num_objects());
  for (std::size_t x = 0; x < at.size(); ++x) at[x] = f.cod.unit(f.obj[x]);
  return NatTrans{f, f, std::move(at)};
}

NatTrans vcomp(const NatTrans& s, const NatTrans& t) {
  if (!(s.to == t.from)) fail(ErrorKind::BoundaryMismatch, "vertical composition of transformations");
  std::vector<Id> at(s.at.size());
  for (std::size_t x = 0; x < at.size(); ++x) at[x] = s.from.cod.comp(t.at[x], s.at[x]);
  return NatTrans{s.from, t.to, std::move(at)};
}

NatTrans inverse(const NatTrans& s) {
  std::vector<Id> at(s.at.size());
  for (std::size_t x = 0; x < at.size(); ++x) at[x] = s.from.cod.inv(s.at[x]);
  return NatTrans{s.to, s.from, std::move(at)};
}

NatTrans operator*(const Functor& e, const NatTrans& s) {
  std::vector<Id> at(s.at.size());
  for (std::size_t x = 0; x < at.size(); ++x) at[x] = e.arr[s.at[x]];
  return NatTrans{e * s.from, e * s.to, std::move(at)};
}

NatTrans operator*(const NatTrans& s, const Functor& f) {
  std::vector<Id> at(f.obj.size());
  for (std::size_t x = 0; x < at.size(); ++x) at[x] = s.at[f.obj[x]];
  return NatTrans{s.from * f, s.to * f, std::move(at)};
}

// ---------------------------------------------------------------- constructors

Groupoid empty_groupoid() { return Groupoid(); }

Groupoid trivial_groupoid(const std::vector<std::string>& points) {
  GroupoidBuilder b;
  for (const auto& p : points) b.add_object(p);
  for (std::size_t i = 0; i < points.size(); ++i)
    b.add_arrow(tuple_label({points[i], points[i]}), static_cast<Id>(i), static_cast<Id>(i));
  return b.finish([](Id g, Id) { return g; }, [](Id f) { return f; }, [](Id x) { return x; });
}

Groupoid pair_groupoid(const std::vector<std::string>& points) {
  std::vector<int> cls(points.size(), 0);
  return relation_groupoid(points, cls);
}

Groupoid relation_groupoid(const std::vector<std::string>& points, const std::vector<int>& cls) {
  const std::size_t n = points.size();
  GroupoidBuilder b;
  for (const auto& p : points) b.add_object(p);
  std::unordered_map<std::uint64_t, Id> idx;
  std::vector<Id> src, trg;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (cls[x] == cls[y]) {
        Id a = b.add_arrow(tuple_label({points[x], points[y]}), static_cast<Id>(x), static_cast<Id>(y));
        idx[pair_key(static_cast<Id>(x), static_cast<Id>(y))] = a;
        src.push_back(static_cast<Id>(x));
        trg.push_back(static_cast<Id>(y));
      }
  return b.finish([&](Id g, Id f) { return idx.at(pair_key(src[f], trg[g])); },
                  [&](Id f) { return idx.at(pair_key(trg[f], src[f])); },
                  [&](Id x) { return idx.at(pair_key(x, x)); });
}

Groupoid full_subgroupoid(const Groupoid& g, const std::vector<Id>& objects, Functor* inclusion) {
  GroupoidBuilder b;
  std::vector<Id> onew(g.num_objects(), kNone), anew(g.num_arrows(), kNone), aold;
  for (Id x : objects) onew[x] = b.add_object(g.object_label(x));
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    if (onew[g.src(a)] != kNone && onew[g.trg(a)] != kNone) {
      anew[a] = b.add_arrow(g.arrow_label(a), onew[g.src(a)], onew[g.trg(a)]);
      aold.push_back(static_cast<Id>(a));
    }
  Groupoid s = b.finish([&](Id x, Id y) { return anew[g.comp(aold[x], aold[y])]; },
                        [&](Id x) { return anew[g.inv(aold[x])]; },
                        [&](Id x) { return anew[g.unit(objects[x])]; });
  if (inclusion) *inclusion = Functor{s, g, objects, aold};
  return s;
}

Functor terminal_functor(const Groupoid& g, const Groupoid& pt) {
  if (pt.num_objects() != 1 || pt.num_arrows() != 1)
    fail(ErrorKind::BoundaryMismatch, "terminal functor needs a one-arrow codomain");
  return Functor{g, pt, std::vector<Id>(g.num_objects(), 0), std::vector<Id>(g.num_arrows(), 0)};
}

CharacteristicFunctor characteristic_functor(const Groupoid& g) {
  CharacteristicFunctor r{pair_groupoid(g.object_labels()), {}};
  const Id n = static_cast<Id>(g.num_objects());
  std::vector<Id> obj(n), arr(g.num_arrows());
  for (Id x = 0; x < n; ++x) obj[x] = x;
  for (std::size_t a = 0; a < arr.size(); ++a) arr[a] = g.src(a) * n + g.trg(a);
  r.chi = Functor{g, r.pair, std::move(obj), std::move(arr)};
  return r;
}

// ---------------------------------------------------------------- weak equivalences

Id WeakEquivalenceReport::ff_inverse(Id x1, Id x2, Id h) const {
  if (!fully_faithful)
    fail(ErrorKind::NotFullyFaithful, ff_violation ? *ff_violation : "functor is not fully faithful");
  const Groupoid &G = phi.dom, &H = phi.cod;
  if (H.src(h) != phi.obj[x1] || H.trg(h) != phi.obj[x2])
    fail(ErrorKind::BoundaryMismatch, "Phi^-1 queried at a triple outside its domain");
  if (!G.connected(x1, x2)) fail(ErrorKind::NotFullyFaithful, "objects in different components");
  return ff_inverse_table[G.hom_offset(x1, x2) + H.hom_index(h)];
}

WeakEquivalenceReport check_weak_equivalence(const Functor& phi) {
  WeakEquivalenceReport r;
  r.phi = phi;
  const Groupoid &G = phi.dom, &H = phi.cod;

  std::vector<Id> reach(H.num_components(), kNone);
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    const int c = H.component(phi.obj[x]);
    if (reach[c] == kNone) reach[c] = static_cast<Id>(x);
  }
  r.ess_witness.resize(H.num_objects());
  r.essentially_surjective = true;
  for (std::size_t y = 0; y < H.num_objects(); ++y) {
    const Id x = reach[H.component(y)];
    if (x == kNone) {
      r.essentially_surjective = false;
      if (!r.es_violation) r.es_violation = "object " + H.object_label(y) + " is not reached";
      continue;
    }
    r.ess_witness[y] = std::make_pair(x, H.hom(y, phi.obj[x])[0]);
  }

  r.fully_faithful = true;
  r.ff_inverse_table.assign(G.num_arrows(), kNone);
  std::vector<int> owner(H.num_components(), -1);
  for (std::size_t c = 0; c < G.num_components() && r.fully_faithful; ++c) {
    const auto& C = G.component_data(static_cast<int>(c));
    const Id root = C.objects.front();
    const int hc = H.component(phi.obj[root]);
    if (owner[hc] != -1) {
      const Id other = G.root(owner[hc]);
      r.fully_faithful = false;
      r.ff_violation = "Phi not surjective: no arrow " + G.object_label(other) + " -> " +
                       G.object_label(root) + " over " + H.object_label(phi.obj[other]) + " -> " +
                       H.object_label(phi.obj[root]);
      break;
    }
    owner[hc] = static_cast<int>(c);
    if (H.component_data(hc).order != C.order) {
      r.fully_faithful = false;
      r.ff_violation = "Phi not bijective: |Aut(" + G.object_label(root) + ")| = " +
                       std::to_string(C.order) + " but its image has " +
                       std::to_string(H.component_data(hc).order);
      break;
    }
    for (Id x1 : C.objects) {
      for (Id x2 : C.objects) {
        const std::size_t base = G.hom_offset(x1, x2);
        for (Id g : G.hom(x1, x2)) {
          const Id h = phi.arr[g];
          Id& slot = r.ff_inverse_table[base + H.hom_index(h)];
          if (slot != kNone) {
            r.fully_faithful = false;
            r.ff_violation = "Phi not injective: " + G.arrow_label(slot) + " and " + G.arrow_label(g) +
                             " both map to " + H.arrow_label(h);
            break;
          }
          slot = g;
        }
        if (!r.fully_faithful) break;
      }
      if (!r.fully_faithful) break;
    }
  }
  if (!r.fully_faithful) r.ff_inverse_table.clear();
  return r;
}

bool is_weak_equivalence(const Functor& phi) { return check_weak_equivalence(phi).is_weak_equivalence(); }

bool is_fully_faithful(const Functor& phi) { return check_weak_equivalence(phi).fully_faithful; }

bool check_subductive_weak_equivalence(const Functor& phi) {
  auto rep = check_weak_equivalence(phi);
  if (!rep.fully_faithful) return false;
  std::vector<char> hit(phi.cod.num_objects(), 0);
  for (Id y : phi.obj) hit[y] = 1;
  for (char c : hit)
    if (!c) return false;
  std::vector<char> ahit(phi.cod.num_arrows(), 0);
  for (Id h : phi.arr) ahit[h] = 1;
  for (char c : ahit) require(c, "subductive weak equivalence not surjective on arrows");
  return true;
}

FFInverse::FFInverse(const Functor& phi) : rep_(check_weak_equivalence(phi)) {
  if (!rep_.fully_faithful)
    fail(ErrorKind::NotFullyFaithful, rep_.ff_violation ? *rep_.ff_violation : "not fully faithful");
}

// ---------------------------------------------------------------- pullbacks

Id StrictPullback::find(Id x, Id y) const {
  auto it = objects.find(pair_key(x, y));
  return it == objects.end() ? kNone : it->second;
}

Id StrictPullback::find_arrow(Id g, Id h) const {
  auto it = arrows.find(pair_key(g, h));
  return it == arrows.end() ? kNone : it->second;
}

StrictPullback strict_pullback(const Functor& phi, const Functor& psi) {
  if (!(phi.cod == psi.cod)) fail(ErrorKind::BoundaryMismatch, "strict pullback: codomains differ");
  const Groupoid &G = phi.dom, &H = psi.dom, &K = phi.cod;
  std::vector<std::vector<Id>> over_obj(K.num_objects()), over_arr(K.num_arrows());
  for (std::size_t y = 0; y < H.num_objects(); ++y) over_obj[psi.obj[y]].push_back(static_cast<Id>(y));
  for (std::size_t h = 0; h < H.num_arrows(); ++h) over_arr[psi.arr[h]].push_back(static_cast<Id>(h));
  std::size_t count = 0;
  for (std::size_t g = 0; g < G.num_arrows(); ++g) count += over_arr[phi.arr[g]].size();
  check_size(count, "strict pullback");

  StrictPullback r;
  GroupoidBuilder b;
  std::vector<Id> p1o, p2o, p1a, p2a;
  for (std::size_t x = 0; x < G.num_objects(); ++x)
    for (Id y : over_obj[phi.obj[x]]) {
      Id o = b.add_object(tuple_label({G.object_label(x), H.object_label(y)}));
      r.objects[pair_key(static_cast<Id>(x), y)] = o;
      p1o.push_back(static_cast<Id>(x));
      p2o.push_back(y);
    }
  for (std::size_t g = 0; g < G.num_arrows(); ++g)
    for (Id h : over_arr[phi.arr[g]]) {
      Id s = r.objects.at(pair_key(G.src(g), H.src(h)));
      Id t = r.objects.at(pair_key(G.trg(g), H.trg(h)));
      Id a = b.add_arrow(tuple_label({G.arrow_label(g), H.arrow_label(h)}), s, t);
      r.arrows[pair_key(static_cast<Id>(g), h)] = a;
      p1a.push_back(static_cast<Id>(g));
      p2a.push_back(h);
    }
  r.groupoid = b.finish(
      [&](Id u, Id v) { return r.arrows.at(pair_key(G.comp(p1a[u], p1a[v]), H.comp(p2a[u], p2a[v]))); },
      [&](Id u) { return r.arrows.at(pair_key(G.inv(p1a[u]), H.inv(p2a[u]))); },
      [&](Id o) { return r.arrows.at(pair_key(G.unit(p1o[o]), H.unit(p2o[o]))); });
  r.pr1 = Functor{r.groupoid, G, p1o, p1a};
  r.pr2 = Functor{r.groupoid, H, p2o, p2a};
  return r;
}

Id WeakPullback::find(Id x, Id k, Id y) const {
  auto it = objects.find({x, k, y});
  return it == objects.end() ? kNone : it->second;
}

Id WeakPullback::find_arrow(Id g, Id k, Id h) const {
  auto it = arrows.find({g, k, h});
  return it == arrows.end() ? kNone : it->second;
}

WeakPullback weak_pullback(const Functor& phi, const Functor& psi) {
  if (!(phi.cod == psi.cod)) fail(ErrorKind::BoundaryMismatch, "weak pullback: codomains differ");
  const Groupoid &G = phi.dom, &H = psi.dom, &K = phi.cod;
  std::size_t count = 0;
  for (std::size_t x = 0; x < G.num_objects(); ++x)
    for (std::size_t y = 0; y < H.num_objects(); ++y)
      count += G.out_degree(x) * H.out_degree(y) * K.hom(phi.obj[x], psi.obj[y]).size();
  check_size(count, "weak pullback");

  WeakPullback w;
  w.phi = phi;
  w.psi = psi;
  GroupoidBuilder b;
  for (std::size_t x = 0; x < G.num_objects(); ++x)
    for (std::size_t y = 0; y < H.num_objects(); ++y)
      for (Id k : K.hom(phi.obj[x], psi.obj[y])) {
        std::array<Id, 3> t{static_cast<Id>(x), k, static_cast<Id>(y)};
        w.objects[t] = b.add_object(tuple_label({G.object_label(x), K.arrow_label(k), H.object_label(y)}));
        w.obj_triple.push_back(t);
      }
  w.arr_triple.reserve(count);
  for (std::size_t o = 0; o < w.obj_triple.size(); ++o) {
    const auto [x, k, y] = w.obj_triple[o];
    for (std::size_t p = 0; p < G.out_degree(x); ++p) {
      const Id g = G.out_arrow(x, p);
      const Id pg_inv = K.inv(phi.arr[g]);
      for (std::size_t q = 0; q < H.out_degree(y); ++q) {
        const Id h = H.out_arrow(y, q);
        const Id k2 = K.comp(psi.arr[h], k, pg_inv);
        const Id t = w.objects.at({G.trg(g), k2, H.trg(h)});
        const Id a = b.add_arrow(tuple_label({G.arrow_label(g), K.arrow_label(k), H.arrow_label(h)}),
                                 static_cast<Id>(o), t);
        w.arrows[{g, k, h}] = a;
        w.arr_triple.push_back({g, k, h});
      }
    }
  }
  const auto& AT = w.arr_triple;
  const auto& OT = w.obj_triple;
  w.groupoid = b.finish(
      [&](Id u, Id v) {
        return w.arrows.at({G.comp(AT[u][0], AT[v][0]), AT[v][1], H.comp(AT[u][2], AT[v][2])});
      },
      [&](Id u) {
        const auto [g, k, h] = AT[u];
        return w.arrows.at({G.inv(g), K.comp(psi.arr[h], k, K.inv(phi.arr[g])), H.inv(h)});
      },
      [&](Id o) { return w.arrows.at({G.unit(OT[o][0]), OT[o][1], H.unit(OT[o][2])}); });

  const std::size_t no = OT.size(), na = AT.size();
  std::vector<Id> o1(no), o3(no), a1(na), a3(na), comp2(no);
  for (std::size_t o = 0; o < no; ++o) {
    o1[o] = OT[o][0];
    comp2[o] = OT[o][1];
    o3[o] = OT[o][2];
  }
  for (std::size_t a = 0; a < na; ++a) {
    a1[a] = AT[a][0];
    a3[a] = AT[a][2];
  }
  w.pr1 = Functor{w.groupoid, G, std::move(o1), std::move(a1)};
  w.pr3 = Functor{w.groupoid, H, std::move(o3), std::move(a3)};
  w.pr2 = NatTrans{phi * w.pr1, psi * w.pr3, std::move(comp2)};
  return w;
}

Functor weak_pullback_mediator(const WeakPullback& w, const Functor& alpha, const Functor& beta,
                               const NatTrans& t) {
  if (!(alpha.cod == w.phi.dom) || !(beta.cod == w.psi.dom) || !(alpha.dom == beta.dom))
    fail(ErrorKind::BoundaryMismatch, "mediator: functors do not match the pullback");
  const Groupoid& L = alpha.dom;
  Functor th{L, w.groupoid, std::vector<Id>(L.num_objects()), std::vector<Id>(L.num_arrows())};
  for (std::size_t x = 0; x < L.num_objects(); ++x) {
    th.obj[x] = w.find(alpha.obj[x], t.at[x], beta.obj[x]);
    require(th.obj[x] != kNone, "mediator: component has the wrong endpoints");
  }
  for (std::size_t l = 0; l < L.num_arrows(); ++l) {
    th.arr[l] = w.find_arrow(alpha.arr[l], t.at[L.src(l)], beta.arr[l]);
    require(th.arr[l] != kNone, "mediator: arrow triple missing");
  }
  return th;
}

Functor strict_to_weak(const StrictPullback& s, const WeakPullback& w) {
  const Groupoid& P = s.groupoid;
  const Groupoid& K = w.phi.cod;
  Functor th{P, w.groupoid, std::vector<Id>(P.num_objects()), std::vector<Id>(P.num_arrows())};
  for (std::size_t o = 0; o < P.num_objects(); ++o) {
    const Id x = s.pr1.obj[o];
    th.obj[o] = w.find(x, K.unit(w.phi.obj[x]), s.pr2.obj[o]);
  }
  for (std::size_t a = 0; a < P.num_arrows(); ++a) {
    const Id g = s.pr1.arr[a];
    th.arr[a] = w.find_arrow(g, K.unit(w.phi.obj[w.phi.dom.src(g)]), s.pr2.arr[a]);
  }
  return th;
}

BaseChange base_change(const Groupoid& h, const std::vector<std::string>& points,
                       const std::vector<Id>& f) {
  const std::size_t n = points.size();
  std::size_t count = 0;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) count += h.hom(f[x1], f[x2]).size();
  check_size(count, "base change");
  GroupoidBuilder b;
  for (const auto& p : points) b.add_object(p);
  std::unordered_map<std::uint64_t, Id> base;
  std::vector<Id> s, t, under;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      auto hs = h.hom(f[x1], f[x2]);
      if (hs.empty()) continue;
      base[pair_key(static_cast<Id>(x1), static_cast<Id>(x2))] = static_cast<Id>(b.num_arrows());
      for (Id a : hs) {
        b.add_arrow(tuple_label({points[x1], points[x2], h.arrow_label(a)}), static_cast<Id>(x1),
                    static_cast<Id>(x2));
        s.push_back(static_cast<Id>(x1));
        t.push_back(static_cast<Id>(x2));
        under.push_back(a);
      }
    }
  auto find = [&](Id x1, Id x2, Id a) { return base.at(pair_key(x1, x2)) + h.hom_index(a); };
  BaseChange r;
  r.groupoid = b.finish([&](Id u, Id v) { return find(s[v], t[u], h.comp(under[u], under[v])); },
                        [&](Id u) { return find(t[u], s[u], h.inv(under[u])); },
                        [&](Id x) { return find(x, x, h.unit(f[x])); });
  r.comparison = Functor{r.groupoid, h, f, under};
  return r;
}

NatTrans rep_ff_factor(const Functor& phi, const Functor& psi, const Functor& psi2,
                       const NatTrans& s) {
  FFInverse finv(phi);
  std::vector<Id> at(psi.dom.num_objects());
  for (std::size_t z = 0; z < at.size(); ++z) at[z] = finv(psi.obj[z], psi2.obj[z], s.at[z]);
  NatTrans r{psi, psi2, std::move(at)};
  require((phi * r).at == s.at, "representable factorisation does not recover S");
  return r;
}

NatTrans coff_factor(const Functor& phi, const Functor& psi, const Functor& psi2,
                     const NatTrans& s) {
  if (!check_subductive_weak_equivalence(phi))
    fail(ErrorKind::NotSubductive, "co-fully faithful factorisation needs a subductive weak equivalence");
  std::vector<Id> at(phi.cod.num_objects(), kNone);
  for (std::size_t x = 0; x < phi.dom.num_objects(); ++x) {
    Id& slot = at[phi.obj[x]];
    if (slot == kNone) slot = s.at[x];
    require(slot == s.at[x], "co-fully faithful factorisation depends on the preimage");
  }
  return NatTrans{psi, psi2, std::move(at)};
}

}  // namespace gloc
