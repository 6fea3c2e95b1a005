#include "gloc/io.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gloc {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  fail(ErrorKind::ParseError, where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> str_list(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where));
  return out;
}

std::vector<std::pair<std::string, std::string>> str_map(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object of strings");
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), str(it.value(), where));
  return out;
}

Id object_id(const Groupoid& g, const std::string& s, const std::string& where) {
  auto v = g.find_object(s);
  if (!v) fail(ErrorKind::DanglingReference, where + ": unknown object " + s);
  return *v;
}

Id arrow_id(const Groupoid& g, const std::string& s, const std::string& where) {
  auto v = g.find_arrow(s);
  if (!v) fail(ErrorKind::DanglingReference, where + ": unknown arrow " + s);
  return *v;
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) fail(ErrorKind::DanglingReference, std::string("unknown ") + kind + " " + name);
  return it->second;
}

Functor functor_from_json(const Workspace& w, const Json& j, const std::string& where) {
  if (j.is_string()) return w.functor(j.get<std::string>());
  const Groupoid& dom = w.groupoid(str(field(j, "dom", where), where));
  const Groupoid& cod = w.groupoid(str(field(j, "cod", where), where));
  std::vector<Id> obj(dom.num_objects(), kNone), arr(dom.num_arrows(), kNone);
  for (const auto& [a, b] : str_map(field(j, "objects", where), where + ".objects"))
    obj[object_id(dom, a, where)] = object_id(cod, b, where);
  for (const auto& [a, b] : str_map(field(j, "arrows", where), where + ".arrows"))
    arr[arrow_id(dom, a, where)] = arrow_id(cod, b, where);
  for (std::size_t x = 0; x < obj.size(); ++x)
    if (obj[x] == kNone) fail(ErrorKind::AxiomViolation, where + ": object " + dom.object_label(x) + " has no image");
  for (std::size_t a = 0; a < arr.size(); ++a)
    if (arr[a] == kNone) fail(ErrorKind::AxiomViolation, where + ": arrow " + dom.arrow_label(a) + " has no image");
  Functor f{dom, cod, std::move(obj), std::move(arr)};
  if (auto e = check_functor(f)) fail(ErrorKind::AxiomViolation, where + ": " + *e);
  return f;
}

std::vector<Id> components_from_json(const Functor& from, const Json& j, const std::string& where) {
  std::vector<Id> at(from.dom.num_objects(), kNone);
  for (const auto& [a, b] : str_map(j, where))
    at[object_id(from.dom, a, where)] = arrow_id(from.cod, b, where);
  for (std::size_t x = 0; x < at.size(); ++x)
    if (at[x] == kNone) fail(ErrorKind::AxiomViolation, where + ": no component at " + from.dom.object_label(x));
  return at;
}

NatTrans nat_from_json(const Workspace& w, const Json& j, const std::string& where) {
  Functor from = functor_from_json(w, field(j, "from", where), where + ".from");
  Functor to = functor_from_json(w, field(j, "to", where), where + ".to");
  if (!(from.dom == to.dom) || !(from.cod == to.cod))
    fail(ErrorKind::AxiomViolation, where + ": functors have different ends");
  auto at = components_from_json(from, field(j, "components", where), where + ".components");
  NatTrans s{std::move(from), std::move(to), std::move(at)};
  if (auto e = check_nat(s)) fail(ErrorKind::AxiomViolation, where + ": " + *e);
  return s;
}

GM span_from_json(const Workspace& w, const Json& j, const std::string& where) {
  if (j.is_string()) return w.span(j.get<std::string>());
  Functor l = functor_from_json(w, field(j, "left", where), where + ".left");
  Functor r = functor_from_json(w, field(j, "right", where), where + ".right");
  return make_gm(std::move(l), std::move(r));
}

TwoCellDiagram diagram_from_json(const Workspace& w, const Json& j, const std::string& where) {
  TwoCellDiagram c;
  c.source = span_from_json(w, field(j, "source", where), where + ".source");
  c.target = span_from_json(w, field(j, "target", where), where + ".target");
  c.alpha = functor_from_json(w, field(j, "alpha", where), where + ".alpha");
  c.alpha_p = functor_from_json(w, field(j, "alpha_p", where), where + ".alpha_p");
  const Functor f1 = c.source.left * c.alpha, t1 = c.target.left * c.alpha_p;
  const Functor f2 = c.source.right * c.alpha, t2 = c.target.right * c.alpha_p;
  c.s1 = NatTrans{f1, t1, components_from_json(f1, field(j, "s1", where), where + ".s1")};
  c.s2 = NatTrans{f2, t2, components_from_json(f2, field(j, "s2", where), where + ".s2")};
  validate_two_cell(c);
  return c;
}

Bibundle bibundle_from_json(const Workspace& w, const Json& j, const std::string& where) {
  const Groupoid& G = w.groupoid(str(field(j, "left", where), where));
  const Groupoid& H = w.groupoid(str(field(j, "right", where), where));
  auto points = str_list(field(j, "points", where), where + ".points");
  std::unordered_map<std::string, Id> pid;
  for (const auto& p : points)
    if (!pid.emplace(p, static_cast<Id>(pid.size())).second) parse_fail(where, "point " + p + " listed twice");
  auto point = [&](const std::string& s) {
    auto it = pid.find(s);
    if (it == pid.end()) fail(ErrorKind::DanglingReference, where + ": unknown point " + s);
    return it->second;
  };
  std::vector<Id> l(points.size(), kNone), r(points.size(), kNone);
  for (const auto& [p, x] : str_map(field(j, "left_anchor", where), where + ".left_anchor"))
    l[point(p)] = object_id(G, x, where);
  for (const auto& [p, x] : str_map(field(j, "right_anchor", where), where + ".right_anchor"))
    r[point(p)] = object_id(H, x, where);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (l[i] == kNone || r[i] == kNone)
      fail(ErrorKind::ActionAxiomViolation, where + ": point " + points[i] + " lacks an anchor");
  std::unordered_map<std::uint64_t, Id> lt, rt;
  auto triples = [&](const char* key) {
    const Json& a = field(j, key, where);
    if (!a.is_array()) parse_fail(where, std::string(key) + " must be an array");
    std::vector<std::array<std::string, 3>> out;
    for (const auto& e : a) {
      auto v = str_list(e, where + "." + key);
      if (v.size() != 3) parse_fail(where, std::string(key) + " entries have three fields");
      out.push_back({v[0], v[1], v[2]});
    }
    return out;
  };
  for (const auto& [g, p, q] : triples("left_action"))
    lt[pair_key(arrow_id(G, g, where), point(p))] = point(q);
  for (const auto& [p, h, q] : triples("right_action"))
    rt[pair_key(point(p), arrow_id(H, h, where))] = point(q);
  auto get = [&](const std::unordered_map<std::uint64_t, Id>& m, Id a, Id b) {
    auto it = m.find(pair_key(a, b));
    return it == m.end() ? kNone : it->second;
  };
  Bibundle b = make_bibundle(
      G, H, std::move(points), std::move(l), std::move(r), [&](Id g, Id x) { return get(lt, g, x); },
      [&](Id x, Id h) { return get(rt, x, h); });
  if (auto e = check_bibundle(b)) fail(ErrorKind::ActionAxiomViolation, where + ": " + *e);
  return b;
}

template <class T>
std::optional<std::string> name_of(const std::map<std::string, T>& m, const T& v) {
  for (const auto& [k, x] : m)
    if (x == v) return k;
  return std::nullopt;
}

std::string groupoid_name(const Workspace& w, const Groupoid& g) {
  auto n = name_of(w.groupoids, g);
  if (!n) fail(ErrorKind::DanglingReference, "groupoid without a name in the workspace");
  return *n;
}

Json functor_inline(const Workspace& w, const Functor& f) {
  Json j;
  j["dom"] = groupoid_name(w, f.dom);
  j["cod"] = groupoid_name(w, f.cod);
  Json o = Json::object(), a = Json::object();
  for (std::size_t x = 0; x < f.obj.size(); ++x) o[f.dom.object_label(x)] = f.cod.object_label(f.obj[x]);
  for (std::size_t e = 0; e < f.arr.size(); ++e) a[f.dom.arrow_label(e)] = f.cod.arrow_label(f.arr[e]);
  j["objects"] = std::move(o);
  j["arrows"] = std::move(a);
  return j;
}

Json functor_ref(const Workspace& w, const Functor& f) {
  if (auto n = name_of(w.functors, f)) return *n;
  return functor_inline(w, f);
}

Json components_json(const NatTrans& s) {
  Json c = Json::object();
  for (std::size_t x = 0; x < s.at.size(); ++x) c[s.from.dom.object_label(x)] = s.from.cod.arrow_label(s.at[x]);
  return c;
}

Json span_inline(const Workspace& w, const GM& s) {
  Json j;
  j["left"] = functor_ref(w, s.left);
  j["right"] = functor_ref(w, s.right);
  return j;
}

Json span_ref(const Workspace& w, const GM& s) {
  if (auto n = name_of(w.spans, s)) return *n;
  return span_inline(w, s);
}

Json bibundle_json(const Workspace& w, const Bibundle& b) {
  Json j;
  j["left"] = groupoid_name(w, b.G);
  j["right"] = groupoid_name(w, b.H);
  j["points"] = b.points;
  Json la = Json::object(), ra = Json::object(), lt = Json::array(), rt = Json::array();
  for (std::size_t x = 0; x < b.size(); ++x) {
    la[b.points[x]] = b.G.object_label(b.l[x]);
    ra[b.points[x]] = b.H.object_label(b.r[x]);
  }
  for (std::size_t x = 0; x < b.size(); ++x) {
    const Id xi = static_cast<Id>(x);
    for (std::size_t p = 0; p < b.G.out_degree(b.l[x]); ++p) {
      const Id g = b.G.out_arrow(b.l[x], p);
      lt.push_back(Json::array({b.G.arrow_label(g), b.points[x], b.points[b.act_left(g, xi)]}));
    }
    for (std::size_t p = 0; p < b.H.out_degree(b.r[x]); ++p) {
      const Id h = b.H.in_arrow(b.r[x], p);
      rt.push_back(Json::array({b.points[x], b.H.arrow_label(h), b.points[b.act_right(xi, h)]}));
    }
  }
  j["left_anchor"] = std::move(la);
  j["right_anchor"] = std::move(ra);
  j["left_action"] = std::move(lt);
  j["right_action"] = std::move(rt);
  return j;
}

}  // namespace

const Groupoid& Workspace::groupoid(const std::string& name) const { return lookup(groupoids, name, "groupoid"); }
const Functor& Workspace::functor(const std::string& name) const { return lookup(functors, name, "functor"); }
const GM& Workspace::span(const std::string& name) const { return lookup(spans, name, "span"); }
const TwoCellDiagram& Workspace::diagram(const std::string& name) const {
  return lookup(diagrams, name, "diagram");
}
const Bibundle& Workspace::bibundle(const std::string& name) const { return lookup(bibundles, name, "bibundle"); }

std::string Workspace::add_groupoid(const std::string& name, const Groupoid& g) {
  if (auto n = name_of(groupoids, g)) return *n;
  std::string k = name;
  for (int i = 2; groupoids.count(k); ++i) k = name + std::to_string(i);
  groupoids.emplace(k, g);
  return k;
}

Group parse_group(const std::string& name) {
  if (name == "trivial" || name == "C1") return cyclic_group(1);
  if (name == "S3") return symmetric_group3();
  if (name == "D4") return dihedral_group(4);
  if (name == "Q8") return quaternion_group();
  // products of cyclic groups, "C2xC3"
  std::optional<Group> g;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || part[0] != 'C' || part.find_first_not_of("0123456789", 1) != std::string::npos)
      fail(ErrorKind::ParseError, "unknown group " + name);
    const int n = std::stoi(part.substr(1));
    if (n < 1 || n > 64) fail(ErrorKind::ParseError, "cyclic factor out of range in " + name);
    g = g ? direct_product(*g, cyclic_group(n)) : cyclic_group(n);
  }
  if (!g) fail(ErrorKind::ParseError, "unknown group " + name);
  return *g;
}

Json groupoid_to_json(const Groupoid& g) {
  const RawGroupoid raw = to_raw(g);
  Json j;
  j["objects"] = raw.objects;
  Json arrows = Json::array();
  for (const auto& a : raw.arrows) arrows.push_back(Json{{"id", a.id}, {"src", a.src}, {"trg", a.trg}});
  j["arrows"] = std::move(arrows);
  Json u = Json::object(), i = Json::object(), c = Json::array();
  for (const auto& [x, a] : raw.units) u[x] = a;
  for (const auto& [a, b] : raw.inverse) i[a] = b;
  for (const auto& t : raw.compose) c.push_back(Json::array({t[0], t[1], t[2]}));
  j["units"] = std::move(u);
  j["inverse"] = std::move(i);
  j["compose"] = std::move(c);
  return j;
}

Groupoid groupoid_from_json(const Json& j) {
  const std::string where = "groupoid";
  if (j.is_object() && j.contains("group")) {
    const std::string obj = j.contains("object") ? str(j["object"], where) : "*";
    return one_object_groupoid(parse_group(str(j["group"], where)), obj);
  }
  if (j.is_object() && j.contains("pair")) return pair_groupoid(str_list(j["pair"], where));
  if (j.is_object() && j.contains("trivial")) return trivial_groupoid(str_list(j["trivial"], where));
  RawGroupoid raw;
  raw.objects = str_list(field(j, "objects", where), "objects");
  const Json& arrows = field(j, "arrows", where);
  if (!arrows.is_array()) parse_fail("arrows", "expected an array");
  for (const auto& a : arrows)
    raw.arrows.push_back({str(field(a, "id", "arrow"), "arrow.id"), str(field(a, "src", "arrow"), "arrow.src"),
                          str(field(a, "trg", "arrow"), "arrow.trg")});
  raw.units = str_map(field(j, "units", where), "units");
  raw.inverse = str_map(field(j, "inverse", where), "inverse");
  const Json& comp = field(j, "compose", where);
  if (!comp.is_array()) parse_fail("compose", "expected an array");
  for (const auto& e : comp) {
    auto v = str_list(e, "compose");
    if (v.size() != 3) parse_fail("compose", "entries are [g, f, g after f]");
    raw.compose.push_back({v[0], v[1], v[2]});
  }
  return validate_groupoid(raw);
}

Workspace parse_workspace(const std::string& text, const std::string& default_name) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  Workspace w;
  if (!j.is_object()) parse_fail("document", "expected a JSON object");
  if (j.contains("objects") || j.contains("group") || j.contains("pair") || j.contains("trivial")) {
    w.groupoids.emplace(default_name, groupoid_from_json(j));
    w.single_groupoid = true;
    return w;
  }
  static const char* known[] = {"groupoids", "functors", "transformations", "spans", "diagrams", "bibundles"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
      parse_fail("document", "unknown section '" + it.key() + "'");
  auto section = [&](const char* key) -> const Json& {
    static const Json empty = Json::object();
    auto it = j.find(key);
    if (it == j.end()) return empty;
    if (!it->is_object()) parse_fail(key, "expected an object keyed by name");
    return *it;
  };
  for (const auto& [k, v] : section("groupoids").items()) {
    try {
      w.groupoids.emplace(k, groupoid_from_json(v));
    } catch (const Error& e) {
      throw Error(e.kind(), "groupoid " + k + ": " + e.what(), e.details());
    }
  }
  for (const auto& [k, v] : section("functors").items())
    w.functors.emplace(k, functor_from_json(w, v, "functor " + k));
  for (const auto& [k, v] : section("transformations").items())
    w.transformations.emplace(k, nat_from_json(w, v, "transformation " + k));
  for (const auto& [k, v] : section("spans").items()) w.spans.emplace(k, span_from_json(w, v, "span " + k));
  for (const auto& [k, v] : section("diagrams").items())
    w.diagrams.emplace(k, diagram_from_json(w, v, "diagram " + k));
  for (const auto& [k, v] : section("bibundles").items())
    w.bibundles.emplace(k, bibundle_from_json(w, v, "bibundle " + k));
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Workspace load_workspace(const std::string& path) {
  return parse_workspace(read_file(path), std::filesystem::path(path).stem().string());
}

std::string dump_workspace(const Workspace& w) {
  if (w.single_groupoid && w.groupoids.size() == 1 && w.functors.empty() && w.spans.empty() &&
      w.bibundles.empty() && w.diagrams.empty() && w.transformations.empty())
    return groupoid_to_json(w.groupoids.begin()->second).dump(2) + "\n";
  Json j;
  Json gs = Json::object(), fs = Json::object(), ts = Json::object(), ss = Json::object(), ds = Json::object(),
       bs = Json::object();
  for (const auto& [k, g] : w.groupoids) gs[k] = groupoid_to_json(g);
  for (const auto& [k, f] : w.functors) fs[k] = functor_inline(w, f);
  for (const auto& [k, s] : w.transformations) {
    Json t;
    t["from"] = functor_ref(w, s.from);
    t["to"] = functor_ref(w, s.to);
    t["components"] = components_json(s);
    ts[k] = std::move(t);
  }
  for (const auto& [k, s] : w.spans) ss[k] = span_inline(w, s);
  for (const auto& [k, c] : w.diagrams) {
    Json d;
    d["source"] = span_ref(w, c.source);
    d["target"] = span_ref(w, c.target);
    d["alpha"] = functor_ref(w, c.alpha);
    d["alpha_p"] = functor_ref(w, c.alpha_p);
    d["s1"] = components_json(c.s1);
    d["s2"] = components_json(c.s2);
    ds[k] = std::move(d);
  }
  for (const auto& [k, b] : w.bibundles) bs[k] = bibundle_json(w, b);
  j["groupoids"] = std::move(gs);
  if (!fs.empty()) j["functors"] = std::move(fs);
  if (!ts.empty()) j["transformations"] = std::move(ts);
  if (!ss.empty()) j["spans"] = std::move(ss);
  if (!ds.empty()) j["diagrams"] = std::move(ds);
  if (!bs.empty()) j["bibundles"] = std::move(bs);
  return j.dump(2) + "\n";
}

void save_workspace(const Workspace& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << dump_workspace(w);
}

}  // namespace gloc
