// Command-line front end.  Exit codes: 0 success, 1 domain error, 2 bad input.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gloc/cech.hpp"
#include "gloc/io.hpp"
#include "gloc/laws.hpp"
#include "gloc/morita.hpp"

using namespace gloc;

namespace {

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string size_of(const Groupoid& g) {
  return plural(g.num_objects(), "object") + ", " + plural(g.num_arrows(), "arrow");
}

[[noreturn]] void usage(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

// The named groupoid, or the only one in the file.
const Groupoid& pick_groupoid(const Workspace& w, const std::string& name) {
  if (!name.empty()) return w.groupoid(name);
  if (w.groupoids.size() != 1) usage("file holds " + plural(w.groupoids.size(), "groupoid") + "; name one");
  return w.groupoids.begin()->second;
}

template <class T>
const T& pick(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  if (name.empty()) {
    if (m.size() != 1) usage(std::string("name the ") + kind + " to use");
    return m.begin()->second;
  }
  auto it = m.find(name);
  if (it == m.end()) fail(ErrorKind::DanglingReference, std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

void register_gm(Workspace& w, const GM& a, const std::string& stem) {
  w.add_groupoid(stem + "_source", a.source());
  w.add_groupoid(stem + "_target", a.target());
  w.add_groupoid(stem + "_apex", a.apex);
}

void register_bibundle(Workspace& w, const Bibundle& b, const std::string& stem) {
  w.add_groupoid(stem + "_left", b.G);
  w.add_groupoid(stem + "_right", b.H);
}

std::string describe(const GM& a) {
  return "span, apex " + size_of(a.apex) + (is_anafunctor(a) ? ", anafunctor" : "");
}

std::string describe(const Bibundle& b) {
  const Principality p = check_principality(b);
  return "bibundle, " + plural(b.size(), "point") +
         (p.biprincipal() ? ", biprincipal" : p.right_principal ? ", right principal" : "");
}

// ---- DOT --------------------------------------------------------------------

std::string q(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

void dot_groupoid(std::ostream& out, const Groupoid& g, const std::string& prefix, const std::string& indent) {
  for (const auto& x : g.object_labels()) out << indent << q(prefix + x) << " [label=" << q(x) << "];\n";
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    if (g.is_unit(static_cast<Id>(a))) continue;
    out << indent << q(prefix + g.object_label(g.src(a))) << " -> " << q(prefix + g.object_label(g.trg(a)))
        << " [label=" << q(g.arrow_label(a)) << "];\n";
  }
}

std::string dot_groupoid(const Groupoid& g) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  dot_groupoid(out, g, "", "  ");
  out << "}\n";
  return out.str();
}

// Points in the middle, anchors drawn as edges to the two object sets.
std::string dot_bibundle(const Bibundle& b) {
  std::ostringstream out;
  out << "digraph bibundle {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  subgraph cluster_left {\n    label=\"G\";\n";
  for (const auto& x : b.G.object_labels()) out << "    " << q("G:" + x) << " [label=" << q(x) << "];\n";
  out << "  }\n  subgraph cluster_points {\n    label=\"X\";\n    node [shape=point];\n";
  for (const auto& p : b.points) out << "    " << q("X:" + p) << " [xlabel=" << q(p) << "];\n";
  out << "  }\n  subgraph cluster_right {\n    label=\"H\";\n";
  for (const auto& x : b.H.object_labels()) out << "    " << q("H:" + x) << " [label=" << q(x) << "];\n";
  out << "  }\n";
  for (std::size_t x = 0; x < b.size(); ++x) {
    out << "  " << q("G:" + b.G.object_label(b.l[x])) << " -> " << q("X:" + b.points[x])
        << " [dir=back, style=dashed];\n";
    out << "  " << q("X:" + b.points[x]) << " -> " << q("H:" + b.H.object_label(b.r[x])) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

// ---- commands ---------------------------------------------------------------

int cmd_validate(const std::string& path, bool emit) {
  const Workspace w = load_workspace(path);
  if (emit) {
    std::cout << dump_workspace(w);
    return 0;
  }
  if (w.single_groupoid) {
    std::cout << "OK: groupoid, " << size_of(w.groupoids.begin()->second) << "\n";
    return 0;
  }
  std::vector<std::string> parts;
  auto add = [&](std::size_t n, const char* word) {
    if (n) parts.push_back(plural(n, word));
  };
  add(w.groupoids.size(), "groupoid");
  add(w.functors.size(), "functor");
  add(w.transformations.size(), "transformation");
  add(w.spans.size(), "span");
  add(w.diagrams.size(), "diagram");
  add(w.bibundles.size(), "bibundle");
  std::cout << "OK: workspace";
  for (const auto& p : parts) std::cout << ", " << p;
  std::cout << "\n";
  return 0;
}

int cmd_compose(const std::string& path, const std::string& mode, const std::string& a, const std::string& b,
                bool emit) {
  const Workspace w = load_workspace(path);
  Workspace out;
  if (mode == "bi") {
    const Bibundle t = tensor(w.bibundle(a), w.bibundle(b));
    register_bibundle(out, t, "composite");
    out.bibundles.emplace("composite", t);
    if (!emit) std::cout << "composite: " << describe(t) << "\n";
  } else {
    GM r;
    if (mode == "gm") {
      r = compose_gm(w.span(a), w.span(b));
    } else if (mode == "ana") {
      const GM& x = w.span(a);
      const GM& y = w.span(b);
      r = compose_ana(make_anafunctor(x.left, x.right), make_anafunctor(y.left, y.right));
    } else {
      usage("--mode must be gm, ana or bi");
    }
    register_gm(out, r, "composite");
    out.spans.emplace("composite", r);
    if (!emit) std::cout << "composite: " << describe(r) << "\n";
  }
  if (emit) std::cout << dump_workspace(out);
  return 0;
}

int cmd_check_we(const std::string& path, const std::string& name) {
  const Workspace w = load_workspace(path);
  const Functor& f = pick(w.functors, name, "functor");
  const WeakEquivalenceReport rep = check_weak_equivalence(f);
  if (rep.is_weak_equivalence()) {
    std::cout << "weak equivalence" << (check_subductive_weak_equivalence(f) ? ", subductive" : "") << "\n";
  } else {
    std::cout << "NOT a weak equivalence: "
              << (rep.es_violation ? *rep.es_violation : rep.ff_violation.value_or("")) << "\n";
  }
  return 0;
}

int cmd_canonical(const std::string& path, const std::string& name, bool emit) {
  const Workspace w = load_workspace(path);
  const TwoCellDiagram& c = pick(w.diagrams, name, "diagram");
  const bool ana = is_anafunctor(c.source) && is_anafunctor(c.target);
  const Transformation t = ana ? canonical_2cell(c) : canonical_2cell_gm(c);
  validate_transformation(t);
  if (!emit) {
    std::cout << "transformation, " << plural(t.at.size(), "component")
              << (ana ? "" : " (ends anafunctised)") << "\n";
    return 0;
  }
  Json comps = Json::object();
  for (std::size_t p = 0; p < t.at.size(); ++p)
    comps[t.base.groupoid.object_label(p)] = t.target.right.cod.arrow_label(t.at[p]);
  std::cout << Json{{"components", comps}}.dump(2) << "\n";
  return 0;
}

int cmd_to_bibundle(const std::string& path, const std::string& name, bool emit) {
  const Workspace w = load_workspace(path);
  Bibundle b;
  if (w.functors.count(name)) {
    b = bibundlise(w.functor(name));
  } else if (w.spans.count(name)) {
    b = gm_to_bibundle(w.span(name));
  } else if (name.empty() && w.functors.size() + w.spans.size() == 1) {
    b = w.functors.empty() ? gm_to_bibundle(w.spans.begin()->second) : bibundlise(w.functors.begin()->second);
  } else {
    fail(ErrorKind::DanglingReference, "no functor or span named '" + name + "'");
  }
  if (!emit) {
    std::cout << describe(b) << "\n";
    return 0;
  }
  Workspace out;
  register_bibundle(out, b, "bundle");
  out.bibundles.emplace("bundle", b);
  std::cout << dump_workspace(out);
  return 0;
}

int cmd_to_anafunctor(const std::string& path, const std::string& name, bool emit) {
  const Workspace w = load_workspace(path);
  const Anafunctor a = bibundle_to_anafunctor(pick(w.bibundles, name, "bibundle"));
  if (!emit) {
    std::cout << describe(a) << "\n";
    return 0;
  }
  Workspace out;
  register_gm(out, a, "ana");
  out.spans.emplace("ana", a);
  std::cout << dump_workspace(out);
  return 0;
}

int cmd_morita(const std::vector<std::string>& files, const std::string& left, const std::string& right,
               bool emit) {
  Groupoid g, h;
  if (files.size() == 2) {
    g = pick_groupoid(load_workspace(files[0]), left);
    h = pick_groupoid(load_workspace(files[1]), right);
  } else {
    const Workspace w = load_workspace(files[0]);
    if (left.empty() || right.empty()) usage("with one file, give --left and --right");
    g = w.groupoid(left);
    h = w.groupoid(right);
  }
  const MoritaResult r = are_morita_equivalent(g, h);
  if (!r.equivalent) {
    std::cout << "NOT equivalent: " << r.reason << "\n";
    return 0;
  }
  if (emit && r.witness) {
    Workspace out;
    register_bibundle(out, *r.witness, "witness");
    out.bibundles.emplace("witness", *r.witness);
    std::cout << dump_workspace(out);
    return 0;
  }
  std::cout << "equivalent: biprincipal bibundle with " << plural(r.witness ? r.witness->size() : 0, "point")
            << "\n";
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& name) {
  const Workspace w = load_workspace(path);
  const Groupoid& g = pick_groupoid(w, name);
  const Skeleton sk = skeleton(g);
  const OrbitSpace os = orbit_space(g);
  const Groupoid ig = inertia_groupoid(g);
  std::cout << "size: " << size_of(g) << "\n";
  std::cout << "orbits: " << sk.reps.size() << "\n";
  std::cout << "fibrating: " << (is_fibrating(g) ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < sk.reps.size(); ++i)
    std::cout << "stabilizer " << os.labels[i] << ": " << group_name(sk.autos[i]) << "\n";
  std::cout << "inertia: " << size_of(ig) << ", " << plural(skeleton(ig).reps.size(), "orbit") << "\n";
  return 0;
}

Cover cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("charts")) usage("cover needs 'base' and 'charts'");
  const auto base = j["base"].get<std::vector<std::string>>();
  std::vector<std::vector<Id>> subsets;
  auto subset = [&](const Json& c) {
    std::vector<Id> s;
    for (const auto& p : c.get<std::vector<std::string>>()) {
      auto it = std::find(base.begin(), base.end(), p);
      if (it == base.end()) fail(ErrorKind::DanglingReference, "chart point '" + p + "' is not in the base");
      s.push_back(static_cast<Id>(it - base.begin()));
    }
    return s;
  };
  if (j["charts"].is_object()) {
    for (const auto& [k, c] : j["charts"].items()) subsets.push_back(subset(c));
  } else {
    for (const auto& c : j["charts"]) subsets.push_back(subset(c));
  }
  return subset_cover(base, subsets);
}

int cmd_cech(const std::string& path, const std::string& group, bool exhaustive, int points, int charts) {
  const Group g = parse_group(group);
  if (exhaustive) {
    const CechSweep s = cech_sweep(points, charts, g);
    for (const auto& f : s.failures) std::cout << "FAIL " << f << "\n";
    std::cout << group_name(g) << ": " << s.passed << "/" << s.covers << " covers passed\n";
    return s.passed == s.covers ? 0 : 1;
  }
  if (path.empty()) usage("give a cover file or --exhaustive");
  Cover c;
  try {
    c = cover_from_json(Json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  const CechReport r = cech_equivalence_check(c, g);
  std::cout << "cocycles: " << r.cocycles << ", classes " << r.cocycle_classes << ", automorphisms "
            << r.cocycle_aut << "\n";
  std::cout << "bundles: " << r.bundles << ", classes " << r.bundle_classes << ", automorphisms "
            << r.bundle_aut << "\n";
  if (r.ok()) {
    std::cout << "OK: cocycle and bundle categories equivalent"
              << (r.all_pairs ? "" : " (full faithfulness on representatives)") << "\n";
    return 0;
  }
  std::cout << "FAIL: functorial " << r.functorial << ", essentially surjective " << r.essentially_surjective
            << ", fully faithful " << r.fully_faithful << "\n";
  return 1;
}

int cmd_laws(const std::string& suite, std::uint64_t seed, std::size_t count, bool transcript) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    suites = {suite};
  } else {
    usage("unknown suite '" + suite + "'");
  }
  bool ok = true;
  for (const auto& s : suites) {
    const SuiteResult r = run_suite(s, seed, count ? count : default_count(s));
    ok = ok && r.ok();
    if (transcript) {
      std::cout << r.transcript();
    } else {
      for (const auto& line : r.lines)
        if (line.find(" FAIL ") != std::string::npos) std::cout << line << "\n";
      if (suites.size() > 1) std::cout << s << ": ";
      std::cout << r.passed << "/" << r.total << " passed\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& name) {
  const Workspace w = load_workspace(path);
  if (!name.empty() && w.bibundles.count(name)) {
    std::cout << dot_bibundle(w.bibundle(name));
  } else if (name.empty() && w.groupoids.empty() && w.bibundles.size() == 1) {
    std::cout << dot_bibundle(w.bibundles.begin()->second);
  } else {
    std::cout << dot_groupoid(pick_groupoid(w, name));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, generalized morphisms, anafunctors and bibundles"};
  app.require_subcommand(1);

  std::string file, name, name2, mode = "gm", suite, group = "C2", left, right;
  std::vector<std::string> files;
  bool emit = false, exhaustive = false, transcript = false;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  int points = 3, charts = 3;

  auto* validate = app.add_subcommand("validate", "Check a file and summarise it");
  validate->add_option("file", file)->required();
  validate->add_flag("--emit", emit, "Print the canonical form of the file");

  auto* compose = app.add_subcommand("compose", "Compose two spans or bibundles from one file");
  compose->add_option("file", file)->required();
  compose->add_option("first", name)->required();
  compose->add_option("second", name2)->required();
  compose->add_option("--mode", mode, "gm, ana or bi")->check(CLI::IsMember({"gm", "ana", "bi"}));
  compose->add_flag("--emit", emit);

  auto* check_we = app.add_subcommand("check-we", "Decide whether a functor is a weak equivalence");
  check_we->add_option("file", file)->required();
  check_we->add_option("functor", name);

  auto* canon = app.add_subcommand("canonical-2cell", "Canonical transformation of a 2-cell diagram");
  canon->add_option("file", file)->required();
  canon->add_option("diagram", name);
  canon->add_flag("--emit", emit);

  auto* to_bi = app.add_subcommand("to-bibundle", "Bibundle of a functor or a span");
  to_bi->add_option("file", file)->required();
  to_bi->add_option("name", name);
  to_bi->add_flag("--emit", emit);

  auto* to_ana = app.add_subcommand("to-anafunctor", "Anafunctor of a right principal bibundle");
  to_ana->add_option("file", file)->required();
  to_ana->add_option("bibundle", name);
  to_ana->add_flag("--emit", emit);

  auto* morita = app.add_subcommand("morita", "Decide Morita equivalence of two groupoids");
  morita->add_option("files", files)->required()->expected(1, 2);
  morita->add_option("--left", left, "Groupoid name in the first file");
  morita->add_option("--right", right, "Groupoid name in the second file");
  morita->add_flag("--emit", emit, "Print the witness bibundle");

  auto* inv = app.add_subcommand("invariants", "Orbits, stabilizers and inertia of a groupoid");
  inv->add_option("file", file)->required();
  inv->add_option("groupoid", name);

  auto* cech = app.add_subcommand("cech", "Compare cocycles and bundles on a cover");
  cech->add_option("cover", file);
  cech->add_option("--group", group, "Abelian coefficient group, e.g. C2");
  cech->add_flag("--exhaustive", exhaustive, "Every cover of a small base");
  cech->add_option("--points", points)->check(CLI::Range(0, 4));
  cech->add_option("--charts", charts)->check(CLI::Range(0, 4));

  auto* laws = app.add_subcommand("laws", "Run a fuzzed law suite");
  laws->add_option("--suite", suite, "Suite name or 'all'")->required();
  laws->add_option("--seed", seed);
  laws->add_option("--count", count, "Cases (default depends on the suite)");
  laws->add_flag("--transcript", transcript, "Print every case");

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing of a groupoid or bibundle");
  dot->add_option("file", file)->required();
  dot->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file, emit);
    if (*compose) return cmd_compose(file, mode, name, name2, emit);
    if (*check_we) return cmd_check_we(file, name);
    if (*canon) return cmd_canonical(file, name, emit);
    if (*to_bi) return cmd_to_bibundle(file, name, emit);
    if (*to_ana) return cmd_to_anafunctor(file, name, emit);
    if (*morita) return cmd_morita(files, left, right, emit);
    if (*inv) return cmd_invariants(file, name);
    if (*cech) return cmd_cech(file, group, exhaustive, points, charts);
    if (*laws) return cmd_laws(suite, seed, count, transcript);
    if (*dot) return cmd_export_dot(file, name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) std::cerr << "  " << d << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
