#include "common.hpp"
#include "gloc/io.hpp"

using namespace t;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Inconsistent;
}

std::string data(const std::string& f) { return std::string(GLOC_DATA_DIR) + "/" + f; }

}  // namespace

TEST_CASE("shorthand groupoids") {
  const Workspace w = parse_workspace(R"J({"pair": ["0", "1"]})J", "p");
  CHECK(w.single_groupoid);
  CHECK(w.groupoid("p") == pair2());
  CHECK(parse_workspace(R"J({"group": "C3"})J").groupoid("G") == bc(3));
  CHECK(parse_group("C2xC2").order() == 4);
  CHECK(parse_group("Q8").order() == 8);
  CHECK_THROWS_AS(parse_group("C0"), Error);
}

TEST_CASE("canonical files round trip byte for byte") {
  for (const char* f : {"pair2.gpd", "bc2.gpd", "pt.gpd", "disc3.gpd"}) {
    const std::string text = read_file(data(f));
    CHECK(dump_workspace(load_workspace(data(f))) == text);
  }
  const std::string once = dump_workspace(load_workspace(data("workspace.json")));
  CHECK(dump_workspace(parse_workspace(once)) == once);
}

TEST_CASE("workspace contents survive a round trip") {
  const Workspace w = load_workspace(data("workspace.json"));
  const Workspace v = parse_workspace(dump_workspace(w));
  CHECK(v.groupoids.size() == w.groupoids.size());
  CHECK(v.functor("collapse") == w.functor("collapse"));
  CHECK(v.span("s") == w.span("s"));
  CHECK(v.bibundle("Y") == w.bibundle("Y"));
  CHECK(two_cells_equal(v.diagram("twist"), w.diagram("twist")));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_workspace("{\"objects\": [\"a\",\n  }");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("input errors are classified") {
  CHECK(kind_of(R"J({"widgets": {}})J") == ErrorKind::ParseError);
  CHECK(kind_of(R"J({"groupoids": {"P": {"pair": ["a"]}}, "functors": {"f": {"dom": "P", "cod": "Q",
              "objects": {}, "arrows": {}}}})J") == ErrorKind::DanglingReference);
  // Not a functor: the unit goes to a non-unit.
  CHECK(kind_of(R"J({"groupoids": {"T": {"trivial": ["t"]}, "B": {"group": "C2"}},
              "functors": {"f": {"dom": "T", "cod": "B", "objects": {"t": "*"}, "arrows": {"(t,t)": "g1"}}}})J") ==
        ErrorKind::AxiomViolation);
  // The generator acts trivially on one point but the unit moves it.
  CHECK(kind_of(R"J({"groupoids": {"T": {"trivial": ["t"]}, "B": {"group": "C2"}},
              "bibundles": {"X": {"left": "T", "right": "B", "points": ["p", "q"],
                "left_anchor": {"p": "t", "q": "t"}, "right_anchor": {"p": "*", "q": "*"},
                "left_action": [["(t,t)", "p", "p"], ["(t,t)", "q", "q"]],
                "right_action": [["p", "e", "q"], ["p", "g1", "p"], ["q", "e", "q"], ["q", "g1", "q"]]}}})J") ==
        ErrorKind::ActionAxiomViolation);
  CHECK(is_input_error(ErrorKind::ParseError));
  CHECK(is_input_error(ErrorKind::AxiomViolation));
  CHECK_FALSE(is_input_error(ErrorKind::NotBiprincipal));
}
