#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "csg/io.hpp"

using namespace csg;

namespace {

Fatgraph theta_tail() {
  Fatgraph g;
  g.darts = 8;
  g.rev = {1, 0, 3, 2, 5, 4, 7, 6};
  g.head = {1, 0, 2, 1, 2, 1, 2, 1};
  g.rot.resize(3);
  g.rot[0] = {1};
  g.rot[1] = {0, 3, 5, 7};
  g.rot[2] = {2, 4, 6};
  g.tail = 0;
  g.check_well_formed();
  return g;
}

}  // namespace

TEST_CASE("fatgraph json round-trip") {
  Fatgraph g = theta_tail();
  std::string text = fatgraph_to_json(g);
  Fatgraph back = fatgraph_from_json(text);
  CHECK(back.darts == g.darts);
  CHECK(back.rev == g.rev);
  CHECK(back.head == g.head);
  CHECK(back.rot == g.rot);
  CHECK(back.tail == g.tail);
}

TEST_CASE("fatgraph json carries an optional marking") {
  Fatgraph g = theta_tail();
  Pi1Marking m = standard_marking(g);
  std::string text = fatgraph_to_json(g, &m);

  std::optional<Pi1Marking> back_m;
  Fatgraph back = fatgraph_from_json(text, &back_m);
  REQUIRE(back_m.has_value());
  CHECK(back_m->label == m.label);
  CHECK(back.darts == g.darts);

  std::optional<Pi1Marking> none;
  fatgraph_from_json(fatgraph_to_json(g), &none);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("diagram json round-trip") {
  ChordDiagram c = parse_diagram("[c ~b ~c d b ~a ~d a]");
  ChordDiagram back = diagram_from_json(diagram_to_json(c));
  CHECK(back == c);

  DiagramMarking m = standard_diagram_marking(c);
  std::optional<DiagramMarking> back_m;
  ChordDiagram again = diagram_from_json(diagram_to_json(c, &m), &back_m);
  CHECK(again == c);
  REQUIRE(back_m.has_value());
  CHECK(back_m->val == m.val);
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(fatgraph_from_json("{"), ParseError);
  CHECK_THROWS_AS(fatgraph_from_json("{\"half_edges\": 2}"), ParseError);
  CHECK_THROWS_AS(diagram_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(diagram_from_json("{\"slots\": [\"a\"]}"), ParseError);
}

TEST_CASE("slide files") {
  std::vector<ChordSlide> slides = {{0, 1}, {3, 2}};
  std::string text = format_slides(slides);
  CHECK(parse_slides(text) == slides);

  CHECK(parse_slides("# comment\n\n0 1\n  3 2\n").size() == 2);
  CHECK(parse_slides("").empty());
  CHECK_THROWS_AS(parse_slides("0\n"), ParseError);
  CHECK_THROWS_AS(parse_slides("a b\n"), ParseError);
}

TEST_CASE("matrix files") {
  MatZ m(2, 3);
  m << 1, -2, 3, 0, 5, -6;
  MatZ back = parse_matrix(format_matrix(m));
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  CHECK((back - m).cwiseAbs().sum() == 0);

  CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("x y\n"), ParseError);
}

TEST_CASE("whole-file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/csg-test-file"), ParseError);
  std::string path = "csg_io_test_tmp.txt";
  write_file(path, "payload\n");
  CHECK(read_file(path) == "payload\n");
  std::remove(path.c_str());
}
