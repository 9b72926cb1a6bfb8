#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csg/chords.hpp"

using namespace csg;

namespace {
const char* kGenus1 = "[a b ~a ~b]";
// genus-2 diagram whose standard boundary word is a worked example
const char* kGenus2 = "[c ~b ~c d b ~a ~d a]";
}  // namespace

TEST_CASE("parse and format round-trip on normalized literals") {
  CHECK(format_diagram(parse_diagram(kGenus1)) == kGenus1);
  // parsing names chords by first occurrence, so this literal normalizes
  CHECK(format_diagram(parse_diagram(kGenus2)) == "[a ~b ~a c b ~d ~c d]");
  ChordDiagram c = parse_diagram(kGenus1);
  CHECK(c.k == 2);
  CHECK(c.chord_of == std::vector<int>{0, 1, 0, 1});
  CHECK(c.src_at == std::vector<char>{1, 1, 0, 0});
  CHECK(c.partner(0) == 2);
  CHECK(c.partner(1) == 3);
  CHECK(c.end_slot(0, true) == 0);
  CHECK(c.end_slot(0, false) == 2);
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(parse_diagram("[a b ~a]"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[a a ~a ~a]"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[a b ~a ~c]"), ParseError);
  CHECK_THROWS_AS(parse_diagram("a b ~a ~b"), ParseError);
  CHECK_THROWS_AS(parse_diagram("[a b ~a ~b"), ParseError);
}

TEST_CASE("keys separate structure and orientation") {
  ChordDiagram c1 = parse_diagram(kGenus1);
  ChordDiagram c2 = parse_diagram("[a ~a b ~b]");
  ChordDiagram c3 = parse_diagram("[~a b a ~b]");
  CHECK(unoriented_key(c1) != unoriented_key(c2));
  CHECK(unoriented_key(c1) == unoriented_key(c3));
  CHECK(oriented_key(c1) != oriented_key(c3));
}

TEST_CASE("realization of the genus-1 diagram, dart by dart") {
  Realization rz = realize_fatgraph(parse_diagram(kGenus1));
  CHECK(rz.away == std::vector<Dart>{8, 10, 9, 11});
  BoundaryOrder bo = boundary_order(rz.g);
  CHECK(bo.seq == std::vector<Dart>{0, 2, 4, 6, 11, 3, 8, 5, 10, 7, 9, 1});
  CHECK(validate_bordered(rz.g, true).ok);
  CHECK(validate_bordered(rz.g, true).genus == 1);
  CHECK_FALSE(validate_bordered(rz.g, false).ok);  // bivalent right end

  Realization sm = realize_smoothed(parse_diagram(kGenus1));
  CHECK(sm.smoothed);
  BorderedReport r = validate_bordered(sm.g);
  CHECK(r.ok);
  CHECK(r.genus == 1);
  CHECK(sm.g.vertices() == 4);
  CHECK(sm.g.edges() == 5);
}

TEST_CASE("generator order of the genus-1 diagram") {
  DiagramGeometry geo = geometry(parse_diagram(kGenus1));
  CHECK(geo.chords_by_rank == std::vector<int>{1, 0});  // b first, then a
  CHECK(geo.gen_index[0] == 2);
  CHECK(geo.gen_index[1] == 1);
  CHECK(geo.pref_slot[0] == 0);  // a preferred at its stored source end
  CHECK(geo.pref_slot[1] == 3);  // b preferred at its far end
}

TEST_CASE("standard marking and boundary word, genus 1") {
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);
  CHECK(m.val[0] == Word{2});
  CHECK(m.val[1] == Word{-1});
  CHECK(away_value(c, m, 0) == Word{2});
  CHECK(away_value(c, m, 1) == Word{-1});
  CHECK(away_value(c, m, 2) == Word{-2});
  CHECK(away_value(c, m, 3) == Word{1});
  CHECK(boundary_word(c) == Word{2, -1, -2, 1});
  CHECK(slot_product(c, m) == boundary_word(c));
}

TEST_CASE("standard marking and boundary word, genus 2 worked example") {
  ChordDiagram c = parse_diagram(kGenus2);
  // ids by first occurrence: c=0, b=1, d=2, a=3
  DiagramGeometry geo = geometry(c);
  CHECK(geo.chords_by_rank == std::vector<int>{3, 1, 0, 2});
  CHECK(geo.gen_index[3] == 1);
  CHECK(geo.gen_index[1] == 2);
  CHECK(geo.gen_index[0] == 3);
  CHECK(geo.gen_index[2] == 4);
  // every chord is preferred at its stored source end here
  CHECK(geo.pref_slot[0] == 0);
  CHECK(geo.pref_slot[1] == 4);
  CHECK(geo.pref_slot[2] == 3);
  CHECK(geo.pref_slot[3] == 7);
  CHECK(boundary_word(c) == Word{3, -2, -3, 4, 2, -1, -4, 1});
  BorderedReport r = validate_bordered(realize_smoothed(c).g);
  CHECK(r.ok);
  CHECK(r.genus == 2);
}

TEST_CASE("enumeration counts") {
  CHECK(all_diagrams_of_size(1).size() == 1);
  CHECK(all_diagrams_of_size(2).size() == 3);
  CHECK(all_diagrams_of_size(3).size() == 15);
  CHECK(all_diagrams_of_size(4).size() == 105);

  auto g1 = enumerate_bordered(1);
  REQUIRE(g1.size() == 1);
  CHECK(unoriented_key(g1[0]) == unoriented_key(parse_diagram(kGenus1)));

  CHECK(enumerate_bordered(2).size() == 21);

  // odd numbers of chords never give one boundary cycle
  int bordered3 = 0;
  for (const ChordDiagram& c : all_diagrams_of_size(3))
    bordered3 += boundary_cycles(realize_fatgraph(c).g).size() == 1;
  CHECK(bordered3 == 0);
}

TEST_CASE("slide validity") {
  ChordDiagram c = parse_diagram(kGenus1);
  CHECK(slide_valid(c, {0, 1}));
  CHECK(slide_valid(c, {1, 0}));
  CHECK(slide_valid(c, {2, 3}));
  CHECK(slide_valid(c, {3, 2}));
  CHECK_FALSE(slide_valid(c, {0, 2}));   // not adjacent
  CHECK_FALSE(slide_valid(c, {3, 4}));   // out of range
  CHECK_FALSE(slide_valid(c, {-1, 0}));  // out of range
  CHECK_FALSE(slide_valid(parse_diagram("[a ~a b ~b]"), {0, 1}));  // same chord
}

TEST_CASE("left mover crosses and lands right of the far end") {
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);
  SlideResult r = apply_slide(c, m, {0, 1});
  CHECK(r.c.chord_of == std::vector<int>{1, 0, 1, 0});
  CHECK(r.c.src_at == std::vector<char>{1, 0, 0, 1});
  CHECK(format_diagram(r.c) == "[b ~a ~b a]");
  CHECK(r.landing == 3);
  CHECK(r.m.val[0] == Word{2});
  CHECK(r.m.val[1] == Word{2, -1});
  CHECK(r.inverse == ChordSlide{3, 2});
  SlideResult back = apply_slide(r.c, r.m, r.inverse);
  CHECK(marked_key(back.c, back.m) == marked_key(c, m));
}

TEST_CASE("right mover crossing an arched chord keeps the pattern") {
  // b's source end sits between the two ends of a, so sliding it along a
  // returns it to the same slot with a new value on a
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);
  SlideResult r = apply_slide(c, m, {1, 0});
  CHECK(r.c == c);
  CHECK(r.landing == 1);
  CHECK(r.m.val[0] == Word{2, -1});
  CHECK(r.m.val[1] == Word{-1});
  CHECK(r.inverse == ChordSlide{1, 2});
  SlideResult back = apply_slide(r.c, r.m, r.inverse);
  CHECK(marked_key(back.c, back.m) == marked_key(c, m));
}

TEST_CASE("right mover lands left of the far end") {
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);
  SlideResult r = apply_slide(c, m, {3, 2});
  CHECK(format_diagram(r.c) == "[~b a b ~a]");
  CHECK(r.landing == 0);
  CHECK(r.m.val[0] == Word{-1, 2});
  CHECK(r.m.val[1] == Word{-1});
  CHECK(r.inverse == ChordSlide{0, 1});
}

TEST_CASE("every genus-1 slide undoes itself through its inverse") {
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);
  for (ChordSlide s : {ChordSlide{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}) {
    CAPTURE(s.mover);
    CAPTURE(s.along);
    REQUIRE(slide_valid(c, s));
    SlideResult r = apply_slide(c, m, s);
    SlideResult back = apply_slide(r.c, r.m, r.inverse);
    CHECK(marked_key(back.c, back.m) == marked_key(c, m));
  }
}

TEST_CASE("slide classification on the worked genus-1 slide") {
  ChordDiagram c = parse_diagram(kGenus1);
  SlideClass sc = classify_slide(c, {0, 1});
  // mover chord a was generator 2, along chord b was generator 1; the new
  // preferred value of b is a2 A1, the fifth shape
  CHECK(sc.type == 5);
  CHECK(sc.new_generator == Word{2, -1});
  CHECK(sc.changed_chord == 1);
  CHECK(sc.old_order == std::vector<int>{1, 0});
  CHECK(sc.new_order == std::vector<int>{0, 1});

  Endomorphism lift = slide_lift(c, {0, 1});
  CHECK(lift.image[0] == Word{2});
  CHECK(lift.image[1] == Word{2, -1});
}

TEST_CASE("classification agrees with the lift on every genus-1 slide") {
  ChordDiagram c = parse_diagram(kGenus1);
  for (ChordSlide s : {ChordSlide{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}) {
    CAPTURE(s.mover);
    CAPTURE(s.along);
    SlideClass sc = classify_slide(c, s);
    CHECK(sc.type >= 1);
    CHECK(sc.type <= 6);
    CHECK(sc.new_generator.size() == 2);
    Endomorphism lift = slide_lift(c, s);
    // the changed chord's image is the classified word; all other images are
    // single letters
    int two_letter = 0;
    for (const Word& w : lift.image) two_letter += w.size() == 2;
    CHECK(two_letter == 1);
  }
}

TEST_CASE("marked key ignores chord names and stored orientations") {
  ChordDiagram c = parse_diagram(kGenus1);
  DiagramMarking m = standard_diagram_marking(c);

  ChordDiagram renamed;
  renamed.k = 2;
  renamed.chord_of = {1, 0, 1, 0};
  renamed.src_at = {1, 1, 0, 0};
  DiagramMarking mr;
  mr.val = {m.val[1], m.val[0]};
  CHECK(marked_key(renamed, mr) == marked_key(c, m));

  ChordDiagram flipped = c;
  flipped.src_at = {0, 1, 1, 0};  // store chord a the other way around
  DiagramMarking mf = m;
  mf.val[0] = inverse(m.val[0]);
  CHECK(marked_key(flipped, mf) == marked_key(c, m));

  DiagramMarking other = m;
  other.val[0] = Word{1};
  CHECK(marked_key(c, other) != marked_key(c, m));
}
