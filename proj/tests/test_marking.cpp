#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csg/chords.hpp"
#include "csg/marking.hpp"

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

bool eqm(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.size() == 0 || (a - b).cwiseAbs().sum() == 0;
}

}  // namespace

TEST_CASE("standard marking labels the generators and closes the vertices") {
  Fatgraph g = theta_tail();
  Pi1Marking m = standard_marking(g);
  CHECK(m.label[5] == Word{1});
  CHECK(m.label[4] == Word{-1});
  CHECK(m.label[6] == Word{2});
  CHECK(m.label[0] == Word{2, -1, -2, 1});
  CHECK(validate_marking(g, m).ok);
  CHECK(validate_marking(g, m, Word{2, -1, -2, 1}).ok);
}

TEST_CASE("violations are reported in a fixed order") {
  Fatgraph g = theta_tail();

  Pi1Marking m = standard_marking(g);
  m.label[4] = Word{2};  // no longer inverse to label 5
  MarkingReport r = validate_marking(g, m);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "orientation");
  CHECK(r.witness == 4);  // edges are named by their smaller dart

  m = standard_marking(g);
  m.label[5] = Word{2};
  m.label[4] = Word{-2};  // orientation fine, vertex products broken
  r = validate_marking(g, m);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "vertex");

  Pi1Marking collapsed = propagate_from_generators(g, {Word{1}, Word{1}});
  r = validate_marking(g, collapsed);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "surjectivity");

  r = validate_marking(g, standard_marking(g), Word{1});
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "geometricity");
}

TEST_CASE("propagation recovers the standard marking") {
  Fatgraph g = theta_tail();
  Pi1Marking m = propagate_from_generators(g, {Word{1}, Word{2}});
  CHECK(m == standard_marking(g));

  Pi1Marking twisted = propagate_from_generators(g, {Word{1}, Word{1, 2}});
  CHECK(validate_marking(g, twisted).ok);
  CHECK(twisted.label[6] == Word{1, 2});
}

TEST_CASE("abelianization of words and markings") {
  VecZ v = abelianized(Word{1, -2, 1}, 2);
  CHECK(v(0) == 2);
  CHECK(v(1) == -1);
  CHECK(abelianized(Word{}, 3).isZero());

  Fatgraph g = theta_tail();
  HMarking h = abelianize(g, standard_marking(g), 2);
  CHECK(h.rank == 2);
  CHECK(h.label[5](0) == 1);
  CHECK(h.label[5](1) == 0);
  CHECK(h.label[0].isZero());  // the tail label is null-homologous
}

TEST_CASE("boundary pairing of the genus-1 chords") {
  Realization rz = realize_fatgraph(parse_diagram("[a b ~a ~b]"));
  BoundaryOrder bo = boundary_order(rz.g);
  CHECK(pairing(rz.g, bo, 11, 8) == -1);
  CHECK(pairing(rz.g, bo, 8, 11) == 1);
  CHECK(pairing(rz.g, bo, 11, 10) == 0);  // same edge
  CHECK(pairing(rz.g, bo, 8, 8) == 0);
  CHECK(pairing(rz.g, bo, 11, 3) == -1);  // chords pair with tree darts too

  MatZ p = pairing_matrix(rz.g, bo, {11, 8});
  MatZ expect(2, 2);
  expect << 0, -1, 1, 0;
  CHECK(eqm(p, expect));
}

TEST_CASE("integer matrix helpers") {
  MatZ d(2, 2);
  d << 2, 0, 0, 3;
  CHECK(det_integer(d) == 6);
  CHECK_FALSE(is_unimodular(d));

  MatZ j = standard_symplectic_form(1);
  CHECK(det_integer(j) == 1);
  CHECK(is_unimodular(j));
  CHECK(j(0, 1) == 1);
  CHECK(j(1, 0) == -1);

  MatZ j2 = standard_symplectic_form(2);
  CHECK(j2.rows() == 4);
  CHECK(j2(0, 1) == 1);
  CHECK(j2(2, 3) == 1);
  CHECK(j2(0, 2) == 0);
  CHECK(eqm(j2 * j2, MatZ(-MatZ::Identity(4, 4))));
}
