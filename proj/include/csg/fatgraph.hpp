#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csg/words.hpp"

namespace csg {

// An oriented edge is a dart: one of the two directed sides of an edge.
// Darts are dense ints. rev(d) is the same edge in the other direction and
// head(d) is the vertex the dart points to. Unoriented edges are named by
// their smaller dart id.
using Dart = int;

struct Fatgraph {
  int darts = 0;
  std::vector<int> rev;                // dart -> opposite dart
  std::vector<int> head;               // dart -> vertex it points to
  std::vector<std::vector<int>> rot;   // vertex -> incoming darts, counterclockwise
  int tail = -1;                       // dart leaving the univalent base vertex

  int vertices() const { return static_cast<int>(rot.size()); }
  int edges() const { return darts / 2; }
  int edge_of(Dart d) const { return d < rev[d] ? d : rev[d]; }
  int valence(int v) const { return static_cast<int>(rot[v].size()); }

  // Throws DomainError when the arrays are inconsistent (bad involution,
  // rot/head mismatch, bad tail dart).
  void check_well_formed() const;
};

// Position of d inside rot[head(d)].
int rot_index(const Fatgraph& g, Dart d);

// The dart after d, counterclockwise, among the darts pointing to head(d).
Dart next_incoming(const Fatgraph& g, Dart d);
Dart prev_incoming(const Fatgraph& g, Dart d);

// Next oriented edge of the boundary cycle after d: the edge following d in
// the cyclic order at head(d), directed away from head(d).
Dart boundary_successor(const Fatgraph& g, Dart d);

// All orbits of boundary_successor, each starting at its smallest dart,
// listed by that smallest dart. Covers every dart exactly once.
std::vector<std::vector<Dart>> boundary_cycles(const Fatgraph& g);

struct BorderedReport {
  bool ok = false;
  int genus = -1;
  std::string error;  // names the first failing condition when !ok
};

// Checks the bordered shape: designated tail leaving the unique univalent
// vertex, every other vertex of valence >= 3 (one bivalent vertex tolerated
// when allow_bivalent is set, for diagrams carrying their rightmost point),
// and a single boundary cycle. Computes the genus from the Euler
// characteristic.
BorderedReport validate_bordered(const Fatgraph& g, bool allow_bivalent = false);

struct BoundaryOrder {
  std::vector<Dart> seq;  // the full boundary cycle, starting with the tail dart
  std::vector<int> rank;  // dart -> position in seq

  // The preferred direction of an edge is the one met first.
  bool preferred(const Fatgraph& g, Dart d) const { return rank[d] < rank[g.rev[d]]; }
  Dart preferred_dart(const Fatgraph& g, int edge) const;
};

// Requires a single boundary cycle and a tail. Throws DomainError otherwise.
BoundaryOrder boundary_order(const Fatgraph& g);

// Spanning data picked by the boundary order: an edge is in the tree exactly
// when its preferred dart is the first-visited dart pointing at its head.
// Equivalently, tree edges are the ones whose preferred dart first reaches
// its head vertex. Non-tree edges, by preferred dart, are the generators.
struct GeneratorSet {
  std::vector<char> in_tree;     // per dart (both darts of an edge agree)
  std::vector<Dart> generators;  // preferred darts of non-tree edges, by rank
  std::vector<Dart> spine;       // preferred darts of tree edges ranked below
                                 // every generator, by rank
};

GeneratorSet greedy_tree(const Fatgraph& g, const BoundaryOrder& bo);

struct CanonicalForm {
  std::string key;             // equal keys == isomorphic as tailed fatgraphs
  std::vector<int> dart_map;   // old dart -> canonical dart (first-visit rank)
};

CanonicalForm canonical_form(const Fatgraph& g);

// Rebuilds the graph under a dart renaming; vertex order and rotation start
// points are normalized so equal structures produce identical arrays.
Fatgraph relabeled(const Fatgraph& g, const std::vector<int>& dart_map);

// Removes a bivalent vertex, fusing its two edges into one. Returns the new
// graph and a dart map (old -> new, -1 for the two darts that disappeared).
std::pair<Fatgraph, std::vector<int>> smooth_bivalent(const Fatgraph& g, int v);

std::string to_dot(const Fatgraph& g);

}  // namespace csg
