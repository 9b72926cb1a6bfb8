#pragma once

#include <array>
#include <string>
#include <vector>

#include "csg/marking.hpp"

namespace csg {

// Collapse a non-tail edge of a trivalent bordered fatgraph and expand the
// resulting 4-valent vertex the other way. The replacement edge reuses the
// dart ids of the input edge; its label is recomputed from the vertex
// conditions, everything else is untouched. Doing the move twice returns the
// original marked graph up to swapping the edge's two darts.
struct MoveResult {
  Fatgraph g;
  Pi1Marking m;
  Dart new_edge = -1;  // edge id of the replacement edge (same as the input)
};

MoveResult apply_whitehead(const Fatgraph& g, const Pi1Marking& m, int edge);

// Contract one edge (merging its endpoints' rotations). Returns the new graph
// and the dart map (-1 for the two contracted darts).
std::pair<Fatgraph, std::vector<int>> contract_edge(const Fatgraph& g, int edge);

// Move type 1..6, read off the transported generating system: types 1/2
// leave it alone, 3/4 rewrite one generator value (new value bc resp. b̄c),
// 5/6 rewrite one value and cyclically shift the generators in between.
// corner_label records the four boundary corners at the collapsed vertex,
// read clockwise from the first-visited one and numbered 1..4 by visit
// order; types 1 and 2 correspond to the readings 1432 and 1342.
struct MoveClass {
  int type = 0;
  std::array<int, 4> corner_label{};
};

MoveClass classify_move(const Fatgraph& g, int edge);

// Boundary corners at a vertex (corner i sits between consecutive incoming
// darts i and i+1), numbered by visit order and read clockwise from the
// first-visited one.
std::vector<int> corner_visit_label(const Fatgraph& g, const BoundaryOrder& bo, int vertex);

// Images of the new generators in the old basis (transport of the standard
// marking through the move).
Endomorphism nielsen_lift(const Fatgraph& g, int edge);

enum class MoveRelation { Involutivity, Commutativity, Pentagon };

struct MoveLogEntry {
  std::string graph_key;  // canonical key before the move
  int edge = -1;
  int type = 0;
};

struct MoveSequence {
  std::vector<MoveLogEntry> log;
  Fatgraph end_g;
  Pi1Marking end_m;
};

// Involutivity: two moves on one edge. Commutativity: four moves on two
// edges sharing no vertex. Pentagon: five moves alternating between two
// edges sharing one vertex. Each sequence ends at the marked graph it
// started from; relation_sequence checks that and throws otherwise.
MoveSequence relation_sequence(const Fatgraph& g, const Pi1Marking& m, MoveRelation kind,
                               int edge_e, int edge_f = -1);

std::string marked_graph_key(const Fatgraph& g, const Pi1Marking& m);

// Non-tail edges by smaller dart id.
std::vector<int> movable_edges(const Fatgraph& g);

}  // namespace csg
