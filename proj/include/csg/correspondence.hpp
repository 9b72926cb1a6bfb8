#pragma once

#include <vector>

#include "csg/chords.hpp"
#include "csg/whitehead.hpp"

namespace csg {

// Flattening of a marked trivalent bordered fatgraph to its chord diagram:
// repeatedly move the first trunk edge hanging off the straightened part of
// the tree until the tree is a path, then read the diagram off that path.
// All moves leave the generator system untouched, so chords correspond to
// the generator edges of the input graph (dart ids survive every move).
struct BranchReduction {
  ChordDiagram c;
  DiagramMarking m;             // chord values carried over from the input
  std::vector<int> chord_edge;  // chord id -> generator edge id in the input
  std::vector<MoveLogEntry> log;
  Fatgraph end_g;
  Pi1Marking end_m;
};

BranchReduction branch_reduce(const Fatgraph& g, const Pi1Marking& m);

// Inverse direction: plant the endpoints of a consecutive slot run on a
// caterpillar subtree hanging where the run used to sit. Leaves keep their
// chords; branch_reduce returns the original diagram. run_len == 1 leaves
// the diagram's graph unchanged. Requires the run's last endpoint to rank
// below every other run endpoint in the boundary order (the growing moves
// are then all of type 1 or 2).
struct GrownTree {
  Fatgraph g;
  std::vector<int> leaf_away;   // per run position, dart leaving the leaf
  std::vector<MoveLogEntry> log;  // moves carrying the flat graph to g
};

GrownTree grow_tree(const ChordDiagram& c, int run_first, int run_len);

// Whether one Whitehead move on some graph reducing to c slides the run's
// endpoints along its first (along_first) or last slot. run_len counts the
// along endpoint too, so run_len == 2 is a single slide: always realizable.
// Larger runs are decided by the rank conditions on the run's darts.
bool single_move_realizable(const ChordDiagram& c, int run_first, int run_len,
                            bool along_first);

// The slide sequence on branch_reduce(g).c with the same effect as the move
// on `edge`: empty when the move fixes the marked diagram, otherwise the
// consecutive endpoints adjacent to one chord endpoint sliding along it.
// Each slide is given in the coordinates of the diagram it applies to.
std::vector<ChordSlide> cs_functor(const Fatgraph& g, const Pi1Marking& m, int edge);

// A slide as Whitehead moves on the smoothed realization: one on the core
// edge between the two endpoints, then one on the chord slid along. A site
// falling on the fused rightmost edge acts as the identity on the smoothed
// graph and is dropped, so the log holds one or two moves. The end marking
// always branch-reduces to apply_slide's output; that is checked.
struct SlideAsMoves {
  std::vector<MoveLogEntry> log;
  Fatgraph end_g;
  Pi1Marking end_m;
};

SlideAsMoves slide_as_whitehead_pair(const ChordDiagram& c, const ChordSlide& s);

// Full dart marking of a realization from per-chord values (stored-source
// convention), by propagation.
Pi1Marking realization_marking(const ChordDiagram& c, const Realization& rz,
                               const DiagramMarking& m);

}  // namespace csg
