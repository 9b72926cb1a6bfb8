#pragma once

#include "csg/chords.hpp"
#include "csg/groupoid.hpp"
#include "csg/intmat.hpp"

namespace csg {

// The dual of a bordered diagram: the same chords laid out again, but slot i
// now hosts the chord dart of boundary rank i. A slot is a stored source end
// exactly when its dart is the chord's stored source dart, so chords keep
// their ids and values across dualization.
ChordDiagram dualize(const ChordDiagram& c);

// Slot positions the two diagrams share: dual slot -> primal slot.
std::vector<int> dual_slot_of_rank(const ChordDiagram& c);

// A slide of c along d corresponds in the dual to a slide of d-reversed along
// c: the dual mover is the slot holding the reverse of the along chord's away
// dart, the dual along is the slot holding the mover's away dart.
ChordSlide dual_slide_transport(const ChordDiagram& c, const ChordSlide& s);

// Slide on a dual diagram with its native marking law: the mover's value
// picks up the inverse of the along slot's away value on the right; the along
// chord keeps its value. dualize then intertwines the two slide actions.
SlideResult dual_apply_slide(const ChordDiagram& c, const DiagramMarking& m,
                             const ChordSlide& s);

// Flip a chord's stored orientation; the value inverts.
void reorient_chord(ChordDiagram& c, DiagramMarking& m, int chord);

// Homology-marked dual diagram: one exponent row per chord.
struct DualMarked {
  ChordDiagram c;
  MatZ h;
};

// dual_apply_slide pushed to homology rows.
DualMarked dual_slide_h(const DualMarked& d, const ChordSlide& s);
void reorient_chord_h(DualMarked& d, int chord);

// Signed crossing number of two chords in a dual diagram (chords drawn
// left to right when the source end comes first):
//   -1 when x opens, y opens, x closes, y closes (both left to right),
//   +1 with the roles swapped; each reversed orientation flips the sign;
//    0 when the chords do not cross.
int crossing_pairing(const ChordDiagram& c, int chord_x, int chord_y);
MatZ crossing_matrix(const ChordDiagram& c);

// Chords by leftmost end, the dual's natural reading order.
std::vector<int> dual_chord_order(const ChordDiagram& c);

// How relation kinds trade places under dualization.
RelationKind transpose_kind(RelationKind kind);

}  // namespace csg
