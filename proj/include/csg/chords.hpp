#pragma once

#include <string>
#include <vector>

#include "csg/fatgraph.hpp"
#include "csg/words.hpp"

namespace csg {

// A linear chord diagram: a horizontal core with 2k marked slots, a tail
// hanging off the left end, and k chords pairing the slots up. Each chord
// carries a stored orientation: the flagged slot is the end its oriented
// version points away from.
struct ChordDiagram {
  int k = 0;
  std::vector<int> chord_of;  // slot (0-based, left to right) -> chord id
  std::vector<char> src_at;   // slot -> 1 when the slot is the stored source end

  int slots() const { return 2 * k; }
  int partner(int slot) const;
  int end_slot(int chord, bool source) const;
  bool operator==(const ChordDiagram& other) const = default;
};

// Literal text form: "[a b ~a ~b]". Bare name = stored source end, ~name =
// the far end. Chord ids follow first occurrence; printing names chords
// a, b, c, ...
ChordDiagram parse_diagram(const std::string& text);
std::string format_diagram(const ChordDiagram& c);

// Structure-only key, chord names and orientations forgotten. Linear
// diagrams are rigid, so equal keys mean isomorphic diagrams.
std::string unoriented_key(const ChordDiagram& c);
// Keeps stored orientations (renames chords by first occurrence).
std::string oriented_key(const ChordDiagram& c);

// The underlying fatgraph. Vertex i sits at core position i; slot s (0-based)
// attaches at vertex s+1. The rightmost core point is kept as a bivalent
// vertex by realize_fatgraph and fused away by realize_smoothed (Whitehead
// moves need the trivalent form).
struct Realization {
  Fatgraph g;
  std::vector<Dart> away;  // slot -> dart leaving the slot along its chord
  bool smoothed = false;
};

Realization realize_fatgraph(const ChordDiagram& c);
Realization realize_smoothed(const ChordDiagram& c);

// Boundary-order data: chords sorted by the first visit of one of their
// darts, which is the generator order.
struct DiagramGeometry {
  Realization rz;
  BoundaryOrder bo;
  std::vector<int> chords_by_rank;  // generator order, position -> chord
  std::vector<int> gen_index;       // chord -> 1-based generator index
  std::vector<int> pref_slot;       // chord -> slot its preferred dart leaves
};

DiagramGeometry geometry(const ChordDiagram& c);

// Every pairing of 2k slots (orientations stored left to right), in a fixed
// lexicographic order.
std::vector<ChordDiagram> all_diagrams_of_size(int k);
// The pairings whose realization has a single boundary cycle, i.e. the
// diagrams of a once-bordered surface of the given genus.
std::vector<ChordDiagram> enumerate_bordered(int genus);

// Values attached to the chords of a marked diagram: val[c] is the word
// carried by chord c's stored-source dart. Core labels are determined by
// these, so they are not stored.
struct DiagramMarking {
  std::vector<Word> val;
  bool operator==(const DiagramMarking& other) const = default;
};

// Word carried by the dart leaving the slot along its chord.
Word away_value(const ChordDiagram& c, const DiagramMarking& m, int slot);
// Left-to-right product of the away values: the boundary word read from the
// tail.
Word slot_product(const ChordDiagram& c, const DiagramMarking& m);

// Marking with the i-th chord in generator order carrying g_i on its
// preferred dart.
DiagramMarking standard_diagram_marking(const ChordDiagram& c);
// slot_product under the standard marking.
Word boundary_word(const ChordDiagram& c);

// Structure + slot values; two marked diagrams are equal exactly when their
// keys agree.
std::string marked_key(const ChordDiagram& c, const DiagramMarking& m);

// Moving the endpoint at `mover` across the adjacent endpoint at `along`,
// around the chord of `along`. The mover lands next to the far end of that
// chord: just right of it when the mover approached from the left, just left
// of it otherwise.
struct ChordSlide {
  int mover = -1;
  int along = -1;
  bool operator==(const ChordSlide& other) const = default;
};

bool slide_valid(const ChordDiagram& c, const ChordSlide& s);

struct SlideResult {
  ChordDiagram c;
  DiagramMarking m;      // empty when the input had no marking
  int landing = -1;      // slot index of the mover afterwards
  ChordSlide inverse;    // undoes the slide, in the result's indexing
};

SlideResult apply_slide(const ChordDiagram& c, const ChordSlide& s);
SlideResult apply_slide(const ChordDiagram& c, const DiagramMarking& m, const ChordSlide& s);

// The slide's effect on the generating system, computed by transporting the
// standard marking. Exactly one generator is replaced; its new value is a
// two-letter word in the old mover/along generators whose shape indexes the
// six slide types. The surrounding generator order may rotate cyclically.
struct SlideClass {
  int type = 0;            // 1..6 for shapes cd, Cd, dc, Dc, cD, dC
  Word new_generator;      // in the old basis
  int changed_chord = -1;  // the chord of the along endpoint
  std::vector<int> old_order;  // chords by old generator order
  std::vector<int> new_order;  // chords by new generator order
};

SlideClass classify_slide(const ChordDiagram& c, const ChordSlide& s);

// Whitehead-style lift of a slide: images of the new generators in the old
// basis, read off the transported standard marking.
Endomorphism slide_lift(const ChordDiagram& c, const ChordSlide& s);

}  // namespace csg
