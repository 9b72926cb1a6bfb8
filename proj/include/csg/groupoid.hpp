#pragma once

#include <string>
#include <vector>

#include "csg/chords.hpp"
#include "csg/whitehead.hpp"

namespace csg {

// The eight relation schemes of the slide groupoid. Sites are small slot
// tuples; see relation_sites for what each tuple means.
enum class RelationKind {
  Triangle,       // T: three alternating slides of two adjacent chord ends
  Inverse,        // I: a slide followed by its undoing
  Commute,        // C: two interleaved crossings on four distinct chords
  PentagonLeft,   // L: two ways to move an adjacent end pair left across a chord
  PentagonRight,  // R: the mirror of L, moving the pair right
  Opposite,       // O: crossings by the two ends of one chord commute
  Attached,       // A: crossings of one chord by ends of two others commute
  Square,         // S: polygon extension of T; no sites on small diagrams
};

std::string relation_name(RelationKind kind);
RelationKind relation_from_name(const std::string& name);

struct SlideLogEntry {
  std::string diagram_key;  // marked key before the slide
  ChordSlide slide;
};

struct SlideSequence {
  std::vector<SlideLogEntry> log;
  std::vector<ChordSlide> slides;
  ChordDiagram end_c;
  DiagramMarking end_m;
};

// Applies the slides in order, logging the marked diagram before each one.
// Throws DomainError on the first invalid slide.
SlideSequence run_slides(const ChordDiagram& c, const DiagramMarking& m,
                         const std::vector<ChordSlide>& slides);

// All sites where the relation's slide recipe runs to completion (every
// intermediate slide valid). Site tuples, slots in the starting diagram:
//   Triangle  {m, a}   adjacent ends of two chords; the first slide moves m
//                      across a, then the loop rotates through the partners
//   Inverse   {m, a}   any valid slide, then its undoing
//   Commute   {s, t}   movers at s and t cross their right neighbours; all
//                      four chords distinct, s < t
//   PentagonLeft  {p, p+1, p+2}  ends of three distinct chords; the two right
//                      ends cross the left chord two ways
//   PentagonRight {p, p+1, p+2}  mirror triple; the two left ends cross the
//                      right chord
//   Opposite  {s, t}   movers at s and t are the two ends of one chord; each
//                      crosses its right neighbour, s < t
//   Attached  {s, t}   movers of two distinct chords; their right neighbours
//                      are the two ends of one third chord, s < t
//   Square    (none)   every four-slide loop on diagrams of genus <= 2 is one
//                      of the commutator kinds above, so the square scheme has
//                      no sites here and none are enumerated
std::vector<std::vector<int>> relation_sites(const ChordDiagram& c, RelationKind kind);

// Runs the recipe at the site. Validity here means every step is a legal
// slide; whether the loop closes is deliberately left to verify_loop.
SlideSequence instantiate_relation(const ChordDiagram& c, const DiagramMarking& m,
                                   RelationKind kind, const std::vector<int>& site);

// True when the sequence runs and returns to the starting marked diagram.
// A sequence that fails to run (some step invalid) is not a loop: false.
bool verify_loop(const ChordDiagram& c, const DiagramMarking& m,
                 const std::vector<ChordSlide>& slides);

// Composite ChordSlide lift: new generators of the final diagram written in the
// letters of the starting one. Identity exactly on marked loops.
Endomorphism slide_sequence_lift(const ChordDiagram& c, const std::vector<ChordSlide>& slides);

// Same for a run of Whitehead moves given by edge ids.
Endomorphism move_sequence_lift(const Fatgraph& g, const Pi1Marking& m,
                                const std::vector<int>& edges);

// A mapping-class element: a slide path whose endpoints are isomorphic as
// unmarked fatgraphs. Identity testing compares marked endpoints exactly;
// the Nielsen image is the composite lift of the path.
struct GroupoidElement {
  ChordDiagram c0;
  DiagramMarking m0;
  std::vector<ChordSlide> slides;
  ChordDiagram c1;
  DiagramMarking m1;
};

GroupoidElement mcg_element(const ChordDiagram& c, const DiagramMarking& m,
                            const std::vector<ChordSlide>& slides);
// b after a; b must start at a's exact marked endpoint.
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement invert(const GroupoidElement& e);
bool is_identity(const GroupoidElement& e);
Endomorphism nielsen_image(const GroupoidElement& e);

// Homology quotient of a marked diagram: row i is the exponent vector of
// chord i's stored value. Slides act on the rows alone (slide_h); the square
// with apply_slide and h_quotient commutes.
MatZ h_quotient(const ChordDiagram& c, const DiagramMarking& m);
MatZ slide_h(const ChordDiagram& c, const MatZ& h, const ChordSlide& s);

// Corner reading of the 5-valent vertex obtained by collapsing two edges that
// share one endpoint, as a string like "14532". The 24 readings sort the
// pentagon relation's image among the slide relations.
std::string pentagon_case_label(const Fatgraph& g, int edge_e, int edge_f);
std::vector<RelationKind> pentagon_kinds(const std::string& label);

// Homology shadow: exponent vectors of the chord values in generator order,
// and the Gram matrix of the boundary-order pairing on the same chords.
MatZ chord_classes(const ChordDiagram& c, const DiagramMarking& m);
MatZ rank_pairing(const ChordDiagram& c);

}  // namespace csg
