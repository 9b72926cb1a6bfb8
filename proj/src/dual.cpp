#include "csg/dual.hpp"

#include <algorithm>
#include <numeric>

namespace csg {

std::vector<int> dual_slot_of_rank(const ChordDiagram& c) {
  DiagramGeometry geo = geometry(c);
  std::vector<int> slots(c.slots());
  std::iota(slots.begin(), slots.end(), 0);
  std::sort(slots.begin(), slots.end(), [&](int a, int b) {
    return geo.bo.rank[geo.rz.away[a]] < geo.bo.rank[geo.rz.away[b]];
  });
  return slots;
}

ChordDiagram dualize(const ChordDiagram& c) {
  std::vector<int> perm = dual_slot_of_rank(c);
  ChordDiagram out;
  out.k = c.k;
  for (int s : perm) {
    out.chord_of.push_back(c.chord_of[s]);
    out.src_at.push_back(c.src_at[s]);
  }
  return out;
}

ChordSlide dual_slide_transport(const ChordDiagram& c, const ChordSlide& s) {
  if (!slide_valid(c, s)) throw DomainError("invalid slide");
  if (s.mover < s.along) {
    // the far end of the chord slid along crosses the mover's chord, entering
    // at the mover's own end; the dual adjacency law puts those side by side
    std::vector<int> perm = dual_slot_of_rank(c);
    std::vector<int> dual_slot(c.slots());
    for (int i = 0; i < c.slots(); ++i) dual_slot[perm[i]] = i;
    return {dual_slot[c.partner(s.along)], dual_slot[s.mover]};
  }
  // a leftward slide is the inverse of a rightward one: transport that and
  // return the dual slide undoing its image
  SlideResult r = apply_slide(c, s);
  ChordSlide t = dual_slide_transport(r.c, r.inverse);
  return apply_slide(dualize(r.c), t).inverse;
}

SlideResult dual_apply_slide(const ChordDiagram& c, const DiagramMarking& m,
                             const ChordSlide& s) {
  if (!slide_valid(c, s)) throw DomainError("invalid slide");
  int mc = c.chord_of[s.mover];
  Word a = away_value(c, m, s.along);
  SlideResult r = apply_slide(c, s);
  r.m = m;
  r.m.val[mc] = c.src_at[s.mover] ? mul(m.val[mc], inverse(a)) : mul(a, m.val[mc]);
  return r;
}

void reorient_chord(ChordDiagram& c, DiagramMarking& m, int chord) {
  for (int s = 0; s < c.slots(); ++s)
    if (c.chord_of[s] == chord) c.src_at[s] = !c.src_at[s];
  m.val[chord] = inverse(m.val[chord]);
}

DualMarked dual_slide_h(const DualMarked& d, const ChordSlide& s) {
  if (!slide_valid(d.c, s)) throw DomainError("invalid slide");
  int mc = d.c.chord_of[s.mover], ac = d.c.chord_of[s.along];
  int sig_m = d.c.src_at[s.mover] ? 1 : -1;
  int sig_a = d.c.src_at[s.along] ? 1 : -1;
  DualMarked out;
  out.c = apply_slide(d.c, s).c;
  out.h = d.h;
  out.h.row(mc) -= sig_m * sig_a * d.h.row(ac);
  return out;
}

void reorient_chord_h(DualMarked& d, int chord) {
  for (int s = 0; s < d.c.slots(); ++s)
    if (d.c.chord_of[s] == chord) d.c.src_at[s] = !d.c.src_at[s];
  d.h.row(chord) = -d.h.row(chord);
}

int crossing_pairing(const ChordDiagram& c, int chord_x, int chord_y) {
  if (chord_x == chord_y) return 0;
  int sx = c.end_slot(chord_x, true), tx = c.end_slot(chord_x, false);
  int sy = c.end_slot(chord_y, true), ty = c.end_slot(chord_y, false);
  int orx = sx < tx ? 1 : -1, ory = sy < ty ? 1 : -1;
  int a1 = std::min(sx, tx), a2 = std::max(sx, tx);
  int b1 = std::min(sy, ty), b2 = std::max(sy, ty);
  if (a1 < b1 && b1 < a2 && a2 < b2) return -orx * ory;
  if (b1 < a1 && a1 < b2 && b2 < a2) return orx * ory;
  return 0;
}

MatZ crossing_matrix(const ChordDiagram& c) {
  MatZ p(c.k, c.k);
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j) p(i, j) = crossing_pairing(c, i, j);
  return p;
}

std::vector<int> dual_chord_order(const ChordDiagram& c) {
  std::vector<int> leftmost(c.k, -1);
  std::vector<int> order;
  for (int s = 0; s < c.slots(); ++s)
    if (leftmost[c.chord_of[s]] == -1) {
      leftmost[c.chord_of[s]] = s;
      order.push_back(c.chord_of[s]);
    }
  return order;
}

RelationKind transpose_kind(RelationKind kind) {
  switch (kind) {
    case RelationKind::PentagonLeft: return RelationKind::PentagonRight;
    case RelationKind::PentagonRight: return RelationKind::PentagonLeft;
    case RelationKind::Opposite: return RelationKind::Attached;
    case RelationKind::Attached: return RelationKind::Opposite;
    default: return kind;
  }
}

}  // namespace csg
