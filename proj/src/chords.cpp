#include "csg/chords.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace csg {

int ChordDiagram::partner(int slot) const {
  for (int s = 0; s < slots(); ++s)
    if (s != slot && chord_of[s] == chord_of[slot]) return s;
  throw DomainError("unpaired slot");
}

int ChordDiagram::end_slot(int chord, bool source) const {
  for (int s = 0; s < slots(); ++s)
    if (chord_of[s] == chord && static_cast<bool>(src_at[s]) == source) return s;
  throw DomainError("chord end not found");
}

static std::string chord_name(int id) {
  std::string name;
  for (id += 1; id > 0; id = (id - 1) / 26)
    name.insert(name.begin(), static_cast<char>('a' + (id - 1) % 26));
  return name;
}

ChordDiagram parse_diagram(const std::string& text) {
  auto lb = text.find('[');
  auto rb = text.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw ParseError("diagram literal needs [ ... ]");
  std::istringstream in(text.substr(lb + 1, rb - lb - 1));
  ChordDiagram c;
  std::map<std::string, int> ids;
  std::string tok;
  std::vector<int> seen;  // per chord: bare/tilde occurrence bits
  while (in >> tok) {
    bool tilde = tok[0] == '~';
    std::string name = tilde ? tok.substr(1) : tok;
    if (name.empty()) throw ParseError("empty chord name");
    auto [it, fresh] = ids.try_emplace(name, static_cast<int>(ids.size()));
    if (fresh) seen.push_back(0);
    int bit = tilde ? 2 : 1;
    if (seen[it->second] & bit) throw ParseError("chord '" + name + "' repeats an end");
    seen[it->second] |= bit;
    c.chord_of.push_back(it->second);
    c.src_at.push_back(tilde ? 0 : 1);
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 3) throw ParseError("chord has a missing end");
  if (c.chord_of.empty()) throw ParseError("empty diagram");
  c.k = static_cast<int>(ids.size());
  return c;
}

std::string format_diagram(const ChordDiagram& c) {
  std::string out = "[";
  for (int s = 0; s < c.slots(); ++s) {
    if (s) out += ' ';
    if (!c.src_at[s]) out += '~';
    out += chord_name(c.chord_of[s]);
  }
  return out + "]";
}

static std::vector<int> first_occurrence_names(const ChordDiagram& c) {
  std::vector<int> rename(c.k, -1);
  int next = 0;
  for (int s = 0; s < c.slots(); ++s)
    if (rename[c.chord_of[s]] == -1) rename[c.chord_of[s]] = next++;
  return rename;
}

std::string unoriented_key(const ChordDiagram& c) {
  auto rename = first_occurrence_names(c);
  std::string out = std::to_string(c.k) + ":";
  for (int s = 0; s < c.slots(); ++s) out += " " + std::to_string(rename[c.chord_of[s]]);
  return out;
}

std::string oriented_key(const ChordDiagram& c) {
  auto rename = first_occurrence_names(c);
  std::string out = std::to_string(c.k) + ":";
  for (int s = 0; s < c.slots(); ++s) {
    out += ' ';
    if (!c.src_at[s]) out += '~';
    out += std::to_string(rename[c.chord_of[s]]);
  }
  return out;
}

Realization realize_fatgraph(const ChordDiagram& c) {
  if (c.k < 1) throw DomainError("empty diagram");
  int k = c.k, n = 2 * k;
  Realization rz;
  Fatgraph& g = rz.g;
  g.darts = 6 * k;
  g.rev.resize(g.darts);
  g.head.assign(g.darts, -1);
  for (int i = 0; i < n; ++i) {
    g.rev[2 * i] = 2 * i + 1;
    g.rev[2 * i + 1] = 2 * i;
    g.head[2 * i] = i + 1;      // segment [i, i+1], rightward
    g.head[2 * i + 1] = i;      // leftward
  }
  rz.away.assign(n, -1);
  for (int ch = 0; ch < k; ++ch) {
    int fwd = 4 * k + 2 * ch, bwd = fwd + 1;
    g.rev[fwd] = bwd;
    g.rev[bwd] = fwd;
    int s_src = c.end_slot(ch, true), s_tgt = c.end_slot(ch, false);
    g.head[fwd] = s_tgt + 1;
    g.head[bwd] = s_src + 1;
    rz.away[s_src] = fwd;
    rz.away[s_tgt] = bwd;
  }
  g.rot.resize(n + 1);
  g.rot[0] = {1};
  for (int v = 1; v < n; ++v) {
    int chord_in = g.rev[rz.away[v - 1]];
    g.rot[v] = {2 * v + 1, chord_in, 2 * (v - 1)};
  }
  g.rot[n] = {g.rev[rz.away[n - 1]], 2 * (n - 1)};
  g.tail = 0;
  g.check_well_formed();
  return rz;
}

Realization realize_smoothed(const ChordDiagram& c) {
  Realization full = realize_fatgraph(c);
  auto [g, dmap] = smooth_bivalent(full.g, 2 * c.k);
  Realization rz;
  rz.g = std::move(g);
  rz.smoothed = true;
  rz.away.reserve(full.away.size());
  for (Dart d : full.away) {
    if (dmap[d] != -1) {
      rz.away.push_back(dmap[d]);
    } else {
      // The chord dart pointing at the fused corner vertex is gone; the
      // fused edge still leaves the same slot, as the reverse of the
      // surviving opposite dart.
      rz.away.push_back(rz.g.rev[dmap[full.g.rev[d]]]);
    }
  }
  return rz;
}

DiagramGeometry geometry(const ChordDiagram& c) {
  DiagramGeometry geo;
  geo.rz = realize_fatgraph(c);
  geo.bo = boundary_order(geo.rz.g);
  geo.chords_by_rank.resize(c.k);
  std::iota(geo.chords_by_rank.begin(), geo.chords_by_rank.end(), 0);
  geo.pref_slot.assign(c.k, -1);
  std::vector<int> best(c.k, INT32_MAX);
  for (int s = 0; s < c.slots(); ++s) {
    int ch = c.chord_of[s];
    int r = geo.bo.rank[geo.rz.away[s]];
    if (r < best[ch]) {
      best[ch] = r;
      geo.pref_slot[ch] = s;
    }
  }
  std::sort(geo.chords_by_rank.begin(), geo.chords_by_rank.end(),
            [&](int a, int b) { return best[a] < best[b]; });
  geo.gen_index.assign(c.k, 0);
  for (int i = 0; i < c.k; ++i) geo.gen_index[geo.chords_by_rank[i]] = i + 1;
  return geo;
}

static void pairings(int n, std::vector<int>& slot_chord, int next_chord,
                     std::vector<ChordDiagram>& out) {
  int first = -1;
  for (int s = 0; s < n; ++s)
    if (slot_chord[s] == -1) {
      first = s;
      break;
    }
  if (first == -1) {
    ChordDiagram c;
    c.k = n / 2;
    c.chord_of = slot_chord;
    c.src_at.assign(n, 0);
    std::vector<char> met(c.k, 0);
    for (int s = 0; s < n; ++s) {
      if (!met[c.chord_of[s]]) {
        met[c.chord_of[s]] = 1;
        c.src_at[s] = 1;  // stored orientations point left to right
      }
    }
    out.push_back(std::move(c));
    return;
  }
  for (int s = first + 1; s < n; ++s) {
    if (slot_chord[s] != -1) continue;
    slot_chord[first] = slot_chord[s] = next_chord;
    pairings(n, slot_chord, next_chord + 1, out);
    slot_chord[first] = slot_chord[s] = -1;
  }
}

std::vector<ChordDiagram> all_diagrams_of_size(int k) {
  if (k < 1) throw DomainError("need at least one chord");
  std::vector<int> slot_chord(2 * k, -1);
  std::vector<ChordDiagram> out;
  pairings(2 * k, slot_chord, 0, out);
  return out;
}

std::vector<ChordDiagram> enumerate_bordered(int genus) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  std::vector<ChordDiagram> out;
  for (ChordDiagram& c : all_diagrams_of_size(2 * genus)) {
    if (boundary_cycles(realize_fatgraph(c).g).size() == 1) out.push_back(std::move(c));
  }
  return out;
}

Word away_value(const ChordDiagram& c, const DiagramMarking& m, int slot) {
  const Word& v = m.val[c.chord_of[slot]];
  return c.src_at[slot] ? v : inverse(v);
}

Word slot_product(const ChordDiagram& c, const DiagramMarking& m) {
  Word out;
  for (int s = 0; s < c.slots(); ++s) out = mul(out, away_value(c, m, s));
  return out;
}

DiagramMarking standard_diagram_marking(const ChordDiagram& c) {
  DiagramGeometry geo = geometry(c);
  DiagramMarking m;
  m.val.resize(c.k);
  for (int ch = 0; ch < c.k; ++ch) {
    int g = geo.gen_index[ch];
    m.val[ch] = c.src_at[geo.pref_slot[ch]] ? gen(g) : gen(-g);
  }
  return m;
}

Word boundary_word(const ChordDiagram& c) {
  return slot_product(c, standard_diagram_marking(c));
}

std::string marked_key(const ChordDiagram& c, const DiagramMarking& m) {
  auto rename = first_occurrence_names(c);
  std::string out = std::to_string(c.k) + ":";
  for (int s = 0; s < c.slots(); ++s) {
    out += " " + std::to_string(rename[c.chord_of[s]]) + "<" +
           format_word(away_value(c, m, s)) + ">";
  }
  return out;
}

bool slide_valid(const ChordDiagram& c, const ChordSlide& s) {
  if (s.mover < 0 || s.along < 0 || s.mover >= c.slots() || s.along >= c.slots())
    return false;
  if (s.mover - s.along != 1 && s.along - s.mover != 1) return false;
  return c.chord_of[s.mover] != c.chord_of[s.along];
}

static SlideResult apply_slide_impl(const ChordDiagram& c, const DiagramMarking* m,
                                    const ChordSlide& s) {
  if (!slide_valid(c, s)) throw DomainError("invalid slide");
  bool from_left = s.mover < s.along;
  int d_chord = c.chord_of[s.along];
  int partner = c.partner(s.along);

  SlideResult r;
  if (m) {
    r.m = *m;
    Word vm = away_value(c, *m, s.mover);
    Word vn = away_value(c, *m, s.along);
    Word moved = from_left ? mul(vm, vn) : mul(vn, vm);
    r.m.val[d_chord] = c.src_at[s.along] ? moved : inverse(moved);
  }

  r.c = c;
  int mover_chord = c.chord_of[s.mover];
  char mover_src = c.src_at[s.mover];
  r.c.chord_of.erase(r.c.chord_of.begin() + s.mover);
  r.c.src_at.erase(r.c.src_at.begin() + s.mover);
  int partner_after = partner > s.mover ? partner - 1 : partner;
  r.landing = from_left ? partner_after + 1 : partner_after;
  r.c.chord_of.insert(r.c.chord_of.begin() + r.landing, mover_chord);
  r.c.src_at.insert(r.c.src_at.begin() + r.landing, mover_src);
  r.inverse = from_left ? ChordSlide{r.landing, r.landing - 1}
                        : ChordSlide{r.landing, r.landing + 1};
  return r;
}

SlideResult apply_slide(const ChordDiagram& c, const ChordSlide& s) {
  return apply_slide_impl(c, nullptr, s);
}

SlideResult apply_slide(const ChordDiagram& c, const DiagramMarking& m, const ChordSlide& s) {
  if (static_cast<int>(m.val.size()) != c.k) throw DomainError("marking size mismatch");
  return apply_slide_impl(c, &m, s);
}

Endomorphism slide_lift(const ChordDiagram& c, const ChordSlide& s) {
  DiagramGeometry before = geometry(c);
  SlideResult r = apply_slide(c, standard_diagram_marking(c), s);
  DiagramGeometry after = geometry(r.c);
  Endomorphism lift;
  lift.rank = c.k;
  lift.image.resize(c.k);
  for (int pos = 0; pos < c.k; ++pos) {
    int ch = after.chords_by_rank[pos];
    lift.image[pos] = away_value(r.c, r.m, after.pref_slot[ch]);
  }
  // Every untouched chord must reappear as a plain old-basis letter.
  int changed = c.chord_of[s.along];
  for (int pos = 0; pos < c.k; ++pos) {
    int ch = after.chords_by_rank[pos];
    if (ch == changed) continue;
    if (lift.image[pos] != gen(before.gen_index[ch]))
      throw DomainError("unexpected basis change for an untouched chord");
  }
  return lift;
}

SlideClass classify_slide(const ChordDiagram& c, const ChordSlide& s) {
  DiagramGeometry before = geometry(c);
  SlideResult r = apply_slide(c, standard_diagram_marking(c), s);
  DiagramGeometry after = geometry(r.c);

  SlideClass sc;
  sc.changed_chord = c.chord_of[s.along];
  sc.old_order = before.chords_by_rank;
  sc.new_order = after.chords_by_rank;
  sc.new_generator = away_value(r.c, r.m, after.pref_slot[sc.changed_chord]);

  int ci = before.gen_index[c.chord_of[s.mover]];
  int di = before.gen_index[sc.changed_chord];
  const Word& w = sc.new_generator;
  if (w.size() != 2) throw DomainError("slide produced a non-quadratic generator");
  struct Shape {
    int a, b, type;
  };
  const Shape shapes[] = {{ci, di, 1},   {-ci, di, 2}, {di, ci, 3},
                          {-di, ci, 4},  {ci, -di, 5}, {di, -ci, 6}};
  for (const Shape& sh : shapes) {
    if (w[0] == sh.a && w[1] == sh.b) {
      sc.type = sh.type;
      return sc;
    }
  }
  throw DomainError("slide shape outside the six cases");
}

}  // namespace csg
