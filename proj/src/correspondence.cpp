#include "csg/correspondence.hpp"

#include <algorithm>
#include <map>

namespace csg {

namespace {

std::vector<char> spine_vertices(const Fatgraph& g, const GeneratorSet& gs) {
  std::vector<char> in(g.vertices(), 0);
  in[g.head[g.rev[g.tail]]] = 1;
  for (Dart d : gs.spine) {
    in[g.head[d]] = 1;
    in[g.head[g.rev[d]]] = 1;
  }
  return in;
}

}  // namespace

BranchReduction branch_reduce(const Fatgraph& g, const Pi1Marking& m) {
  int base = g.head[g.rev[g.tail]];
  for (int v = 0; v < g.vertices(); ++v)
    if (v != base && g.rot[v].size() != 3)
      throw DomainError("branch reduction needs a trivalent graph");

  BranchReduction red;
  red.end_g = g;
  red.end_m = m;

  int tree_edges = g.vertices() - 1;
  for (int rounds = 0; rounds <= g.edges() * g.edges(); ++rounds) {
    BoundaryOrder bo = boundary_order(red.end_g);
    GeneratorSet gs = greedy_tree(red.end_g, bo);
    if (static_cast<int>(gs.spine.size()) == tree_edges) break;
    if (rounds == g.edges() * g.edges()) throw DomainError("branch reduction stalled");

    std::vector<char> sv = spine_vertices(red.end_g, gs);
    std::vector<char> in_spine(red.end_g.darts, 0);
    for (Dart d : gs.spine) in_spine[d] = in_spine[red.end_g.rev[d]] = 1;
    int trunk = -1, trunk_rank = INT32_MAX;
    for (int d = 0; d < red.end_g.darts; ++d) {
      if (!bo.preferred(red.end_g, d) || !gs.in_tree[d] || in_spine[d]) continue;
      if (!sv[red.end_g.head[d]] && !sv[red.end_g.head[red.end_g.rev[d]]]) continue;
      if (bo.rank[d] < trunk_rank) {
        trunk_rank = bo.rank[d];
        trunk = red.end_g.edge_of(d);
      }
    }
    if (trunk == -1) throw DomainError("no trunk found before the tree was flat");

    MoveLogEntry entry;
    entry.graph_key = canonical_form(red.end_g).key;
    entry.edge = trunk;
    entry.type = classify_move(red.end_g, trunk).type;
    if (entry.type != 1 && entry.type != 2)
      throw DomainError("trunk move classified outside types 1/2");
    red.log.push_back(std::move(entry));
    MoveResult r = apply_whitehead(red.end_g, red.end_m, trunk);
    red.end_g = std::move(r.g);
    red.end_m = std::move(r.m);
  }

  // Read the diagram off the flat tree: walk the path from the base; at each
  // vertex the chord sits just before the arrival dart in the rotation, the
  // path continues just after it. The last path vertex holds two chords.
  const Fatgraph& fg = red.end_g;
  BoundaryOrder bo = boundary_order(fg);
  GeneratorSet gs = greedy_tree(fg, bo);
  red.c.k = static_cast<int>(gs.generators.size());
  std::map<int, int> chord_id;  // edge -> chord
  auto emit = [&](Dart chord_in) {
    int edge = fg.edge_of(chord_in);
    auto [it, fresh] = chord_id.try_emplace(edge, static_cast<int>(chord_id.size()));
    if (fresh) {
      red.chord_edge.push_back(edge);
      red.m.val.push_back({});
    }
    Dart away = fg.rev[chord_in];
    bool src = bo.preferred(fg, away);
    if (src) red.m.val[it->second] = red.end_m.label[away];
    red.c.chord_of.push_back(it->second);
    red.c.src_at.push_back(src);
  };
  Dart din = fg.tail;
  for (;;) {
    Dart nxt = next_incoming(fg, din), prv = prev_incoming(fg, din);
    if (gs.in_tree[nxt]) {
      emit(prv);
      din = fg.rev[nxt];
    } else {
      emit(prv);
      emit(nxt);
      break;
    }
  }
  if (static_cast<int>(red.c.chord_of.size()) != 2 * red.c.k)
    throw DomainError("flat tree read-off lost slots");
  return red;
}

Pi1Marking realization_marking(const ChordDiagram& c, const Realization& rz,
                               const DiagramMarking& m) {
  BoundaryOrder bo = boundary_order(rz.g);
  GeneratorSet gs = greedy_tree(rz.g, bo);
  std::vector<int> slot_of_dart(rz.g.darts, -1);
  for (int s = 0; s < c.slots(); ++s) slot_of_dart[rz.away[s]] = s;
  std::vector<Word> labels;
  for (Dart d : gs.generators) {
    int s = slot_of_dart[d];
    if (s == -1) throw DomainError("generator dart is not a chord dart");
    labels.push_back(away_value(c, m, s));
  }
  return propagate_from_generators(rz.g, labels);
}

GrownTree grow_tree(const ChordDiagram& c, int run_first, int run_len) {
  int k = c.k, n = c.slots();
  if (run_first < 0 || run_len < 1 || run_first + run_len > n)
    throw DomainError("run outside the diagram");
  GrownTree out;
  if (run_len == 1) {
    Realization rz = realize_smoothed(c);
    out.g = rz.g;
    out.leaf_away = {rz.away[run_first]};
    return out;
  }
  {
    DiagramGeometry geo = geometry(c);
    auto rank = [&](int slot) { return geo.bo.rank[geo.rz.away[slot]]; };
    int last = run_first + run_len - 1;
    for (int s = run_first; s < last; ++s)
      if (rank(last) > rank(s))
        throw DomainError("the run's last endpoint must rank below the others");
  }

  // Core positions 1..m: retained slots with one trunk position where the
  // run sat. Leaves hang on a chain above the trunk; the leaf met first on
  // the way up is the rightmost run endpoint.
  int j = run_len, m = n - j + 1;
  std::vector<int> attach;  // core position-1 -> retained slot, -1 for trunk
  for (int s = 0; s < run_first; ++s) attach.push_back(s);
  attach.push_back(-1);
  for (int s = run_first + j; s < n; ++s) attach.push_back(s);

  Fatgraph g;
  g.darts = 2 * m + 2 * k + 2 + 2 * (j - 2);
  g.rev.assign(g.darts, -1);
  g.head.assign(g.darts, -1);
  int chord_base = 2 * m;
  int trunk_up = chord_base + 2 * k;      // points at the first chain vertex
  int trunk_down = trunk_up + 1;          // points at the trunk core position
  int chain_base = trunk_up + 2;          // chain edge i: up dart, down dart

  int verts = 1 + m + (j - 1);
  g.rot.resize(verts);
  int chain_vertex0 = 1 + m;  // w1

  // slot -> vertex and slot -> inward chord dart, filled below
  std::vector<int> slot_vertex(n, -1), slot_in(n, -1);
  for (int i = 0; i < m; ++i)
    if (attach[i] >= 0) slot_vertex[attach[i]] = i + 1;
  for (int t = 0; t < j; ++t) {
    // leaf index t (0-based) from the trunk upward = run slot (end - t)
    int s = run_first + j - 1 - t;
    slot_vertex[s] = chain_vertex0 + std::min(t, j - 2);
  }
  for (int ch = 0; ch < k; ++ch) {
    int fwd = chord_base + 2 * ch, bwd = fwd + 1;
    g.rev[fwd] = bwd;
    g.rev[bwd] = fwd;
    int s_src = c.end_slot(ch, true), s_tgt = c.end_slot(ch, false);
    g.head[fwd] = slot_vertex[s_tgt];
    g.head[bwd] = slot_vertex[s_src];
    slot_in[s_src] = bwd;
    slot_in[s_tgt] = fwd;
  }
  for (int i = 0; i < m; ++i) {
    g.rev[2 * i] = 2 * i + 1;
    g.rev[2 * i + 1] = 2 * i;
    g.head[2 * i] = i + 1;
    g.head[2 * i + 1] = i;
  }
  g.rev[trunk_up] = trunk_down;
  g.rev[trunk_down] = trunk_up;
  g.head[trunk_up] = chain_vertex0;
  int trunk_pos = run_first + 1;  // core position of the trunk
  g.head[trunk_down] = trunk_pos;
  for (int i = 0; i < j - 2; ++i) {
    int up = chain_base + 2 * i, down = up + 1;
    g.rev[up] = down;
    g.rev[down] = up;
    g.head[up] = chain_vertex0 + i + 1;
    g.head[down] = chain_vertex0 + i;
  }

  g.rot[0] = {1};
  for (int i = 1; i < m; ++i) {
    int in_at = attach[i - 1] >= 0 ? slot_in[attach[i - 1]] : trunk_down;
    g.rot[i] = {2 * i + 1, in_at, 2 * (i - 1)};
  }
  {
    int in_at = attach[m - 1] >= 0 ? slot_in[attach[m - 1]] : trunk_down;
    g.rot[m] = {in_at, 2 * (m - 1)};
  }
  for (int w = 0; w < j - 1; ++w) {
    int below_in = w == 0 ? trunk_up : chain_base + 2 * (w - 1);
    int leaf_in = slot_in[run_first + j - 1 - w];
    if (w < j - 2) {
      g.rot[chain_vertex0 + w] = {below_in, leaf_in, chain_base + 2 * w + 1};
    } else {
      g.rot[chain_vertex0 + w] = {below_in, leaf_in, slot_in[run_first]};
    }
  }
  g.tail = 0;
  g.check_well_formed();

  auto [sg, dmap] = smooth_bivalent(g, m);
  out.g = std::move(sg);
  out.leaf_away.reserve(j);
  for (int t = 0; t < j; ++t) out.leaf_away.push_back(dmap[g.rev[slot_in[run_first + t]]]);

  // The growing moves are the reduction moves undone; a move on an edge is
  // undone by moving the same edge again, so replay the reversed reduction
  // log from the flat graph (translating edge ids through canonical forms).
  BranchReduction red = branch_reduce(out.g, standard_marking(out.g));
  if (unoriented_key(red.c) != unoriented_key(c))
    throw DomainError("grown tree does not reduce back to the diagram");
  Realization flat = realize_smoothed(c);
  CanonicalForm cf_end = canonical_form(red.end_g);
  CanonicalForm cf_flat = canonical_form(flat.g);
  std::vector<int> canon_to_flat(flat.g.darts);
  for (int d = 0; d < flat.g.darts; ++d) canon_to_flat[cf_flat.dart_map[d]] = d;
  Fatgraph cur = flat.g;
  Pi1Marking curm = standard_marking(cur);
  for (auto it = red.log.rbegin(); it != red.log.rend(); ++it) {
    int e = canon_to_flat[cf_end.dart_map[it->edge]];
    e = cur.edge_of(e);
    MoveLogEntry entry;
    entry.graph_key = canonical_form(cur).key;
    entry.edge = e;
    entry.type = classify_move(cur, e).type;
    out.log.push_back(std::move(entry));
    MoveResult r = apply_whitehead(cur, curm, e);
    cur = std::move(r.g);
    curm = std::move(r.m);
  }
  if (canonical_form(cur).key != canonical_form(out.g).key)
    throw DomainError("replayed growth missed the grown graph");
  return out;
}

bool single_move_realizable(const ChordDiagram& c, int run_first, int run_len,
                            bool along_first) {
  int n = c.slots();
  if (run_first < 0 || run_len < 2 || run_first + run_len > n)
    throw DomainError("run outside the diagram");
  if (run_len == 2) return true;
  DiagramGeometry geo = geometry(c);
  auto rank = [&](int slot) { return geo.bo.rank[geo.rz.away[slot]]; };
  auto rank_rev = [&](int slot) { return geo.bo.rank[geo.rz.g.rev[geo.rz.away[slot]]]; };
  int last = run_first + run_len - 1;

  if (along_first) {
    // The run's last dart must rank above the reversed along dart and below
    // everything else in the run.
    bool ok = rank_rev(run_first) < rank(last);
    for (int s = run_first; ok && s < last; ++s) ok = rank(last) < rank(s);
    return ok;
  }
  // Along endpoint last: the dart before it must rank below everything else
  // in the run.
  bool ok = true;
  for (int s = run_first; ok && s <= last; ++s)
    if (s != last - 1) ok = rank(last - 1) < rank(s);
  return ok;
}

std::vector<ChordSlide> cs_functor(const Fatgraph& g, const Pi1Marking& m, int edge) {
  BranchReduction red0 = branch_reduce(g, m);
  MoveResult mv = apply_whitehead(g, m, edge);
  BranchReduction red1 = branch_reduce(mv.g, mv.m);
  std::string target = marked_key(red1.c, red1.m);
  if (marked_key(red0.c, red0.m) == target) return {};

  int n = red0.c.slots();
  for (int a0 = 0; a0 < n; ++a0) {
    int along_chord = red0.c.chord_of[a0];
    bool along_src = red0.c.src_at[a0];
    for (int side = -1; side <= 1; side += 2) {
      for (int len = 1; len < n; ++len) {
        ChordDiagram cur = red0.c;
        DiagramMarking curm = red0.m;
        std::vector<ChordSlide> slides;
        bool ok = true;
        for (int step = 0; ok && step < len; ++step) {
          int a = cur.end_slot(along_chord, along_src);
          ChordSlide s{a + side, a};
          if (!slide_valid(cur, s)) {
            ok = false;
            break;
          }
          SlideResult r = apply_slide(cur, curm, s);
          slides.push_back(s);
          cur = std::move(r.c);
          curm = std::move(r.m);
        }
        if (ok && marked_key(cur, curm) == target) return slides;
      }
    }
  }
  throw DomainError("move did not reduce to a consecutive slide run");
}

SlideAsMoves slide_as_whitehead_pair(const ChordDiagram& c, const ChordSlide& s) {
  if (!slide_valid(c, s)) throw DomainError("invalid slide");
  DiagramMarking dm = standard_diagram_marking(c);
  Realization rz = realize_smoothed(c);
  Pi1Marking pm = realization_marking(c, rz, dm);

  // The two move sites: the core segment between the slots and the chord
  // slid along. Either one may sit at the smoothed right end of the core
  // (segment fused with the last chord, or the chord's far end at the last
  // slot); the move there re-divides the fused edge, which is the identity
  // on the smoothed graph, so only the real sites enter the log.
  int lo = std::min(s.mover, s.along);
  int last = c.slots() - 1;
  std::vector<int> sites;
  if (lo + 1 != last) sites.push_back(rz.g.edge_of(2 * (lo + 1)));
  if (c.partner(s.along) != last) sites.push_back(rz.g.edge_of(rz.away[s.along]));

  SlideAsMoves out;
  out.end_g = rz.g;
  out.end_m = pm;
  for (int e : sites) {
    MoveLogEntry entry;
    entry.graph_key = canonical_form(out.end_g).key;
    entry.edge = e;
    entry.type = classify_move(out.end_g, e).type;
    out.log.push_back(std::move(entry));
    MoveResult r = apply_whitehead(out.end_g, out.end_m, e);
    out.end_g = std::move(r.g);
    out.end_m = std::move(r.m);
  }

  SlideResult expected = apply_slide(c, dm, s);
  BranchReduction red = branch_reduce(out.end_g, out.end_m);
  if (marked_key(red.c, red.m) != marked_key(expected.c, expected.m))
    throw DomainError("move pair did not realize the slide");
  return out;
}

}  // namespace csg
