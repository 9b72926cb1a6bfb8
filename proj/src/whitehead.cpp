#include "csg/whitehead.hpp"

#include <algorithm>
#include <map>

namespace csg {

namespace {

// rot[head(d)] rotated to start at d.
std::vector<int> rot_from(const Fatgraph& g, Dart d) {
  const auto& cyc = g.rot[g.head[d]];
  int at = rot_index(g, d);
  std::vector<int> out;
  out.reserve(cyc.size());
  for (size_t i = 0; i < cyc.size(); ++i) out.push_back(cyc[(at + i) % cyc.size()]);
  return out;
}

void require_movable(const Fatgraph& g, int edge) {
  Dart d = edge, db = g.rev[edge];
  if (g.tail != -1 && g.edge_of(g.tail) == g.edge_of(edge))
    throw DomainError("cannot move the tail edge");
  if (g.head[d] == g.head[db]) throw DomainError("cannot move a loop edge");
  if (g.valence(g.head[d]) != 3 || g.valence(g.head[db]) != 3)
    throw DomainError("move needs trivalent endpoints");
}

}  // namespace

MoveResult apply_whitehead(const Fatgraph& g, const Pi1Marking& m, int edge) {
  require_movable(g, edge);
  Dart d = edge, db = g.rev[edge];
  int p = g.head[d], q = g.head[db];
  auto at_p = rot_from(g, d);   // (d, s1, s2)
  auto at_q = rot_from(g, db);  // (db, s3, s4)
  Dart s1 = at_p[1], s2 = at_p[2], s3 = at_q[1], s4 = at_q[2];

  MoveResult r;
  r.g = g;
  r.g.rot[p] = {d, s4, s1};
  r.g.rot[q] = {db, s2, s3};
  r.g.head[s4] = p;
  r.g.head[s2] = q;
  r.new_edge = g.edge_of(d);

  r.m = m;
  Word nd = mul(inverse(m.label[s1]), inverse(m.label[s4]));
  r.m.label[d] = nd;
  r.m.label[db] = inverse(nd);
  return r;
}

std::pair<Fatgraph, std::vector<int>> contract_edge(const Fatgraph& g, int edge) {
  Dart d = edge, db = g.rev[edge];
  int p = g.head[d], q = g.head[db];
  if (p == q) throw DomainError("cannot contract a loop");

  std::vector<int> dart_map(g.darts, -1);
  int next = 0;
  for (int x = 0; x < g.darts; ++x)
    if (x != d && x != db) dart_map[x] = next++;

  Fatgraph out;
  out.darts = next;
  out.rev.assign(next, -1);
  out.head.assign(next, -1);
  for (int x = 0; x < g.darts; ++x)
    if (dart_map[x] != -1) out.rev[dart_map[x]] = dart_map[g.rev[x]];

  auto at_p = rot_from(g, d);
  auto at_q = rot_from(g, db);
  std::vector<int> merged;
  for (size_t i = 1; i < at_p.size(); ++i) merged.push_back(dart_map[at_p[i]]);
  for (size_t i = 1; i < at_q.size(); ++i) merged.push_back(dart_map[at_q[i]]);

  for (int v = 0; v < g.vertices(); ++v) {
    if (v == p || v == q) continue;
    std::vector<int> cyc;
    for (int x : g.rot[v]) cyc.push_back(dart_map[x]);
    int nv = static_cast<int>(out.rot.size());
    for (int x : cyc) out.head[x] = nv;
    out.rot.push_back(std::move(cyc));
  }
  int nv = static_cast<int>(out.rot.size());
  for (int x : merged) out.head[x] = nv;
  out.rot.push_back(std::move(merged));
  if (g.tail != -1) out.tail = dart_map[g.tail];
  out.check_well_formed();
  return {out, dart_map};
}

std::vector<int> corner_visit_label(const Fatgraph& g, const BoundaryOrder& bo, int vertex) {
  const auto& cyc = g.rot[vertex];
  int n = static_cast<int>(cyc.size());
  // The boundary crosses corner i when it arrives along cyc[i].
  std::vector<int> visit(n);
  for (int i = 0; i < n; ++i) visit[i] = bo.rank[cyc[i]];
  std::vector<int> number(n);  // corner -> visit order, 1-based
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return visit[a] < visit[b]; });
  for (int i = 0; i < n; ++i) number[order[i]] = i + 1;
  int first = order[0];
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = number[((first - i) % n + n) % n];
  return label;
}

MoveClass classify_move(const Fatgraph& g, int edge) {
  require_movable(g, edge);
  auto [gc, dmap] = contract_edge(g, edge);
  BoundaryOrder bo = boundary_order(gc);
  int v = gc.head[dmap[rot_from(g, edge)[1]]];
  std::vector<int> label = corner_visit_label(gc, bo, v);

  MoveClass mc;
  std::copy_n(label.begin(), 4, mc.corner_label.begin());

  // The corner reading alone does not separate the six kinds (it forgets
  // where the collapsed edge sat), so the type is read off the transported
  // generating system: identity transport is type 1 or 2, a plain value
  // rewrite is 3 or 4, a rewrite with a cyclic shift of the other
  // generators is 5 or 6. Within each pair the leading sign of the new
  // value decides.
  Endomorphism lift = nielsen_lift(g, edge);
  if (lift.is_identity()) {
    mc.type = mc.corner_label == std::array<int, 4>{1, 4, 3, 2} ? 1 : 2;
    return mc;
  }
  int changed = 0;
  Word value;
  for (size_t i = 0; i < lift.image.size(); ++i) {
    Word w = reduced(lift.image[i]);
    if (w == Word{static_cast<int>(i) + 1}) continue;
    ++changed;
    if (w.size() >= 2 && value.empty()) value = w;
  }
  if (value.empty()) throw DomainError("move transport left no rewritten generator");
  if (changed == 1)
    mc.type = value.front() > 0 ? 3 : 4;
  else
    mc.type = value.front() > 0 ? 5 : 6;
  return mc;
}

Endomorphism nielsen_lift(const Fatgraph& g, int edge) {
  MoveResult r = apply_whitehead(g, standard_marking(g), edge);
  BoundaryOrder bo = boundary_order(r.g);
  GeneratorSet gs = greedy_tree(r.g, bo);
  Endomorphism lift;
  lift.rank = static_cast<int>(gs.generators.size());
  lift.image.reserve(lift.rank);
  for (Dart x : gs.generators) lift.image.push_back(r.m.label[x]);
  return lift;
}

std::string marked_graph_key(const Fatgraph& g, const Pi1Marking& m) {
  CanonicalForm cf = canonical_form(g);
  std::vector<std::string> words(g.darts);
  for (int d = 0; d < g.darts; ++d) words[cf.dart_map[d]] = format_word(m.label[d]);
  std::string key = cf.key + ";labels";
  for (const std::string& w : words) key += " <" + w + ">";
  return key;
}

std::vector<int> movable_edges(const Fatgraph& g) {
  std::vector<int> out;
  int tail_edge = g.tail == -1 ? -1 : g.edge_of(g.tail);
  for (int d = 0; d < g.darts; ++d)
    if (d < g.rev[d] && d != tail_edge) out.push_back(d);
  return out;
}

MoveSequence relation_sequence(const Fatgraph& g, const Pi1Marking& m, MoveRelation kind,
                               int edge_e, int edge_f) {
  auto endpoints = [&](const Fatgraph& gr, int e) {
    return std::pair<int, int>{gr.head[e], gr.head[gr.rev[e]]};
  };
  std::vector<int> schedule;
  switch (kind) {
    case MoveRelation::Involutivity:
      schedule = {edge_e, edge_e};
      break;
    case MoveRelation::Commutativity: {
      auto [p1, q1] = endpoints(g, edge_e);
      auto [p2, q2] = endpoints(g, edge_f);
      if (p1 == p2 || p1 == q2 || q1 == p2 || q1 == q2)
        throw DomainError("commutativity needs edges with no shared vertex");
      schedule = {edge_e, edge_f, edge_e, edge_f};
      break;
    }
    case MoveRelation::Pentagon: {
      auto [p1, q1] = endpoints(g, edge_e);
      auto [p2, q2] = endpoints(g, edge_f);
      int shared = (p1 == p2) + (p1 == q2) + (q1 == p2) + (q1 == q2);
      if (shared != 1) throw DomainError("pentagon needs edges sharing exactly one vertex");
      schedule = {edge_e, edge_f, edge_e, edge_f, edge_e};
      break;
    }
  }

  MoveSequence seq;
  seq.end_g = g;
  seq.end_m = m;
  for (int e : schedule) {
    MoveLogEntry entry;
    entry.graph_key = canonical_form(seq.end_g).key;
    entry.edge = e;
    entry.type = classify_move(seq.end_g, e).type;
    seq.log.push_back(std::move(entry));
    MoveResult r = apply_whitehead(seq.end_g, seq.end_m, e);
    seq.end_g = std::move(r.g);
    seq.end_m = std::move(r.m);
  }
  if (marked_graph_key(seq.end_g, seq.end_m) != marked_graph_key(g, m))
    throw DomainError("relation sequence did not close");
  return seq;
}

}  // namespace csg
