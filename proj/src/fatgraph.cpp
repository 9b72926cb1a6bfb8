#include "csg/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace csg {

void Fatgraph::check_well_formed() const {
  if (darts % 2 != 0) throw DomainError("odd dart count");
  if (static_cast<int>(rev.size()) != darts || static_cast<int>(head.size()) != darts)
    throw DomainError("rev/head size mismatch");
  for (int d = 0; d < darts; ++d) {
    if (rev[d] < 0 || rev[d] >= darts || rev[d] == d || rev[rev[d]] != d)
      throw DomainError("rev is not a fixed-point-free involution");
  }
  std::vector<int> seen(darts, 0);
  for (int v = 0; v < vertices(); ++v) {
    if (rot[v].empty()) throw DomainError("empty vertex");
    for (int d : rot[v]) {
      if (d < 0 || d >= darts || seen[d]++) throw DomainError("rot is not a partition of darts");
      if (head[d] != v) throw DomainError("head inconsistent with rot");
    }
  }
  for (int d = 0; d < darts; ++d)
    if (!seen[d]) throw DomainError("dart missing from rot");
  if (tail != -1) {
    if (tail < 0 || tail >= darts) throw DomainError("tail out of range");
    if (valence(head[rev[tail]]) != 1) throw DomainError("tail does not leave a univalent vertex");
  }
}

int rot_index(const Fatgraph& g, Dart d) {
  const auto& cyc = g.rot[g.head[d]];
  for (size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == d) return static_cast<int>(i);
  throw DomainError("dart not at its head vertex");
}

Dart next_incoming(const Fatgraph& g, Dart d) {
  const auto& cyc = g.rot[g.head[d]];
  int i = rot_index(g, d);
  return cyc[(i + 1) % cyc.size()];
}

Dart prev_incoming(const Fatgraph& g, Dart d) {
  const auto& cyc = g.rot[g.head[d]];
  int i = rot_index(g, d);
  return cyc[(i + cyc.size() - 1) % cyc.size()];
}

Dart boundary_successor(const Fatgraph& g, Dart d) {
  return g.rev[next_incoming(g, d)];
}

std::vector<std::vector<Dart>> boundary_cycles(const Fatgraph& g) {
  std::vector<char> used(g.darts, 0);
  std::vector<std::vector<Dart>> out;
  for (int start = 0; start < g.darts; ++start) {
    if (used[start]) continue;
    std::vector<Dart> cyc;
    int d = start;
    do {
      cyc.push_back(d);
      used[d] = 1;
      d = boundary_successor(g, d);
    } while (d != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

BorderedReport validate_bordered(const Fatgraph& g, bool allow_bivalent) {
  BorderedReport r;
  try {
    g.check_well_formed();
  } catch (const DomainError& e) {
    r.error = e.what();
    return r;
  }
  if (g.tail == -1) {
    r.error = "no tail designated";
    return r;
  }
  int base = g.head[g.rev[g.tail]];
  int bivalent_seen = 0;
  for (int v = 0; v < g.vertices(); ++v) {
    int val = g.valence(v);
    if (v == base) continue;
    if (val == 1) {
      r.error = "univalent vertex away from the tail";
      return r;
    }
    if (val == 2) {
      if (!allow_bivalent || ++bivalent_seen > 1) {
        r.error = "bivalent vertex";
        return r;
      }
      continue;
    }
  }
  auto cycles = boundary_cycles(g);
  if (cycles.size() != 1) {
    r.error = "boundary has " + std::to_string(cycles.size()) + " cycles, expected 1";
    return r;
  }
  int chi = g.vertices() - g.edges();
  if (chi > 1 || (1 - chi) % 2 != 0) {
    r.error = "Euler characteristic " + std::to_string(chi) + " is not 1-2g";
    return r;
  }
  r.ok = true;
  r.genus = (1 - chi) / 2;
  return r;
}

Dart BoundaryOrder::preferred_dart(const Fatgraph& g, int edge) const {
  return rank[edge] < rank[g.rev[edge]] ? edge : g.rev[edge];
}

BoundaryOrder boundary_order(const Fatgraph& g) {
  if (g.tail == -1) throw DomainError("boundary order needs a tail");
  BoundaryOrder bo;
  bo.rank.assign(g.darts, -1);
  int d = g.tail;
  do {
    bo.rank[d] = static_cast<int>(bo.seq.size());
    bo.seq.push_back(d);
    d = boundary_successor(g, d);
  } while (d != g.tail);
  if (static_cast<int>(bo.seq.size()) != g.darts)
    throw DomainError("boundary is not a single cycle");
  return bo;
}

GeneratorSet greedy_tree(const Fatgraph& g, const BoundaryOrder& bo) {
  GeneratorSet gs;
  gs.in_tree.assign(g.darts, 0);
  std::vector<int> min_rank_at(g.vertices(), INT32_MAX);
  for (int d = 0; d < g.darts; ++d)
    min_rank_at[g.head[d]] = std::min(min_rank_at[g.head[d]], bo.rank[d]);
  std::vector<std::pair<int, Dart>> nontree;  // (rank of preferred dart, dart)
  for (int d = 0; d < g.darts; ++d) {
    if (!bo.preferred(g, d)) continue;
    if (bo.rank[d] == min_rank_at[g.head[d]]) {
      gs.in_tree[d] = gs.in_tree[g.rev[d]] = 1;
    } else {
      nontree.emplace_back(bo.rank[d], d);
    }
  }
  std::sort(nontree.begin(), nontree.end());
  for (auto [r, d] : nontree) gs.generators.push_back(d);
  int first_gen_rank = nontree.empty() ? INT32_MAX : nontree.front().first;
  std::vector<std::pair<int, Dart>> spine;
  for (int d = 0; d < g.darts; ++d) {
    if (gs.in_tree[d] && bo.preferred(g, d) && bo.rank[d] < first_gen_rank)
      spine.emplace_back(bo.rank[d], d);
  }
  std::sort(spine.begin(), spine.end());
  for (auto [r, d] : spine) gs.spine.push_back(d);
  return gs;
}

Fatgraph relabeled(const Fatgraph& g, const std::vector<int>& dart_map) {
  Fatgraph out;
  out.darts = g.darts;
  out.rev.assign(g.darts, -1);
  out.head.assign(g.darts, -1);
  for (int d = 0; d < g.darts; ++d) out.rev[dart_map[d]] = dart_map[g.rev[d]];

  // Order vertices by their smallest renamed incoming dart and start each
  // rotation at that dart, so the arrays are a function of the renaming only.
  std::vector<std::pair<int, int>> order;  // (min dart, old vertex)
  for (int v = 0; v < g.vertices(); ++v) {
    int m = g.darts;
    for (int d : g.rot[v]) m = std::min(m, dart_map[d]);
    order.emplace_back(m, v);
  }
  std::sort(order.begin(), order.end());
  for (auto [mindart, v] : order) {
    std::vector<int> cyc;
    cyc.reserve(g.rot[v].size());
    size_t start = 0;
    for (size_t i = 0; i < g.rot[v].size(); ++i)
      if (dart_map[g.rot[v][i]] == mindart) start = i;
    for (size_t i = 0; i < g.rot[v].size(); ++i)
      cyc.push_back(dart_map[g.rot[v][(start + i) % g.rot[v].size()]]);
    int nv = static_cast<int>(out.rot.size());
    for (int d : cyc) out.head[d] = nv;
    out.rot.push_back(std::move(cyc));
  }
  if (g.tail != -1) out.tail = dart_map[g.tail];
  return out;
}

CanonicalForm canonical_form(const Fatgraph& g) {
  BoundaryOrder bo = boundary_order(g);
  CanonicalForm cf;
  cf.dart_map = bo.rank;  // first-visit rank along the boundary
  Fatgraph c = relabeled(g, cf.dart_map);
  std::ostringstream key;
  key << c.darts << ";rev";
  for (int d = 0; d < c.darts; ++d) key << ' ' << c.rev[d];
  key << ";rot";
  for (const auto& cyc : c.rot) {
    key << " (";
    for (size_t i = 0; i < cyc.size(); ++i) key << (i ? " " : "") << cyc[i];
    key << ")";
  }
  key << ";tail " << c.tail;
  cf.key = key.str();
  return cf;
}

std::pair<Fatgraph, std::vector<int>> smooth_bivalent(const Fatgraph& g, int v) {
  if (g.valence(v) != 2) throw DomainError("vertex is not bivalent");
  Dart x = g.rot[v][0], y = g.rot[v][1];
  if (g.edge_of(x) == g.edge_of(y)) throw DomainError("cannot smooth a loop at a bivalent vertex");

  std::vector<int> dart_map(g.darts, -1);
  int next = 0;
  for (int d = 0; d < g.darts; ++d)
    if (d != x && d != y) dart_map[d] = next++;

  Fatgraph out;
  out.darts = next;
  out.rev.assign(next, -1);
  out.head.assign(next, -1);
  for (int d = 0; d < g.darts; ++d) {
    if (dart_map[d] == -1) continue;
    int r = g.rev[d];
    if (r == x) r = g.rev[y];  // fuse: past v, continue along the other edge
    if (r == y) r = g.rev[x];
    out.rev[dart_map[d]] = dart_map[r];
  }
  for (int w = 0; w < g.vertices(); ++w) {
    if (w == v) continue;
    std::vector<int> cyc;
    for (int d : g.rot[w]) cyc.push_back(dart_map[d]);
    int nv = static_cast<int>(out.rot.size());
    for (int d : cyc) out.head[d] = nv;
    out.rot.push_back(std::move(cyc));
  }
  if (g.tail != -1) {
    if (dart_map[g.tail] != -1) {
      out.tail = dart_map[g.tail];
    } else {
      // The tail dart pointed at v and was fused away; the fused edge still
      // leaves the base vertex, as the reverse of the surviving inward dart.
      out.tail = out.rev[dart_map[g.rev[g.tail]]];
    }
  }
  out.check_well_formed();
  return {out, dart_map};
}

std::string to_dot(const Fatgraph& g) {
  std::ostringstream out;
  out << "graph fatgraph {\n";
  int base = g.tail == -1 ? -1 : g.head[g.rev[g.tail]];
  for (int v = 0; v < g.vertices(); ++v) {
    out << "  v" << v << " [label=\"v" << v;
    if (v == base) out << " base";
    out << "\"];\n";
  }
  int tail_edge = g.tail == -1 ? -1 : g.edge_of(g.tail);
  for (int d = 0; d < g.darts; ++d) {
    if (d > g.rev[d]) continue;
    out << "  v" << g.head[g.rev[d]] << " -- v" << g.head[d] << " [label=\"e" << d;
    if (d == tail_edge) out << " tail";
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace csg
