#include "csg/marking.hpp"

#include <algorithm>

namespace csg {

std::int64_t det_integer(MatZ m) {
  int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p == -1) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

MatZ standard_symplectic_form(int genus) {
  MatZ j = MatZ::Zero(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

VecZ abelianized(const Word& w, int rank) {
  VecZ v = VecZ::Zero(rank);
  for (int letter : w) {
    int idx = std::abs(letter) - 1;
    if (idx >= rank) throw DomainError("letter outside rank");
    v[idx] += letter > 0 ? 1 : -1;
  }
  return v;
}

HMarking abelianize(const Fatgraph& g, const Pi1Marking& m, int rank) {
  HMarking h;
  h.rank = rank;
  h.label.reserve(g.darts);
  for (int d = 0; d < g.darts; ++d) h.label.push_back(abelianized(m.label[d], rank));
  return h;
}

int pairing(const Fatgraph& g, const BoundaryOrder& bo, Dart x, Dart y) {
  if (g.edge_of(x) == g.edge_of(y)) return 0;
  int a = bo.rank[x], b = bo.rank[y];
  int abar = bo.rank[g.rev[x]], bbar = bo.rank[g.rev[y]];
  // Rotate so x comes first, then read the pattern of the other three.
  auto after = [&](int r) { return r >= a ? r - a : r - a + g.darts; };
  int rb = after(b), rabar = after(abar), rbbar = after(bbar);
  if (rb < rabar && rabar < rbbar) return -1;   // x y xbar ybar
  if (rbbar < rabar && rabar < rb) return 1;    // x ybar xbar y == y x ybar xbar
  return 0;
}

MatZ pairing_matrix(const Fatgraph& g, const BoundaryOrder& bo, const std::vector<Dart>& darts) {
  int n = static_cast<int>(darts.size());
  MatZ p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = pairing(g, bo, darts[i], darts[j]);
  return p;
}

Pi1Marking propagate_from_generators(const Fatgraph& g, const std::vector<Word>& gen_labels) {
  BoundaryOrder bo = boundary_order(g);
  GeneratorSet gs = greedy_tree(g, bo);
  if (gen_labels.size() != gs.generators.size())
    throw DomainError("generator label count mismatch");

  Pi1Marking m;
  m.label.assign(g.darts, Word{});
  std::vector<char> known(g.darts, 0);
  for (size_t i = 0; i < gs.generators.size(); ++i) {
    Dart d = gs.generators[i];
    m.label[d] = gen_labels[i];
    m.label[g.rev[d]] = inverse(gen_labels[i]);
    known[d] = known[g.rev[d]] = 1;
  }
  int base = g.head[g.rev[g.tail]];
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < g.vertices(); ++v) {
      if (v == base) continue;
      int unknown = -1, count = 0;
      for (int d : g.rot[v])
        if (!known[d]) {
          unknown = d;
          ++count;
        }
      if (count != 1) continue;
      // Product around the vertex starting just after the unknown dart.
      const auto& cyc = g.rot[v];
      int at = rot_index(g, unknown);
      Word prod;
      for (size_t i = 1; i < cyc.size(); ++i)
        prod = mul(prod, m.label[cyc[(at + i) % cyc.size()]]);
      m.label[unknown] = inverse(prod);
      m.label[g.rev[unknown]] = prod;
      known[unknown] = known[g.rev[unknown]] = 1;
      progress = true;
    }
  }
  if (std::find(known.begin(), known.end(), 0) != known.end())
    throw DomainError("propagation left labels undetermined");
  return m;
}

Pi1Marking standard_marking(const Fatgraph& g) {
  BoundaryOrder bo = boundary_order(g);
  GeneratorSet gs = greedy_tree(g, bo);
  std::vector<Word> labels;
  labels.reserve(gs.generators.size());
  for (size_t i = 0; i < gs.generators.size(); ++i) labels.push_back(gen(static_cast<int>(i) + 1));
  return propagate_from_generators(g, labels);
}

MarkingReport validate_marking(const Fatgraph& g, const Pi1Marking& m,
                               const std::optional<Word>& boundary) {
  MarkingReport r;
  if (static_cast<int>(m.label.size()) != g.darts) {
    r.violation = "orientation";
    r.witness = -1;
    return r;
  }
  for (int d = 0; d < g.darts; ++d) {
    if (d > g.rev[d]) continue;
    if (!is_trivial(mul(m.label[d], m.label[g.rev[d]]))) {
      r.violation = "orientation";
      r.witness = d;
      return r;
    }
  }
  int base = g.head[g.rev[g.tail]];
  for (int v = 0; v < g.vertices(); ++v) {
    if (v == base) continue;
    Word prod;
    for (int d : g.rot[v]) prod = mul(prod, m.label[d]);
    if (!is_trivial(prod)) {
      r.violation = "vertex";
      r.witness = v;
      return r;
    }
  }
  BoundaryOrder bo = boundary_order(g);
  GeneratorSet gs = greedy_tree(g, bo);
  int rank = static_cast<int>(gs.generators.size());
  for (int d = 0; d < g.darts; ++d)
    for (int letter : m.label[d])
      if (std::abs(letter) > rank) {
        r.violation = "surjectivity";
        r.witness = d;
        return r;
      }
  MatZ ab(rank, rank);
  for (int i = 0; i < rank; ++i) ab.col(i) = abelianized(m.label[gs.generators[i]], rank);
  if (!is_unimodular(ab)) {
    r.violation = "surjectivity";
    r.witness = -1;
    return r;
  }
  const Word& t_out = m.label[g.tail];
  if (!abelianized(t_out, rank).isZero()) {
    r.violation = "geometricity";
    r.witness = g.tail;
    return r;
  }
  if (boundary && t_out != *boundary) {
    r.violation = "geometricity";
    r.witness = g.tail;
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace csg
