#include "csg/symplectic.hpp"

#include <algorithm>

namespace csg {

SymplecticReduction symplectic_reduce(const MatZ& p) {
  int n = static_cast<int>(p.rows());
  if (p.cols() != n || n % 2) throw DomainError("pairing matrix must be even-sized");
  if (p.transpose() != -p) throw DomainError("pairing matrix must be antisymmetric");

  SymplecticReduction out;
  MatZ q = p;
  out.m = MatZ::Identity(n, n);
  for (int a = 0; a < n; a += 2) {
    ReductionStage stage;
    stage.pivot = a;
    int found = -1;
    for (int i = a + 1; i < n && found == -1; ++i)
      if (q(a, i) != 0) found = i;
    if (found == -1) throw DomainError("degenerate pairing");
    stage.partner = found;
    stage.divisor = q(a, found);
    if (stage.divisor != 1 && stage.divisor != -1)
      throw DomainError("pairing divisor is not a unit");

    if (stage.divisor == -1) {
      q.row(found) = -q.row(found);
      q.col(found) = -q.col(found);
      out.m.row(found) = -out.m.row(found);
    }
    // rotate the partner up to a+1
    for (int i = found; i > a + 1; --i) {
      q.row(i).swap(q.row(i - 1));
      q.col(i).swap(q.col(i - 1));
      out.m.row(i).swap(out.m.row(i - 1));
    }
    int b = a + 1;
    for (int j = b + 1; j < n; ++j) {
      long long ca = q(j, b), cb = q(j, a);
      stage.coeff_a.push_back(ca);
      stage.coeff_b.push_back(cb);
      if (ca == 0 && cb == 0) continue;
      q.row(j) += -ca * q.row(a) + cb * q.row(b);
      q.col(j) += -ca * q.col(a) + cb * q.col(b);
      out.m.row(j) += -ca * out.m.row(a) + cb * out.m.row(b);
    }
    out.stages.push_back(std::move(stage));
  }
  MatZ form = standard_symplectic_form(n / 2);
  if (out.m * p * out.m.transpose() != form)
    throw DomainError("reduction did not reach the standard form");

  // m p m^T = J and J^(-1) = -J give m^(-1) = -p m^T J
  out.u = -(p * out.m.transpose() * form);
  if (out.u * out.m != MatZ::Identity(n, n))
    throw DomainError("transform inversion failed");
  return out;
}

namespace {

int left_end(const ChordDiagram& c, int chord) {
  return std::min(c.end_slot(chord, true), c.end_slot(chord, false));
}

int right_end(const ChordDiagram& c, int chord) {
  return std::max(c.end_slot(chord, true), c.end_slot(chord, false));
}

}  // namespace

SlideReduction realize_reduction_by_slides(const DualMarked& start) {
  SlideReduction out;
  out.order_start = dual_chord_order(start.c);
  out.end = start;
  std::vector<int> order = out.order_start;

  int n = start.c.k;
  for (int a = 0; a < n; a += 2) {
    SlideStage stage;
    int pivot = order[a];
    stage.pivot_chord = pivot;

    int found = -1;
    for (int i = a + 1; i < n && found == -1; ++i)
      if (crossing_pairing(out.end.c, pivot, order[i]) != 0) found = i;
    if (found == -1) throw DomainError("degenerate diagram pairing");
    int partner = order[found];
    stage.partner_chord = partner;
    stage.divisor = crossing_pairing(out.end.c, pivot, partner);

    if (stage.divisor == -1) {
      reorient_chord_h(out.end, partner);
      stage.reoriented = true;
    }
    std::rotate(order.begin() + a + 1, order.begin() + found, order.begin() + found + 1);
    stage.order_after = order;

    // x opens leftmost; the crossing shape is then  x1 < y1 < x2 < y2
    int x = left_end(out.end.c, pivot) < left_end(out.end.c, partner) ? pivot : partner;
    int y = x == pivot ? partner : pivot;

    auto slide_to = [&](int mover_slot, int along_slot) {
      ChordSlide s{mover_slot, along_slot};
      stage.slides.push_back(s);
      out.end = dual_slide_h(out.end, s);
    };
    // middle span (y1, x2): movers pass x2 and land right of x1;
    // left span (x1, y1): movers pass y1 and land right of y2, outside;
    // right span (x2, y2): movers pass x2 and land left of x1, outside
    for (;;) {
      int x2 = right_end(out.end.c, x);
      if (left_end(out.end.c, y) == x2 - 1) break;
      slide_to(x2 - 1, x2);
    }
    for (;;) {
      int y1 = left_end(out.end.c, y);
      if (left_end(out.end.c, x) == y1 - 1) break;
      slide_to(y1 - 1, y1);
    }
    for (;;) {
      int x2 = right_end(out.end.c, x);
      if (right_end(out.end.c, y) == x2 + 1) break;
      slide_to(x2 + 1, x2);
    }
    stage.c_after = out.end.c;
    stage.h_after = out.end.h;
    out.stages.push_back(std::move(stage));
  }
  return out;
}

}  // namespace csg
