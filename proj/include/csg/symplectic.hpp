#pragma once

#include <vector>

#include "csg/dual.hpp"
#include "csg/intmat.hpp"

namespace csg {

// One stage of the integer reduction: pick the pivot row as the next A
// vector, find its first partner below, normalize the pairing to +1, rotate
// the partner up next to the pivot, then clear every later row against the
// pair. The clearing coefficients are recorded row by row.
struct ReductionStage {
  int pivot = 0;
  int partner = 0;         // index where the partner sat before rotating
  long long divisor = 1;   // pairing value there; the input is rejected unless +-1
  std::vector<long long> coeff_a;  // per row pivot+2.., multiplied into A
  std::vector<long long> coeff_b;  // same rows, multiplied into B
};

struct SymplecticReduction {
  MatZ u;  // u * J * u^T = input, rows = input basis in the new one
  MatZ m;  // m = u^(-1), rows = the symplectic basis in the input one
  std::vector<ReductionStage> stages;
};

// Standard form J: antisymmetric, J(2i, 2i+1) = +1. Throws DomainError when
// the form is degenerate on the remaining rows or a pairing divisor is not a
// unit; anything harvested from a bordered diagram never trips either.
SymplecticReduction symplectic_reduce(const MatZ& p);

// The same reduction carried out on a homology-marked dual diagram by chord
// slides: per stage an orientation fix on the partner when the pairing is -1,
// then deterministic slides emptying the span between the pivot pair's ends.
// Row bookkeeping (which chord plays which row) is recorded, not slid.
struct SlideStage {
  int pivot_chord = -1;
  int partner_chord = -1;
  long long divisor = 1;
  bool reoriented = false;
  std::vector<int> order_after;  // row -> chord once the partner is rotated up
  std::vector<ChordSlide> slides;
  ChordDiagram c_after;
  MatZ h_after;
};

struct SlideReduction {
  std::vector<int> order_start;  // row -> chord, by leftmost end
  std::vector<SlideStage> stages;
  DualMarked end;
};

SlideReduction realize_reduction_by_slides(const DualMarked& start);

}  // namespace csg
