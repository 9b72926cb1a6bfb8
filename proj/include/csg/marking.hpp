#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csg/fatgraph.hpp"
#include "csg/intmat.hpp"
#include "csg/words.hpp"

namespace csg {

// Fundamental-group labels on the darts of a bordered fatgraph. A valid
// marking satisfies, in this order of checking:
//   orientation   label(d) * label(rev d) == 1 for every edge
//   vertex        the cyclic product of incoming labels is trivial at every
//                 vertex except the univalent base (there the product would
//                 be the boundary word itself, which is never trivial)
//   surjectivity  the abelianization matrix of the generator labels is
//                 unimodular
//   geometricity  the label of the inward tail dart is null-homologous, and
//                 matches the caller's boundary word when one is supplied
struct Pi1Marking {
  std::vector<Word> label;  // per dart
  bool operator==(const Pi1Marking& other) const = default;
};

struct MarkingReport {
  bool ok = false;
  std::string violation;  // orientation | vertex | surjectivity | geometricity
  int witness = -1;       // edge id, vertex id, or dart id of the failure
};

MarkingReport validate_marking(const Fatgraph& g, const Pi1Marking& m,
                               const std::optional<Word>& boundary = std::nullopt);

// The marking sending the i-th generator dart to g_i; tree labels follow by
// propagating the vertex conditions.
Pi1Marking standard_marking(const Fatgraph& g);

// Fills in every label from the generator labels alone, using orientation and
// vertex conditions. Throws when the data does not determine the tree.
Pi1Marking propagate_from_generators(const Fatgraph& g, const std::vector<Word>& gen_labels);

// Exponent vectors of the labels in the free group of the given rank.
struct HMarking {
  int rank = 0;
  std::vector<VecZ> label;  // per dart
};

VecZ abelianized(const Word& w, int rank);
HMarking abelianize(const Fatgraph& g, const Pi1Marking& m, int rank);

// Pairing of two oriented edges read off the linear boundary order:
//   -1 when x < y < xbar < ybar cyclically,
//   +1 when y < x < ybar < xbar cyclically,
//    0 otherwise (in particular on x, xbar).
int pairing(const Fatgraph& g, const BoundaryOrder& bo, Dart x, Dart y);

// Gram matrix of the pairing on a list of darts.
MatZ pairing_matrix(const Fatgraph& g, const BoundaryOrder& bo, const std::vector<Dart>& darts);

}  // namespace csg
