#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace csg {

// Error taxonomy shared across the library. DomainError covers inputs that are
// well formed but violate a precondition (non-bordered graph, invalid slide,
// non-unit pivot, ...). ParseError covers malformed text or JSON.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reduced word in a finitely generated free group. Letter +i stands for the
// i-th generator (1-based), -i for its inverse. The empty word is the
// identity. All functions below keep words reduced.
using Word = std::vector<int>;

Word reduced(const Word& w);
Word mul(const Word& a, const Word& b);
Word inverse(const Word& w);
bool is_trivial(const Word& w);

// by * w * by^-1
Word conjugate(const Word& w, const Word& by);

Word gen(int i);  // one-letter word, i may be negative

// Text form: lowercase = positive, uppercase = inverse, 1-based index suffix.
// "a1 A2 a3" is g1 g2^-1 g3; the identity prints as "1".
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

// Endomorphism of a free group of the given rank, stored by generator images.
struct Endomorphism {
  int rank = 0;
  std::vector<Word> image;  // image[i] is where generator i+1 goes

  static Endomorphism identity(int rank);
  bool is_identity() const;
  bool operator==(const Endomorphism& other) const = default;
};

// Substitutes images for letters and reduces.
Word apply(const Endomorphism& f, const Word& w);

// apply(compose(f, g), w) == apply(f, apply(g, w))
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

}  // namespace csg
