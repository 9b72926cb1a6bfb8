#include "csg/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace csg {

Word reduced(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw DomainError("word letter must be nonzero");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word mul(const Word& a, const Word& b) {
  Word out = a;
  for (int letter : b) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

bool is_trivial(const Word& w) { return w.empty(); }

Word conjugate(const Word& w, const Word& by) {
  return mul(mul(by, w), inverse(by));
}

Word gen(int i) {
  if (i == 0) throw DomainError("generator index must be nonzero");
  return Word{i};
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += (w[i] > 0 ? 'a' : 'A');
    out += std::to_string(std::abs(w[i]));
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      std::string rest;
      if (!out.empty() || (in >> rest)) throw ParseError("'1' must stand alone");
      return {};
    }
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A'))
      throw ParseError("bad word token '" + tok + "'");
    int idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw ParseError("bad word token '" + tok + "'");
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx == 0) throw ParseError("generator index must be positive in '" + tok + "'");
    out.push_back(tok[0] == 'a' ? idx : -idx);
  }
  return reduced(out);
}

Endomorphism Endomorphism::identity(int rank) {
  Endomorphism f;
  f.rank = rank;
  f.image.reserve(rank);
  for (int i = 1; i <= rank; ++i) f.image.push_back(gen(i));
  return f;
}

bool Endomorphism::is_identity() const {
  for (int i = 0; i < rank; ++i) {
    if (reduced(image[i]) != Word{i + 1}) return false;
  }
  return true;
}

Word apply(const Endomorphism& f, const Word& w) {
  Word out;
  for (int letter : w) {
    int idx = std::abs(letter);
    if (idx > f.rank) throw DomainError("letter outside endomorphism rank");
    const Word& img = f.image[idx - 1];
    if (letter > 0) {
      out = mul(out, img);
    } else {
      out = mul(out, inverse(img));
    }
  }
  return out;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  Endomorphism out;
  out.rank = g.rank;
  out.image.reserve(g.rank);
  for (const Word& w : g.image) out.image.push_back(apply(f, w));
  return out;
}

}  // namespace csg
