#pragma once

// Naive reference computations used as test oracles. Everything is derived
// by brute force from the raw sum table, without the library's order, lattice
// or substructure code.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "eat/core.hpp"
#include "eat/eat_format.hpp"

namespace oracle {

using eat::Element;
using eat::kUndefined;
using eat::SumTable;

struct Naive {
  const SumTable& t;
  std::size_t n() const { return t.size(); }

  Element sum(Element x, Element y) const { return t.at(x, y); }

  bool leq(Element x, Element y) const {
    for (Element z = 0; z < n(); ++z) {
      if (t.at(x, z) == y) return true;
    }
    return false;
  }

  Element complement(Element x) const {
    for (Element y = 0; y < n(); ++y) {
      if (t.at(x, y) == t.unit) return y;
    }
    return kUndefined;
  }

  Element ominus(Element y, Element x) const {
    for (Element z = 0; z < n(); ++z) {
      if (t.at(x, z) == y) return z;
    }
    return kUndefined;
  }

  // Greatest lower bound by scanning all lower bounds; kUndefined if none.
  Element meet(Element x, Element y) const {
    for (Element m = 0; m < n(); ++m) {
      if (!leq(m, x) || !leq(m, y)) continue;
      bool greatest = true;
      for (Element l = 0; l < n() && greatest; ++l) {
        if (leq(l, x) && leq(l, y) && !leq(l, m)) greatest = false;
      }
      if (greatest) return m;
    }
    return kUndefined;
  }

  Element join(Element x, Element y) const {
    for (Element j = 0; j < n(); ++j) {
      if (!leq(x, j) || !leq(y, j)) continue;
      bool least = true;
      for (Element u = 0; u < n() && least; ++u) {
        if (leq(x, u) && leq(y, u) && !leq(j, u)) least = false;
      }
      if (least) return j;
    }
    return kUndefined;
  }

  // The four axioms checked literally over all pairs and triples.
  bool valid_algebra() const {
    if (t.zero == t.unit) return false;
    for (Element x = 0; x < n(); ++x) {
      for (Element y = 0; y < n(); ++y) {
        if (t.at(x, y) != t.at(y, x)) return false;
        for (Element z = 0; z < n(); ++z) {
          const Element xy = t.at(x, y), yz = t.at(y, z);
          const Element lhs = xy == kUndefined ? kUndefined : t.at(xy, z);
          const Element rhs = yz == kUndefined ? kUndefined : t.at(x, yz);
          if (lhs != rhs) return false;
        }
      }
      std::size_t complements = 0;
      for (Element y = 0; y < n(); ++y) complements += t.at(x, y) == t.unit;
      if (complements != 1) return false;
      if (t.at(t.unit, x) != kUndefined && x != t.zero) return false;
    }
    return true;
  }

  bool is_lattice() const {
    for (Element x = 0; x < n(); ++x) {
      for (Element y = 0; y < n(); ++y) {
        if (meet(x, y) == kUndefined || join(x, y) == kUndefined) return false;
      }
    }
    return true;
  }

  bool compatible(Element x, Element y) const {
    const Element m = meet(x, y);
    const Element d = ominus(y, m);
    return t.at(x, d) != kUndefined && t.at(x, d) == join(x, y);
  }

  bool sharp(Element x) const { return meet(x, complement(x)) == t.zero; }

  bool meager(Element x) const {
    for (Element s = 0; s < n(); ++s) {
      if (s != t.zero && sharp(s) && leq(s, x)) return false;
    }
    return true;
  }

  bool central(Element x) const {
    for (Element y = 0; y < n(); ++y) {
      if (join(meet(y, x), meet(y, complement(x))) != y) return false;
    }
    return true;
  }

  std::vector<Element> atoms() const {
    std::vector<Element> out;
    for (Element a = 0; a < n(); ++a) {
      if (a == t.zero) continue;
      bool minimal = true;
      for (Element b = 0; b < n() && minimal; ++b) {
        if (b != t.zero && b != a && leq(b, a)) minimal = false;
      }
      if (minimal) out.push_back(a);
    }
    return out;
  }

  Element lower_envelope(Element x) const {
    Element best = t.zero;
    for (Element s = 0; s < n(); ++s) {
      if (sharp(s) && leq(s, x) && leq(best, s)) best = s;
    }
    return best;
  }

  Element upper_envelope(Element x) const {
    Element best = t.unit;
    for (Element s = 0; s < n(); ++s) {
      if (sharp(s) && leq(x, s) && leq(s, best)) best = s;
    }
    return best;
  }

  // Maximal pairwise compatible sets by bitmask enumeration (n <= 20).
  std::vector<std::vector<Element>> blocks() const {
    const std::size_t count = n();
    std::vector<unsigned> cliques;
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
      bool ok = true;
      for (Element x = 0; x < count && ok; ++x) {
        if (!(mask >> x & 1)) continue;
        for (Element y = x + 1; y < count && ok; ++y) {
          if (mask >> y & 1) ok = compatible(x, y);
        }
      }
      if (ok) cliques.push_back(mask);
    }
    std::vector<std::vector<Element>> out;
    for (unsigned c : cliques) {
      bool maximal = true;
      for (unsigned d : cliques) {
        if (d != c && (d & c) == c) maximal = false;
      }
      if (!maximal) continue;
      std::vector<Element> block;
      for (Element x = 0; x < count; ++x) {
        if (c >> x & 1) block.push_back(x);
      }
      out.push_back(block);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline std::vector<Element> where(std::size_t n, auto pred) {
  std::vector<Element> out;
  for (Element x = 0; x < n; ++x) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

// Fixture algebras written out by hand.
inline const char* kC3 =
    "elements 0 a 1\nzero 0\nunit 1\n"
    "sum 0 0 0\nsum 0 a a\nsum 0 1 1\nsum a a 1\n";

inline const char* kB4 =
    "elements 0 p q 1\nzero 0\nunit 1\n"
    "sum 0 0 0\nsum 0 p p\nsum 0 q q\nsum 0 1 1\nsum p q 1\n";

inline const char* kHS =
    "elements 0 a b 1\nzero 0\nunit 1\n"
    "sum 0 0 0\nsum 0 a a\nsum 0 b b\nsum 0 1 1\nsum a a 1\nsum b b 1\n";

inline const char* kC5 =
    "elements 0 a 2a 3a 1\nzero 0\nunit 1\n"
    "sum 0 0 0\nsum 0 a a\nsum 0 2a 2a\nsum 0 3a 3a\nsum 0 1 1\n"
    "sum a a 2a\nsum a 2a 3a\nsum a 3a 1\nsum 2a 2a 1\n";

// C3 x C2 with elements (x,y).
inline const char* kP6 =
    "elements (0,0) (0,1) (a,0) (a,1) (1,0) (1,1)\nzero (0,0)\nunit (1,1)\n"
    "sum (0,0) (0,0) (0,0)\nsum (0,0) (0,1) (0,1)\nsum (0,0) (a,0) (a,0)\nsum (0,0) (a,1) (a,1)\n"
    "sum (0,0) (1,0) (1,0)\nsum (0,0) (1,1) (1,1)\n"
    "sum (0,1) (a,0) (a,1)\nsum (0,1) (1,0) (1,1)\n"
    "sum (a,0) (a,0) (1,0)\nsum (a,0) (a,1) (1,1)\n";

inline eat::EffectAlgebra load(const char* text) { return eat::EffectAlgebra::from_table(eat::parse_eat(text)); }

}  // namespace oracle
