#pragma once

// Sharp envelopes and basic decompositions.
//
// For x in a finite lattice effect algebra E:
//   below(x)  greatest sharp element under x
//   above(x)  smallest sharp element over x
//   x = below(x) (+) (x (-) below(x))        sharp part (+) meager part
// and a meager element is the orthogonal sum of k_a copies of each atom a
// under it, k_a being the largest k with ka <= x. The envelope above(x) is
// computed twice: by scanning Sh(E), and from that atom support.

#include <optional>
#include <utility>
#include <vector>

#include "eat/core.hpp"
#include "eat/lattice.hpp"
#include "eat/substructures.hpp"

namespace eat {

struct SharpEnvelope {
  Element x;
  Element below;
  Element above;
};

struct AtomMultiple {
  Element atom;
  std::size_t multiplicity;
  bool operator==(const AtomMultiple&) const = default;
};

/// (atom, k) pairs with 1 <= k < ord(atom), sorted by atom.
struct AtomSupport {
  std::vector<AtomMultiple> pairs;
  bool operator==(const AtomSupport&) const = default;
};

struct Decomposition {
  Element x;
  Element sharp_part;
  Element meager_part;
  AtomSupport support;
};

/// The atom-formula route to the upper envelope together with the
/// complementary meager element above(x) (-) x.
struct HatFromAtoms {
  Element hat;
  Element gap;  // sum of (ord(a) - k_a) a over the support of the meager part
};

class Decomposer {
 public:
  explicit Decomposer(const LatticeEffectAlgebra& e);

  const LatticeEffectAlgebra& lattice() const { return e_; }
  const SharpSet& sharp() const { return sharp_; }
  const ElementSet& meager() const { return meager_; }
  bool is_sharp(Element x) const { return sharp_.members.test(x); }
  bool is_meager(Element x) const { return meager_.test(x); }

  /// Scan over Sh(E). Throws InconsistencyError if a bound is not sharp.
  SharpEnvelope envelope(Element x) const { return envelopes_[x]; }
  /// Always true on a finite lattice effect algebra; the envelopes are the
  /// certificate.
  bool is_sharply_dominating() const { return true; }

  /// x = 0 yields (0, 0, {}).
  Decomposition basic_decomposition(Element x) const;
  /// Throws std::invalid_argument for non-meager x.
  AtomSupport meager_atom_support(Element x) const;
  /// Largest k with ka <= x, found by repeated (+) with an order check.
  std::size_t max_multiple_below(Element atom, Element x) const;
  HatFromAtoms hat_via_atoms(Element x) const;

 private:
  const LatticeEffectAlgebra& e_;
  SharpSet sharp_;
  ElementSet meager_;
  std::vector<SharpEnvelope> envelopes_;
};

SharpEnvelope sharp_envelope(const LatticeEffectAlgebra& e, Element x);
Decomposition basic_decomposition(const LatticeEffectAlgebra& e, Element x);
AtomSupport meager_atom_support(const LatticeEffectAlgebra& e, Element x);
Element hat_via_atoms(const LatticeEffectAlgebra& e, Element x);

}  // namespace eat
