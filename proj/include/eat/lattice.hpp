#pragma once

// Meets, joins and compatibility over the derived order of an effect algebra.

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eat/core.hpp"

namespace eat {

struct Bounds {
  std::optional<Element> meet;
  std::optional<Element> join;
  /// Maximal common lower bounds; a single element iff the meet exists.
  std::vector<Element> maximal_lower;
  /// Minimal common upper bounds; a single element iff the join exists.
  std::vector<Element> minimal_upper;
};

Bounds bounds(const EffectAlgebra& e, Element x, Element y);

struct OrderStructure {
  std::size_t n = 0;
  std::vector<Element> meet;  // n*n, kUndefined where no glb exists
  std::vector<Element> join;  // n*n, kUndefined where no lub exists
  bool is_lattice = false;
  std::optional<std::pair<Element, Element>> witness;
};

OrderStructure order_structure(const EffectAlgebra& e);

struct LatticeCheck {
  bool is_lattice = false;
  std::optional<std::pair<Element, Element>> witness;
};

LatticeCheck is_lattice(const EffectAlgebra& e);

class NotALattice : public std::invalid_argument {
 public:
  NotALattice(const EffectAlgebra& e, std::pair<Element, Element> witness);
  std::pair<Element, Element> witness() const { return witness_; }

 private:
  std::pair<Element, Element> witness_;
};

/// A validated effect algebra whose order is a lattice, with meet, join and
/// compatibility tables. Modules that need lattice structure take this type,
/// so non-lattice inputs are refused at the boundary.
class LatticeEffectAlgebra {
 public:
  /// Throws NotALattice with a pair lacking a meet or join.
  explicit LatticeEffectAlgebra(EffectAlgebra algebra);

  const EffectAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }
  Element zero() const { return algebra_.zero(); }
  Element unit() const { return algebra_.unit(); }
  const std::string& name(Element x) const { return algebra_.name(x); }

  std::optional<Element> sum(Element x, Element y) const { return algebra_.sum(x, y); }
  bool defined(Element x, Element y) const { return algebra_.defined(x, y); }
  Element complement(Element x) const { return algebra_.complement(x); }
  bool leq(Element x, Element y) const { return algebra_.leq(x, y); }
  std::optional<Element> ominus(Element y, Element x) const { return algebra_.ominus(y, x); }

  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  /// Empty meet is 1, empty join is 0.
  Element meet_of(std::span<const Element> xs) const;
  Element join_of(std::span<const Element> xs) const;
  Element meet_of(const ElementSet& xs) const;
  Element join_of(const ElementSet& xs) const;

  bool compatible(Element x, Element y) const { return compatible_[x * size() + y]; }

 private:
  EffectAlgebra algebra_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<bool> compatible_;
};

/// x <-> y iff x (+) (y (-) (x ^ y)) is defined and equals x v y.
bool is_compatible(const LatticeEffectAlgebra& e, Element x, Element y);

}  // namespace eat
