#pragma once

// A partial commutative monoid without a top element: the shape of the
// meager part of a lattice effect algebra once it is cut loose from its host.
// Everything here is derived from the sum table alone.

#include <optional>
#include <string>
#include <vector>

#include "eat/core.hpp"

namespace eat {

class GeneralizedEffectAlgebra {
 public:
  GeneralizedEffectAlgebra() = default;
  GeneralizedEffectAlgebra(std::vector<std::string> names, Element zero,
                           std::vector<Element> cells);

  std::size_t size() const { return names_.size(); }
  Element zero() const { return zero_; }
  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;

  std::optional<Element> sum(Element x, Element y) const;
  Element sum_or_undefined(Element x, Element y) const { return cells_[x * size() + y]; }
  const std::vector<Element>& cells() const { return cells_; }

  /// x <= y iff x (+) z = y for some z in this structure.
  bool leq(Element x, Element y) const { return up_[x].test(y); }
  const ElementSet& up(Element x) const { return up_[x]; }
  const ElementSet& down(Element x) const { return down_[x]; }
  std::optional<Element> ominus(Element y, Element x) const;

  std::optional<Element> multiple(Element x, std::size_t k) const;
  /// Largest k with kx defined here; kUnboundedOrd for 0.
  std::size_t ord(Element x) const { return ord_[x]; }
  const std::vector<Element>& atoms() const { return atoms_; }

  /// Least element of `set`, if any.
  std::optional<Element> minimum(const ElementSet& set) const;
  /// Greatest element of `set`, if any.
  std::optional<Element> maximum(const ElementSet& set) const;
  /// Least upper bound of `set` inside this structure, if it exists.
  std::optional<Element> supremum(const ElementSet& set) const;

 private:
  std::vector<std::string> names_;
  Element zero_ = 0;
  std::vector<Element> cells_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> ominus_;
  std::vector<std::size_t> ord_;
  std::vector<Element> atoms_;
};

}  // namespace eat
