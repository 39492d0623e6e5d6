#include "eat/generalized.hpp"

#include <algorithm>

namespace eat {

GeneralizedEffectAlgebra::GeneralizedEffectAlgebra(std::vector<std::string> names, Element zero,
                                                   std::vector<Element> cells)
    : names_(std::move(names)), zero_(zero), cells_(std::move(cells)) {
  const auto n = static_cast<Element>(size());
  if (cells_.size() != static_cast<std::size_t>(n) * n || zero_ >= n) {
    throw std::invalid_argument("malformed generalized effect algebra table");
  }
  up_.assign(n, ElementSet(n));
  down_.assign(n, ElementSet(n));
  ominus_.assign(static_cast<std::size_t>(n) * n, kUndefined);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      const Element y = sum_or_undefined(x, z);
      if (y == kUndefined) continue;
      Element& slot = ominus_[static_cast<std::size_t>(y) * n + x];
      if (slot != kUndefined && slot != z) {
        throw InconsistencyError("cancellation fails in generalized effect algebra at " +
                                 names_[x]);
      }
      slot = z;
      up_[x].set(y);
      down_[y].set(x);
    }
  }
  ord_.assign(n, kUnboundedOrd);
  for (Element x = 0; x < n; ++x) {
    if (x == zero_) continue;
    std::size_t k = 1;
    Element acc = x;
    while (sum_or_undefined(acc, x) != kUndefined) {
      acc = sum_or_undefined(acc, x);
      if (++k > n) throw InconsistencyError("unbounded multiples of " + names_[x]);
    }
    ord_[x] = k;
  }
  for (Element x = 0; x < n; ++x) {
    if (x != zero_ && down_[x].count() == 2) atoms_.push_back(x);
  }
}

std::optional<Element> GeneralizedEffectAlgebra::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::optional<Element> GeneralizedEffectAlgebra::sum(Element x, Element y) const {
  const Element z = sum_or_undefined(x, y);
  if (z == kUndefined) return std::nullopt;
  return z;
}

std::optional<Element> GeneralizedEffectAlgebra::ominus(Element y, Element x) const {
  const Element z = ominus_[static_cast<std::size_t>(y) * size() + x];
  if (z == kUndefined) return std::nullopt;
  return z;
}

std::optional<Element> GeneralizedEffectAlgebra::multiple(Element x, std::size_t k) const {
  Element acc = zero_;
  for (std::size_t i = 0; i < k; ++i) {
    acc = sum_or_undefined(acc, x);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

std::optional<Element> GeneralizedEffectAlgebra::minimum(const ElementSet& set) const {
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    if (set.is_subset_of(up_[i])) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::optional<Element> GeneralizedEffectAlgebra::maximum(const ElementSet& set) const {
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    if (set.is_subset_of(down_[i])) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::optional<Element> GeneralizedEffectAlgebra::supremum(const ElementSet& set) const {
  ElementSet upper(size());
  upper.set();
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    upper &= up_[i];
  }
  return minimum(upper);
}

}  // namespace eat
