#include "eat/lattice.hpp"

namespace eat {

namespace {

// Extremal elements of a bound set: `greatest` picks maximal elements, else minimal.
std::vector<Element> extremal(const EffectAlgebra& e, const ElementSet& set, bool greatest) {
  std::vector<Element> out;
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    const auto& beyond = greatest ? e.order().up[i] : e.order().down[i];
    // i is extremal when nothing else in the set lies beyond it.
    if ((beyond & set).count() == 1) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::optional<Element> glb(const EffectAlgebra& e, Element x, Element y) {
  const ElementSet lower = e.order().down[x] & e.order().down[y];
  for (auto i = lower.find_first(); i != ElementSet::npos; i = lower.find_next(i)) {
    if (lower.is_subset_of(e.order().down[i])) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::optional<Element> lub(const EffectAlgebra& e, Element x, Element y) {
  const ElementSet upper = e.order().up[x] & e.order().up[y];
  for (auto i = upper.find_first(); i != ElementSet::npos; i = upper.find_next(i)) {
    if (upper.is_subset_of(e.order().up[i])) return static_cast<Element>(i);
  }
  return std::nullopt;
}

}  // namespace

Bounds bounds(const EffectAlgebra& e, Element x, Element y) {
  Bounds b;
  b.meet = glb(e, x, y);
  b.join = lub(e, x, y);
  b.maximal_lower = extremal(e, e.order().down[x] & e.order().down[y], true);
  b.minimal_upper = extremal(e, e.order().up[x] & e.order().up[y], false);
  return b;
}

OrderStructure order_structure(const EffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  OrderStructure s;
  s.n = n;
  s.meet.assign(static_cast<std::size_t>(n) * n, kUndefined);
  s.join.assign(static_cast<std::size_t>(n) * n, kUndefined);
  s.is_lattice = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto m = glb(e, x, y);
      auto j = lub(e, x, y);
      if (m) s.meet[x * n + y] = s.meet[y * n + x] = *m;
      if (j) s.join[x * n + y] = s.join[y * n + x] = *j;
      if ((!m || !j) && s.is_lattice) {
        s.is_lattice = false;
        s.witness = std::pair{x, y};
      }
    }
  }
  return s;
}

LatticeCheck is_lattice(const EffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!glb(e, x, y) || !lub(e, x, y)) return {false, std::pair{x, y}};
    }
  }
  return {true, std::nullopt};
}

NotALattice::NotALattice(const EffectAlgebra& e, std::pair<Element, Element> witness)
    : std::invalid_argument("not a lattice effect algebra: " + e.name(witness.first) + " and " +
                            e.name(witness.second) + " lack a meet or a join"),
      witness_(witness) {}

LatticeEffectAlgebra::LatticeEffectAlgebra(EffectAlgebra algebra) : algebra_(std::move(algebra)) {
  auto s = order_structure(algebra_);
  if (!s.is_lattice) throw NotALattice(algebra_, *s.witness);
  meet_ = std::move(s.meet);
  join_ = std::move(s.join);

  const auto n = static_cast<Element>(size());
  compatible_.assign(static_cast<std::size_t>(n) * n, false);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element m = meet(x, y);
      const Element d = *algebra_.ominus(y, m);
      compatible_[x * n + y] = algebra_.sum_or_undefined(x, d) == join(x, y);
    }
  }
}

Element LatticeEffectAlgebra::meet_of(std::span<const Element> xs) const {
  Element acc = unit();
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

Element LatticeEffectAlgebra::join_of(std::span<const Element> xs) const {
  Element acc = zero();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element LatticeEffectAlgebra::meet_of(const ElementSet& xs) const {
  Element acc = unit();
  for (auto i = xs.find_first(); i != ElementSet::npos; i = xs.find_next(i)) {
    acc = meet(acc, static_cast<Element>(i));
  }
  return acc;
}

Element LatticeEffectAlgebra::join_of(const ElementSet& xs) const {
  Element acc = zero();
  for (auto i = xs.find_first(); i != ElementSet::npos; i = xs.find_next(i)) {
    acc = join(acc, static_cast<Element>(i));
  }
  return acc;
}

bool is_compatible(const LatticeEffectAlgebra& e, Element x, Element y) {
  return e.compatible(x, y);
}

}  // namespace eat
