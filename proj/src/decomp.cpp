#include "eat/decomp.hpp"

#include <stdexcept>

namespace eat {

Decomposer::Decomposer(const LatticeEffectAlgebra& e)
    : e_(e), sharp_(sharp_elements(e)), meager_(e.size()) {
  const auto n = static_cast<Element>(e.size());
  const auto& order = e.algebra().order();
  for (Element x = 0; x < n; ++x) {
    const ElementSet below = order.down[x] & sharp_.members;
    const ElementSet above = order.up[x] & sharp_.members;
    SharpEnvelope env{x, e.join_of(below), e.meet_of(above)};
    if (!sharp_.members.test(env.below) || !e.leq(env.below, x)) {
      throw InconsistencyError("no greatest sharp element below " + e.name(x));
    }
    if (!sharp_.members.test(env.above) || !e.leq(x, env.above)) {
      throw InconsistencyError("no smallest sharp element above " + e.name(x));
    }
    if (env.below == e.zero()) meager_.set(x);
    envelopes_.push_back(env);
  }
}

std::size_t Decomposer::max_multiple_below(Element atom, Element x) const {
  std::size_t k = 0;
  Element acc = e_.zero();
  while (true) {
    auto next = e_.sum(acc, atom);
    if (!next || !e_.leq(*next, x)) return k;
    acc = *next;
    ++k;
  }
}

AtomSupport Decomposer::meager_atom_support(Element x) const {
  if (!is_meager(x)) throw std::invalid_argument(e_.name(x) + " is not meager");
  AtomSupport support;
  std::vector<Element> terms;
  Element sum = e_.zero();
  Element join = e_.zero();
  for (Element a : e_.algebra().atom_set().atoms) {
    if (!e_.leq(a, x)) continue;
    const std::size_t k = max_multiple_below(a, x);
    if (k >= e_.algebra().ord(a)) {
      throw InconsistencyError("meager " + e_.name(x) + " dominates a full multiple of " +
                               e_.name(a));
    }
    support.pairs.push_back({a, k});
    const Element term = *multiple(e_.algebra(), a, k);
    auto next = e_.sum(sum, term);
    if (!next) throw InconsistencyError("atom support of " + e_.name(x) + " is not orthogonal");
    sum = *next;
    join = e_.join(join, term);
  }
  if (sum != x || join != x) {
    throw InconsistencyError("atom support of " + e_.name(x) + " does not recover it");
  }
  return support;
}

Decomposition Decomposer::basic_decomposition(Element x) const {
  const Element s = envelopes_[x].below;
  const Element m = *e_.ominus(x, s);
  if (!is_meager(m)) throw InconsistencyError("meager part of " + e_.name(x) + " is not meager");
  return {x, s, m, meager_atom_support(m)};
}

HatFromAtoms Decomposer::hat_via_atoms(Element x) const {
  const Decomposition d = basic_decomposition(x);
  Element full = e_.zero();
  Element gap = e_.zero();
  for (const auto& [a, k] : d.support.pairs) {
    const std::size_t n_a = e_.algebra().ord(a);
    const auto full_term = multiple(e_.algebra(), a, n_a);
    const auto gap_term = multiple(e_.algebra(), a, n_a - k);
    auto f = full_term ? e_.sum(full, *full_term) : std::nullopt;
    auto g = gap_term ? e_.sum(gap, *gap_term) : std::nullopt;
    if (!f || !g) throw InconsistencyError("atom multiples under " + e_.name(x) + " not orthogonal");
    full = *f;
    gap = *g;
  }
  auto hat = e_.sum(d.sharp_part, full);
  if (!hat) throw InconsistencyError("sharp part and atom closure of " + e_.name(x) + " clash");
  return {*hat, gap};
}

SharpEnvelope sharp_envelope(const LatticeEffectAlgebra& e, Element x) {
  return Decomposer(e).envelope(x);
}

Decomposition basic_decomposition(const LatticeEffectAlgebra& e, Element x) {
  return Decomposer(e).basic_decomposition(x);
}

AtomSupport meager_atom_support(const LatticeEffectAlgebra& e, Element x) {
  return Decomposer(e).meager_atom_support(x);
}

Element hat_via_atoms(const LatticeEffectAlgebra& e, Element x) {
  return Decomposer(e).hat_via_atoms(x).hat;
}

}  // namespace eat
