#include "eat/substructures.hpp"

#include <algorithm>
#include <functional>

namespace eat {

SharpSet sharp_elements(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  SharpSet s{ElementSet(n), {}};
  for (Element x = 0; x < n; ++x) {
    if (e.meet(x, e.complement(x)) == e.zero()) s.members.set(x);
  }
  auto& c = s.closed_under;
  c.complement = c.meet = c.join = c.sum = true;
  for (Element x = 0; x < n; ++x) {
    if (!s.members.test(x)) continue;
    c.complement = c.complement && s.members.test(e.complement(x));
    for (Element y = 0; y < n; ++y) {
      if (!s.members.test(y)) continue;
      c.meet = c.meet && s.members.test(e.meet(x, y));
      c.join = c.join && s.members.test(e.join(x, y));
      if (auto z = e.sum(x, y)) c.sum = c.sum && s.members.test(*z);
    }
  }
  return s;
}

MeagerStructure meager_elements(const LatticeEffectAlgebra& e) {
  return meager_elements(e, sharp_elements(e));
}

MeagerStructure meager_elements(const LatticeEffectAlgebra& e, const SharpSet& sharp) {
  const auto n = static_cast<Element>(e.size());
  MeagerStructure m;
  m.members = ElementSet(n);
  for (Element x = 0; x < n; ++x) {
    // Sharp elements below x, other than 0.
    ElementSet below = e.algebra().order().down[x] & sharp.members;
    below.reset(e.zero());
    if (below.none()) m.members.set(x);
  }
  m.partial = restrict_partial(e.algebra(), m.members, &m.embedding);
  for (Element a : m.partial.atoms()) {
    m.atom_ords.emplace_back(m.embedding[a], m.partial.ord(a));
  }
  return m;
}

namespace {

void bron_kerbosch(const std::vector<ElementSet>& adjacency, ElementSet& clique, ElementSet p,
                   ElementSet x, std::vector<ElementSet>& out) {
  if (p.none() && x.none()) {
    out.push_back(clique);
    return;
  }
  // Tomita pivot: the vertex of P u X with the most neighbours in P.
  const ElementSet px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for (auto u = px.find_first(); u != ElementSet::npos; u = px.find_next(u)) {
    const std::size_t deg = (p & adjacency[u]).count();
    if (deg >= best) {
      best = deg;
      pivot = u;
    }
  }
  const ElementSet candidates = p - adjacency[pivot];
  for (auto v = candidates.find_first(); v != ElementSet::npos; v = candidates.find_next(v)) {
    clique.set(v);
    bron_kerbosch(adjacency, clique, p & adjacency[v], x & adjacency[v], out);
    clique.reset(v);
    p.reset(v);
    x.set(v);
  }
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

BlockSet blocks(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  std::vector<ElementSet> adjacency(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && e.compatible(x, y)) adjacency[x].set(y);
    }
  }
  BlockSet result;
  ElementSet clique(n);
  bron_kerbosch(adjacency, clique, full_set(n), ElementSet(n), result.blocks);
  std::sort(result.blocks.begin(), result.blocks.end(), lex_less);

  result.intersection = full_set(n);
  for (const auto& block : result.blocks) {
    result.intersection &= block;
    const auto check = is_sub_lattice_effect_algebra(e, block);
    if (!check.holds) {
      throw InconsistencyError("block is not a sub-lattice effect algebra: " + check.reason);
    }
    std::vector<Element> block_atoms;
    for (Element a : e.algebra().atom_set().atoms) {
      if (block.test(a)) block_atoms.push_back(a);
    }
    result.atoms.push_back(std::move(block_atoms));
  }
  return result;
}

ElementSet compatibility_center(const LatticeEffectAlgebra& e) {
  return compatibility_center(e, blocks(e));
}

ElementSet compatibility_center(const LatticeEffectAlgebra& e, const BlockSet& block_set) {
  const auto n = static_cast<Element>(e.size());
  ElementSet b(n);
  for (Element x = 0; x < n; ++x) {
    bool all = true;
    for (Element y = 0; y < n && all; ++y) all = e.compatible(x, y);
    if (all) b.set(x);
  }
  if (b != block_set.intersection) {
    throw InconsistencyError("compatibility center differs from the intersection of blocks");
  }
  return b;
}

CenterSet center(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  CenterSet c{ElementSet(n)};
  for (Element x = 0; x < n; ++x) {
    const Element xc = e.complement(x);
    bool central = true;
    for (Element y = 0; y < n && central; ++y) {
      central = e.join(e.meet(y, x), e.meet(y, xc)) == y;
    }
    if (central) c.members.set(x);
  }
  const ElementSet b = compatibility_center(e);
  if (c.members != (b & sharp_elements(e).members)) {
    throw InconsistencyError("center differs from B(E) n Sh(E)");
  }
  return c;
}

SubsetCheck is_sub_effect_algebra(const EffectAlgebra& e, const ElementSet& q) {
  if (!q.test(e.unit())) return {false, {e.unit()}, "1 is missing"};
  const auto n = static_cast<Element>(e.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element z = e.sum_or_undefined(x, y);
      if (z == kUndefined) continue;
      const int inside = int(q.test(x)) + int(q.test(y)) + int(q.test(z));
      if (inside == 2) {
        return {false,
                {x, y, z},
                e.name(x) + " + " + e.name(y) + " = " + e.name(z) + " has exactly two terms inside"};
      }
    }
  }
  return {true, {}, {}};
}

SubsetCheck is_sub_lattice_effect_algebra(const LatticeEffectAlgebra& e, const ElementSet& q) {
  auto check = is_sub_effect_algebra(e.algebra(), q);
  if (!check.holds) return check;
  const auto n = static_cast<Element>(e.size());
  for (Element x = 0; x < n; ++x) {
    if (!q.test(x)) continue;
    for (Element y = x + 1; y < n; ++y) {
      if (!q.test(y)) continue;
      if (!q.test(e.meet(x, y))) {
        return {false, {x, y}, "meet of " + e.name(x) + " and " + e.name(y) + " escapes"};
      }
      if (!q.test(e.join(x, y))) {
        return {false, {x, y}, "join of " + e.name(x) + " and " + e.name(y) + " escapes"};
      }
    }
  }
  return {true, {}, {}};
}

SubsetCheck is_full(const LatticeEffectAlgebra& e, const ElementSet& q) {
  auto check = is_sub_lattice_effect_algebra(e, q);
  if (check.holds && !q.test(e.zero())) return {false, {e.zero()}, "0 is missing"};
  return check;
}

namespace {

// Exact subset enumeration. X ranges over all subsets of D (including the
// empty one); the E-side bound is the least upper (greatest lower) bound in E,
// the D-side one is computed inside D from D's own order.
class BifullOracle {
 public:
  BifullOracle(const EffectAlgebra& e, const ElementSet& d, BifullSide side)
      : e_(e), d_(members(d)), side_(side), n_(e.size()) {
    const std::size_t k = d_.size();
    up_d_.assign(k, 0);
    down_d_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (e.leq(d_[i], d_[j])) {
          up_d_[i] |= bit(j);
          down_d_[j] |= bit(i);
        }
      }
    }
  }

  BifullResult run() {
    const std::uint64_t all = d_.size() == 64 ? ~0ULL : (bit(d_.size()) - 1);
    auto order = order_structure(e_);
    if (order.is_lattice) {
      join_ = std::move(order.join);
      meet_ = std::move(order.meet);
      recurse_lattice(0, 0, all, all, e_.zero(), e_.unit());
    } else {
      recurse(0, 0, all, all, full_set(n_), full_set(n_));
    }
    BifullResult r;
    r.bifull = !witness_;
    if (witness_) {
      ElementSet w(n_);
      for (std::size_t i = 0; i < d_.size(); ++i) {
        if (*witness_ & bit(i)) w.set(d_[i]);
      }
      r.witness = std::move(w);
    }
    return r;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::optional<Element> least_in_d(std::uint64_t candidates) const {
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(c));
      if ((candidates & ~up_d_[i]) == 0) return d_[i];
    }
    return std::nullopt;
  }

  std::optional<Element> greatest_in_d(std::uint64_t candidates) const {
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(c));
      if ((candidates & ~down_d_[i]) == 0) return d_[i];
    }
    return std::nullopt;
  }

  std::optional<Element> least_in_e(const ElementSet& candidates) const {
    for (auto i = candidates.find_first(); i != ElementSet::npos; i = candidates.find_next(i)) {
      if (candidates.is_subset_of(e_.order().up[i])) return static_cast<Element>(i);
    }
    return std::nullopt;
  }

  std::optional<Element> greatest_in_e(const ElementSet& candidates) const {
    for (auto i = candidates.find_first(); i != ElementSet::npos; i = candidates.find_next(i)) {
      if (candidates.is_subset_of(e_.order().down[i])) return static_cast<Element>(i);
    }
    return std::nullopt;
  }

  void recurse(std::size_t i, std::uint64_t chosen, std::uint64_t upper_d, std::uint64_t lower_d,
               const ElementSet& upper_e, const ElementSet& lower_e) {
    if (witness_) return;
    if (i == d_.size()) {
      if (side_ != BifullSide::kMeet && least_in_d(upper_d) != least_in_e(upper_e)) {
        witness_ = chosen;
      } else if (side_ != BifullSide::kJoin &&
                 greatest_in_d(lower_d) != greatest_in_e(lower_e)) {
        witness_ = chosen;
      }
      return;
    }
    recurse(i + 1, chosen, upper_d, lower_d, upper_e, lower_e);
    const Element x = d_[i];
    recurse(i + 1, chosen | bit(i), upper_d & up_d_[i], lower_d & down_d_[i],
            upper_e & e_.order().up[x], lower_e & e_.order().down[x]);
  }

  // Same enumeration with E-side bounds tracked through the lattice tables.
  void recurse_lattice(std::size_t i, std::uint64_t chosen, std::uint64_t upper_d,
                       std::uint64_t lower_d, Element join_e, Element meet_e) {
    if (witness_) return;
    if (i == d_.size()) {
      if (side_ != BifullSide::kMeet && least_in_d(upper_d) != join_e) {
        witness_ = chosen;
      } else if (side_ != BifullSide::kJoin && greatest_in_d(lower_d) != meet_e) {
        witness_ = chosen;
      }
      return;
    }
    recurse_lattice(i + 1, chosen, upper_d, lower_d, join_e, meet_e);
    const Element x = d_[i];
    recurse_lattice(i + 1, chosen | bit(i), upper_d & up_d_[i], lower_d & down_d_[i],
                    join_[join_e * n_ + x], meet_[meet_e * n_ + x]);
  }

  const EffectAlgebra& e_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> d_;
  BifullSide side_;
  std::size_t n_;
  std::vector<std::uint64_t> up_d_;
  std::vector<std::uint64_t> down_d_;
  std::optional<std::uint64_t> witness_;
};

}  // namespace

BifullResult bifull_by_closure(const LatticeEffectAlgebra& e, const ElementSet& d,
                               BifullSide side) {
  BifullResult r;
  r.by_closure = true;
  const std::size_t n = e.size();
  const bool joins = side != BifullSide::kMeet;
  const bool meets = side != BifullSide::kJoin;
  // Empty family: its join is 0 and its meet is 1.
  if ((joins && !d.test(e.zero())) || (meets && !d.test(e.unit()))) {
    r.witness = ElementSet(n);
    return r;
  }
  const auto ds = members(d);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const bool bad = (joins && !d.test(e.join(ds[i], ds[j]))) ||
                       (meets && !d.test(e.meet(ds[i], ds[j])));
      if (bad) {
        const std::array pair{ds[i], ds[j]};
        r.witness = make_set(n, pair);
        return r;
      }
    }
  }
  r.bifull = true;
  return r;
}

BifullResult is_bifull(const EffectAlgebra& e, const ElementSet& d, const BifullOptions& options) {
  if (d.count() <= options.cutoff && d.count() <= 64) {
    return BifullOracle(e, d, options.side).run();
  }
  if (!is_lattice(e).is_lattice) {
    throw std::invalid_argument("bifullness of a subset larger than the cutoff needs a lattice");
  }
  return bifull_by_closure(LatticeEffectAlgebra(e), d, options.side);
}

GeneralizedEffectAlgebra restrict_partial(const EffectAlgebra& e, const ElementSet& q,
                                          std::vector<Element>* embedding) {
  const auto host = members(q);
  std::vector<Element> index(e.size(), kUndefined);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < host.size(); ++i) {
    index[host[i]] = static_cast<Element>(i);
    names.push_back(e.name(host[i]));
  }
  const std::size_t k = host.size();
  std::vector<Element> cells(k * k, kUndefined);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element z = e.sum_or_undefined(host[i], host[j]);
      if (z != kUndefined && q.test(z)) cells[i * k + j] = index[z];
    }
  }
  if (index[e.zero()] == kUndefined) throw std::invalid_argument("subset does not contain 0");
  if (embedding) *embedding = host;
  return GeneralizedEffectAlgebra(std::move(names), index[e.zero()], std::move(cells));
}

SubAlgebra make_subalgebra(const EffectAlgebra& e, const ElementSet& q) {
  const auto host = members(q);
  std::vector<Element> index(e.size(), kUndefined);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < host.size(); ++i) {
    index[host[i]] = static_cast<Element>(i);
    names.push_back(e.name(host[i]));
  }
  if (index[e.zero()] == kUndefined || index[e.unit()] == kUndefined) {
    throw std::invalid_argument("subset must contain 0 and 1");
  }
  SumTable t(std::move(names), index[e.zero()], index[e.unit()]);
  for (std::size_t i = 0; i < host.size(); ++i) {
    for (std::size_t j = 0; j < host.size(); ++j) {
      const Element z = e.sum_or_undefined(host[i], host[j]);
      if (z != kUndefined && q.test(z)) {
        t.set(static_cast<Element>(i), static_cast<Element>(j), index[z]);
      }
    }
  }
  return SubAlgebra{EffectAlgebra::from_table(std::move(t)), host};
}

bool is_atomic_subposet(const EffectAlgebra& e, const ElementSet& q) {
  std::vector<Element> minimal;
  for (Element x : members(q)) {
    if (x == e.zero()) continue;
    ElementSet below = e.order().down[x] & q;
    below.reset(e.zero());
    if (below.count() == 1) minimal.push_back(x);
  }
  for (Element x : members(q)) {
    if (x == e.zero()) continue;
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [&](Element a) { return e.leq(a, x); });
    if (!dominated) return false;
  }
  return true;
}

}  // namespace eat
