#include "eat/laws.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

#include "eat/decomp.hpp"
#include "eat/substructures.hpp"

namespace eat {

namespace {

// A block of E as a lattice effect algebra of its own.
struct BlockView {
  SubAlgebra sub;
  LatticeEffectAlgebra lattice;
  std::vector<Element> host_to_block;
};

struct LawContext {
  const LatticeEffectAlgebra& e;
  LawConfig config;
  Decomposer decomposer;
  ElementSet sharp;
  ElementSet meager;
  BlockSet block_set;
  ElementSet b;
  ElementSet c;
  std::vector<BlockView> blocks;

  LawContext(const LatticeEffectAlgebra& lea, const LawConfig& cfg)
      : e(lea),
        config(cfg),
        decomposer(lea),
        sharp(decomposer.sharp().members),
        meager(decomposer.meager()),
        block_set(eat::blocks(lea)),
        b(compatibility_center(lea, block_set)),
        c(center(lea).members) {
    for (const auto& members : block_set.blocks) {
      SubAlgebra sub = make_subalgebra(e.algebra(), members);
      LatticeEffectAlgebra lattice(sub.algebra);
      std::vector<Element> inverse(e.size(), kUndefined);
      for (std::size_t i = 0; i < sub.embedding.size(); ++i) {
        inverse[sub.embedding[i]] = static_cast<Element>(i);
      }
      blocks.push_back(BlockView{std::move(sub), std::move(lattice), std::move(inverse)});
    }
  }

  Element n() const { return static_cast<Element>(e.size()); }
  const std::string& name(Element x) const { return e.name(x); }
};

void fail(LawReport& r, std::vector<Element> witness, std::string detail) {
  r.verdict = Verdict::kFail;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
}

// Calls f on every nonempty subset of `pool` of size <= max_size, in
// lexicographic order of positions. Stops when f returns false.
bool for_each_family(const std::vector<Element>& pool, std::size_t max_size,
                     const std::function<bool(std::span<const Element>)>& f) {
  std::vector<Element> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (!f(chosen)) return false;
      if (chosen.size() < max_size && !rec(i + 1)) return false;
      chosen.pop_back();
    }
    return true;
  };
  return rec(0);
}

// Largest k worth trying for multiples of x; 0 only needs k = 1.
std::size_t multiple_cap(const EffectAlgebra& e, Element x) {
  return x == e.zero() ? 1 : e.ord(x);
}

std::optional<Element> fold_sum(const LatticeEffectAlgebra& e, std::span<const Element> xs) {
  return ortho_sum(e.algebra(), xs);
}

std::string names_of(const LatticeEffectAlgebra& e, std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + e.name(xs[i]);
  return out + "}";
}

std::vector<Element> with(Element b, std::span<const Element> xs) {
  std::vector<Element> w{b};
  w.insert(w.end(), xs.begin(), xs.end());
  return w;
}

// b <-> a for all a in A implies b <-> VA and V{b ^ a} = b ^ VA.
void law_compatible_join(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element b = 0; b < ctx.n(); ++b) {
    std::vector<Element> pool;
    for (Element a = 0; a < ctx.n(); ++a) {
      if (e.compatible(b, a)) pool.push_back(a);
    }
    const bool ok = for_each_family(pool, ctx.config.max_family, [&](std::span<const Element> as) {
      ++r.instances;
      const Element j = e.join_of(as);
      std::vector<Element> meets;
      for (Element a : as) meets.push_back(e.meet(b, a));
      if (!e.compatible(b, j)) {
        fail(r, with(b, as), e.name(b) + " is not compatible with the join of " + names_of(e, as));
        return false;
      }
      if (e.join_of(meets) != e.meet(b, j)) {
        fail(r, with(b, as), "join of meets differs from meet with join for b=" + e.name(b));
        return false;
      }
      return true;
    });
    if (!ok) return;
  }
}

// x ^ y = 0 and x <= y'  iff  kx ^ ly = 0 and kx <= (ly)'.
void law_multiples_orthogonal(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  const auto& ea = e.algebra();
  for (Element x = 0; x < ctx.n(); ++x) {
    for (Element y = 0; y < ctx.n(); ++y) {
      const bool lhs = e.meet(x, y) == e.zero() && e.defined(x, y);
      for (std::size_t k = 1; k <= multiple_cap(ea, x); ++k) {
        const Element kx = *multiple(ea, x, k);
        for (std::size_t l = 1; l <= multiple_cap(ea, y); ++l) {
          const Element ly = *multiple(ea, y, l);
          ++r.instances;
          const bool rhs = e.meet(kx, ly) == e.zero() && e.defined(kx, ly);
          if (lhs != rhs) {
            fail(r, {x, y, kx, ly},
                 "orthogonality of " + e.name(x) + "," + e.name(y) + " differs for multiples " +
                     std::to_string(k) + "," + std::to_string(l));
            return;
          }
        }
      }
    }
  }
}

// a <= b for all b in B implies (VB) (-) a = V{b (-) a}.
void law_join_minus(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element a = 0; a < ctx.n(); ++a) {
    const auto pool = members(e.algebra().order().up[a]);
    const bool ok = for_each_family(pool, ctx.config.max_family, [&](std::span<const Element> bs) {
      ++r.instances;
      std::vector<Element> diffs;
      for (Element b : bs) diffs.push_back(*e.ominus(b, a));
      const auto lhs = e.ominus(e.join_of(bs), a);
      if (!lhs || *lhs != e.join_of(diffs)) {
        fail(r, with(a, bs), "difference does not distribute over the join of " + names_of(e, bs));
        return false;
      }
      return true;
    });
    if (!ok) return;
  }
}

std::vector<Element> orthogonal_pool(const LatticeEffectAlgebra& e, Element b) {
  std::vector<Element> pool;
  for (Element a = 0; a < e.size(); ++a) {
    if (e.defined(b, a)) pool.push_back(a);
  }
  return pool;
}

// b (+) a defined for all a in A implies V{b (+) a} = b (+) VA.
void law_sum_join(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element b = 0; b < ctx.n(); ++b) {
    const bool ok = for_each_family(orthogonal_pool(e, b), ctx.config.max_family, [&](std::span<const Element> as) {
      ++r.instances;
      std::vector<Element> sums;
      for (Element a : as) sums.push_back(*e.sum(b, a));
      const auto rhs = e.sum(b, e.join_of(as));
      if (!rhs || *rhs != e.join_of(sums)) {
        fail(r, with(b, as), e.name(b) + " (+) join of " + names_of(e, as) + " is not the join of sums");
        return false;
      }
      return true;
    });
    if (!ok) return;
  }
}

// z central, x <= y' implies (x (+) y) ^ z = (x ^ z) (+) (y ^ z).
void law_central_meet(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element z : members(ctx.c)) {
    for (Element x = 0; x < ctx.n(); ++x) {
      for (Element y = 0; y < ctx.n(); ++y) {
        const auto s = e.sum(x, y);
        if (!s) continue;
        ++r.instances;
        const auto rhs = e.sum(e.meet(x, z), e.meet(y, z));
        if (!rhs || *rhs != e.meet(*s, z)) {
          fail(r, {x, y, z}, "meet with central " + e.name(z) + " does not split " + e.name(x) + " (+) " + e.name(y));
          return;
        }
      }
    }
  }
}

// b (+) a defined for all a in A implies b (+) VA = (b v VA) (+) V{b ^ a}.
void law_sum_join_split(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element b = 0; b < ctx.n(); ++b) {
    const bool ok = for_each_family(orthogonal_pool(e, b), ctx.config.max_family, [&](std::span<const Element> as) {
      ++r.instances;
      const Element j = e.join_of(as);
      std::vector<Element> meets;
      for (Element a : as) meets.push_back(e.meet(b, a));
      const auto lhs = e.sum(b, j);
      const auto rhs = e.sum(e.join(b, j), e.join_of(meets));
      if (!lhs || !rhs || *lhs != *rhs) {
        fail(r, with(b, as), "split of " + e.name(b) + " (+) join of " + names_of(e, as) + " fails");
        return false;
      }
      return true;
    });
    if (!ok) return;
  }
}

// Every x != 0 is the orthogonal sum and the join of k_a a over the atoms a
// of a block below x, and x is sharp iff every k_a = ord(a).
void law_atom_decomposition(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  const auto& ea = e.algebra();
  for (Element x = 0; x < ctx.n(); ++x) {
    if (x == e.zero()) continue;
    for (std::size_t i = 0; i < ctx.block_set.blocks.size(); ++i) {
      if (!ctx.block_set.blocks[i].test(x)) continue;
      ++r.instances;
      std::vector<Element> terms;
      bool full = true;
      for (Element a : ctx.block_set.atoms[i]) {
        if (!e.leq(a, x)) continue;
        const std::size_t k = ctx.decomposer.max_multiple_below(a, x);
        terms.push_back(*multiple(ea, a, k));
        if (k != ea.ord(a)) full = false;
      }
      const auto sum = fold_sum(e, terms);
      if (terms.empty() || !sum || *sum != x || e.join_of(terms) != x) {
        fail(r, {x}, e.name(x) + " is not recovered from its atom multiples " + names_of(e, terms));
        return;
      }
      if (full != ctx.sharp.test(x)) {
        fail(r, {x}, "sharpness of " + e.name(x) + " disagrees with its atom multiplicities");
        return;
      }
    }
  }
}

ElementSet to_host(const BlockView& v, const ElementSet& local, std::size_t n) {
  ElementSet out(n);
  for (auto i = local.find_first(); i != ElementSet::npos; i = local.find_next(i)) out.set(v.sub.embedding[i]);
  return out;
}

bool same_or_fail(LawReport& r, const ElementSet& lhs, const ElementSet& rhs, const std::string& what) {
  ++r.instances;
  if (lhs == rhs) return true;
  const ElementSet diff = lhs ^ rhs;
  fail(r, {static_cast<Element>(diff.find_first())}, what);
  return false;
}

// Blocks cover E, meet in B(E); C(E) is the intersection and Sh(E) the union
// of the blocks' centers (equivalently of their sharp parts).
void law_block_identities(const LawContext& ctx, LawReport& r) {
  const std::size_t n = ctx.n();
  const auto& e = ctx.e;
  ElementSet cover(n), inter = full_set(n), c_cap = full_set(n), sh_cap = full_set(n);
  ElementSet c_cup(n), sh_cup(n);
  for (const auto& v : ctx.blocks) {
    const ElementSet members = to_host(v, full_set(v.lattice.size()), n);
    const ElementSet local_c = to_host(v, center(v.lattice).members, n);
    const ElementSet local_sh = to_host(v, sharp_elements(v.lattice).members, n);
    cover |= members;
    inter &= members;
    c_cap &= local_c;
    c_cup |= local_c;
    sh_cap &= local_sh;
    sh_cup |= local_sh;
  }
  // B(E) straight from its definition, independent of the block search.
  ElementSet b(n);
  for (Element x = 0; x < n; ++x) {
    bool all = true;
    for (Element y = 0; y < n && all; ++y) all = e.compatible(x, y);
    if (all) b.set(x);
  }
  same_or_fail(r, cover, full_set(n), "blocks do not cover E") &&
      same_or_fail(r, inter, b, "intersection of blocks differs from B(E)") &&
      same_or_fail(r, c_cap, ctx.c, "intersection of block centers differs from C(E)") &&
      same_or_fail(r, sh_cap, ctx.c, "intersection of block sharp parts differs from C(E)") &&
      same_or_fail(r, c_cup, ctx.sharp, "union of block centers differs from Sh(E)") &&
      same_or_fail(r, sh_cup, ctx.sharp, "union of block sharp parts differs from Sh(E)");
}

// For n <= max_tuple elements and multiples k_i x_i: pairwise x_i ^ x_j = 0,
// x_i <= x_j' iff the sum of the k_i x_i exists, equals their join, and every
// split I | J has disjoint, orthogonal partial sums.
void law_tuple_orthogonality(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  const auto& ea = e.algebra();
  std::vector<Element> xs;
  std::vector<Element> kxs;
  std::vector<std::size_t> ks;

  auto evaluate = [&]() {
    ++r.instances;
    const std::size_t m = xs.size();
    bool lhs = true;
    for (std::size_t i = 0; i < m && lhs; ++i) {
      for (std::size_t j = i + 1; j < m && lhs; ++j) {
        lhs = e.meet(xs[i], xs[j]) == e.zero() && e.defined(xs[i], xs[j]);
      }
    }
    bool rhs = false;
    if (const auto total = fold_sum(e, kxs); total && *total == e.join_of(kxs)) {
      rhs = true;
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m) && rhs; ++mask) {
        std::vector<Element> in, out;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? in : out).push_back(kxs[i]);
        const auto si = fold_sum(e, in);
        const auto sj = fold_sum(e, out);
        rhs = si && sj && e.meet(*si, *sj) == e.zero() && e.defined(*sj, *si);
      }
    }
    if (lhs != rhs) {
      std::string ks_text;
      for (std::size_t k : ks) ks_text += (ks_text.empty() ? "" : ",") + std::to_string(k);
      fail(r, xs, "tuple " + names_of(e, xs) + " with multiples (" + ks_text + ") breaks the equivalence");
      return false;
    }
    return true;
  };

  std::function<bool(Element)> rec = [&](Element start) {
    if (xs.size() >= 2 && !evaluate()) return false;
    if (xs.size() == ctx.config.max_tuple) return true;
    for (Element x = start; x < ctx.n(); ++x) {
      for (std::size_t k = 1; k <= multiple_cap(ea, x); ++k) {
        xs.push_back(x);
        ks.push_back(k);
        kxs.push_back(*multiple(ea, x, k));
        const bool ok = rec(x);
        xs.pop_back();
        ks.pop_back();
        kxs.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };
  rec(0);
}

// Mutually compatible distinct atoms a_i, 1 <= k_i <= ord(a_i): the sum of
// the k_i a_i exists and equals their join, and the sum of the ord(a_i) a_i is
// the smallest sharp element above it.
void law_atom_multiples(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  const auto& ea = e.algebra();
  const auto& atoms = ea.atom_set().atoms;
  for_each_family(atoms, ctx.config.max_tuple, [&](std::span<const Element> as) {
    for (std::size_t i = 0; i < as.size(); ++i) {
      for (std::size_t j = i + 1; j < as.size(); ++j) {
        if (!e.compatible(as[i], as[j])) return true;
      }
    }
    std::vector<Element> full;
    for (Element a : as) full.push_back(*multiple(ea, a, ea.ord(a)));
    const auto top = fold_sum(e, full);
    if (!top || *top != e.join_of(full) || !ctx.sharp.test(*top)) {
      fail(r, {as.begin(), as.end()}, "full multiples of " + names_of(e, as) + " do not sum to a sharp join");
      return false;
    }
    std::vector<std::size_t> ks(as.size(), 1);
    while (true) {
      ++r.instances;
      std::vector<Element> terms;
      for (std::size_t i = 0; i < as.size(); ++i) terms.push_back(*multiple(ea, as[i], ks[i]));
      const auto s = fold_sum(e, terms);
      if (!s || *s != e.join_of(terms)) {
        fail(r, {as.begin(), as.end()}, "multiples " + names_of(e, terms) + " do not sum to their join");
        return false;
      }
      if (ctx.decomposer.envelope(*s).above != *top) {
        fail(r, {as.begin(), as.end()}, "smallest sharp element over " + e.name(*s) + " is not " + e.name(*top));
        return false;
      }
      std::size_t i = 0;
      while (i < as.size() && ks[i] == ea.ord(as[i])) ks[i++] = 1;
      if (i == as.size()) break;
      ++ks[i];
    }
    return true;
  });
}

// Per block M: Mea(M) is a V-bifull sub-poset and a lattice ideal of M, and
// x meager, x ^ y = 0 imply hat(x) ^ y = 0.
void law_block_meager(const LawContext& ctx, LawReport& r) {
  for (const auto& v : ctx.blocks) {
    const auto& m = v.lattice;
    const auto host = [&](Element x) { return v.sub.embedding[x]; };
    const Decomposer d(m);
    const ElementSet& mea = d.meager();
    for (Element x : members(mea)) {
      for (Element y = 0; y < m.size(); ++y) {
        ++r.instances;
        if (m.leq(y, x) && !mea.test(y)) {
          fail(r, {host(x), host(y)}, "meager part of a block is not a down-set");
          return;
        }
        if (mea.test(y) && !mea.test(m.join(x, y))) {
          fail(r, {host(x), host(y)}, "meager part of a block is not closed under joins");
          return;
        }
        if (m.meet(x, y) == m.zero() && m.meet(d.envelope(x).above, y) != m.zero()) {
          fail(r, {host(x), host(y)}, "upper envelope of a meager element meets a disjoint element");
          return;
        }
      }
    }
    ++r.instances;
    const auto bifull = is_bifull(m.algebra(), mea, {ctx.config.bifull_cutoff, BifullSide::kJoin});
    if (!bifull.bifull) {
      std::vector<Element> w;
      if (bifull.witness) {
        for (Element x : members(*bifull.witness)) w.push_back(host(x));
      }
      if (w.empty()) w.push_back(host(m.zero()));
      fail(r, w, "meager part of a block is not join-bifull");
      return;
    }
    if (bifull.by_closure) {
      r.notes.push_back("BOUNDED-CHECK: meager part of size " + std::to_string(mea.count()) +
                        " above the cutoff, decided by binary closure");
    }
  }
}

// B(E) n Mea(E) is V-bifull in E, and joins of its subfamilies agree in E
// and in B(E) and stay meager.
void law_center_meager(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  const ElementSet d = ctx.b & ctx.meager;
  ++r.instances;
  const auto bifull = is_bifull(e.algebra(), d, {ctx.config.bifull_cutoff, BifullSide::kJoin});
  if (!bifull.bifull) {
    std::vector<Element> w = bifull.witness ? members(*bifull.witness) : std::vector<Element>{};
    if (w.empty()) w.push_back(e.zero());
    fail(r, w, "B(E) n Mea(E) is not join-bifull");
    return;
  }
  if (bifull.by_closure) {
    r.notes.push_back("BOUNDED-CHECK: B(E) n Mea(E) of size " + std::to_string(d.count()) +
                      " above the cutoff, decided by binary closure");
  }
  const SubAlgebra sub = make_subalgebra(e.algebra(), ctx.b);
  const LatticeEffectAlgebra lb(sub.algebra);
  std::vector<Element> to_b(e.size(), kUndefined);
  for (std::size_t i = 0; i < sub.embedding.size(); ++i) to_b[sub.embedding[i]] = static_cast<Element>(i);
  for_each_family(members(d), ctx.config.max_family, [&](std::span<const Element> xs) {
    ++r.instances;
    std::vector<Element> local;
    for (Element x : xs) local.push_back(to_b[x]);
    const Element je = e.join_of(xs);
    const Element jb = sub.embedding[lb.join_of(local)];
    if (je != jb || !ctx.meager.test(je)) {
      fail(r, {xs.begin(), xs.end()}, "join of " + names_of(e, xs) + " differs in B(E) or is not meager");
      return false;
    }
    return true;
  });
}

void law_block_meager_inclusion(const LawContext& ctx, LawReport& r) {
  for (const auto& v : ctx.blocks) {
    const ElementSet local = Decomposer(v.lattice).meager();
    for (Element x : members(local)) {
      ++r.instances;
      const Element h = v.sub.embedding[x];
      if (!ctx.meager.test(h)) {
        fail(r, {h}, ctx.name(h) + " is meager in a block but not in E");
        return;
      }
    }
  }
}

void law_compatible_pair_block(const LawContext& ctx, LawReport& r) {
  const auto& e = ctx.e;
  for (Element x = 0; x < ctx.n(); ++x) {
    for (Element y = x; y < ctx.n(); ++y) {
      if (!e.compatible(x, y)) continue;
      ++r.instances;
      const bool found = std::any_of(ctx.block_set.blocks.begin(), ctx.block_set.blocks.end(),
                                     [&](const ElementSet& blk) { return blk.test(x) && blk.test(y); });
      if (!found) {
        fail(r, {x, y}, "compatible pair " + e.name(x) + "," + e.name(y) + " lies in no common block");
        return;
      }
    }
  }
}

bool bifull_in(const LawContext& ctx, const ElementSet& d, LawReport& r, const std::string& label) {
  const auto res = is_bifull(ctx.e.algebra(), d, {ctx.config.bifull_cutoff, BifullSide::kBoth});
  r.notes.push_back(label + (res.bifull ? " bifull" : " not bifull") + (res.by_closure ? " (binary closure)" : ""));
  return res.bifull;
}

void law_bifull_equivalence(const LawContext& ctx, LawReport& r) {
  ++r.instances;
  const bool b = bifull_in(ctx, ctx.b, r, "B(E)");
  const bool c = bifull_in(ctx, ctx.c, r, "C(E)");
  if (b != c) fail(r, members(b ? ctx.c : ctx.b), "bifullness of B(E) and C(E) differ");
}

void law_atomic_equivalence(const LawContext& ctx, LawReport& r) {
  ++r.instances;
  const bool b = is_atomic_subposet(ctx.e.algebra(), ctx.b);
  const bool c = is_atomic_subposet(ctx.e.algebra(), ctx.c);
  r.notes.push_back(std::string("B(E) ") + (b ? "atomic" : "not atomic") + ", C(E) " + (c ? "atomic" : "not atomic"));
  if (b != c) fail(r, members(b ? ctx.c : ctx.b), "atomicity of B(E) and C(E) differ");
}

void law_finite_center(const LawContext& ctx, LawReport& r) {
  ++r.instances;
  const bool atomic = is_atomic_subposet(ctx.e.algebra(), ctx.b);
  const bool bifull = bifull_in(ctx, ctx.b, r, "B(E)");
  if (!atomic || !bifull) {
    fail(r, members(ctx.b), std::string("B(E) is ") + (atomic ? "atomic" : "not atomic") + " and " +
                                (bifull ? "bifull" : "not bifull") + " although C(E) is finite");
  }
}

struct LawEntry {
  LawInfo info;
  void (*check)(const LawContext&, LawReport&);
};

const std::vector<LawEntry>& entries() {
  static const std::vector<LawEntry> table = {
      {{"L1", "b compatible with every a in A implies b compatible with VA and V{b^a} = b^VA"},
       law_compatible_join},
      {{"L2", "x^y = 0 and x <= y' iff kx^ly = 0 and kx <= (ly)'"}, law_multiples_orthogonal},
      {{"L3", "a below every b in B implies (VB) (-) a = V{b (-) a}"}, law_join_minus},
      {{"L4", "b (+) a defined for all a in A implies V{b (+) a} = b (+) VA"}, law_sum_join},
      {{"L5", "z central and x <= y' imply (x (+) y)^z = (x^z) (+) (y^z)"}, law_central_meet},
      {{"L6", "b (+) a defined for all a in A implies b (+) VA = (b v VA) (+) V{b^a}"}, law_sum_join_split},
      {{"L7", "x is the sum and the join of atom multiples k_a a, and sharp iff every k_a = ord(a)"},
       law_atom_decomposition},
      {{"L8", "blocks cover E and meet in B(E); C(E) and Sh(E) are the intersection and union of block centers"},
       law_block_identities},
      {{"L9", "pairwise disjoint orthogonal x_i iff sums of multiples are joins with orthogonal splits"},
       law_tuple_orthogonality},
      {{"L10", "multiples of compatible atoms sum to their join; full multiples give the smallest sharp element above"},
       law_atom_multiples},
      {{"L11", "in each block the meager part is a join-bifull lattice ideal and x^y = 0 implies hat(x)^y = 0"},
       law_block_meager},
      {{"L12", "B(E) n Mea(E) is a join-bifull sub-poset of E"}, law_center_meager},
      {{"L13", "the meager part of each block lies in Mea(E)"}, law_block_meager_inclusion},
      {{"L14", "each compatible pair lies in a common block"}, law_compatible_pair_block},
      {{"L15", "B(E) is bifull iff C(E) is bifull"}, law_bifull_equivalence},
      {{"L16", "B(E) is atomic iff C(E) is atomic"}, law_atomic_equivalence},
      {{"L17", "a finite C(E) makes B(E) atomic and bifull"}, law_finite_center},
  };
  return table;
}

const LawEntry& find_entry(std::string_view id) {
  for (const auto& entry : entries()) {
    if (entry.info.id == id) return entry;
  }
  throw std::invalid_argument("unknown law id: " + std::string(id));
}

LawReport blank(const LawEntry& entry) {
  LawReport r;
  r.id = entry.info.id;
  r.statement = entry.info.statement;
  return r;
}

LawReport run(const LawEntry& entry, const LawContext& ctx) {
  LawReport r = blank(entry);
  entry.check(ctx, r);
  return r;
}

LawReport skipped(const LawEntry& entry, std::string reason) {
  LawReport r = blank(entry);
  r.verdict = Verdict::kSkipped;
  r.detail = std::move(reason);
  return r;
}

std::string non_lattice_reason(const EffectAlgebra& e, const LatticeCheck& check) {
  return "order is not a lattice (" + e.name(check.witness->first) + ", " + e.name(check.witness->second) +
         " lack a meet or join)";
}

}  // namespace

std::string_view verdict_label(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& entry : entries()) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

LawReport check_law(const LatticeEffectAlgebra& e, std::string_view id, const LawConfig& config) {
  const auto& entry = find_entry(id);
  const LawContext ctx(e, config);
  return run(entry, ctx);
}

LawReport check_law(const EffectAlgebra& e, std::string_view id, const LawConfig& config) {
  const auto& entry = find_entry(id);
  const auto check = is_lattice(e);
  if (!check.is_lattice) return skipped(entry, non_lattice_reason(e, check));
  return check_law(LatticeEffectAlgebra(e), id, config);
}

std::vector<LawReport> check_all(const LatticeEffectAlgebra& e, const LawConfig& config) {
  const LawContext ctx(e, config);
  std::vector<LawReport> out;
  for (const auto& entry : entries()) out.push_back(run(entry, ctx));
  return out;
}

std::vector<LawReport> check_all(const EffectAlgebra& e, const LawConfig& config) {
  const auto check = is_lattice(e);
  if (!check.is_lattice) {
    std::vector<LawReport> out;
    for (const auto& entry : entries()) out.push_back(skipped(entry, non_lattice_reason(e, check)));
    return out;
  }
  return check_all(LatticeEffectAlgebra(e), config);
}

}  // namespace eat
