#pragma once

// Distinguished subsets of a finite lattice effect algebra: sharp and meager
// elements, blocks, the compatibility center B(E) and the center C(E), plus
// the subset predicates (sub-effect algebra, full, bifull) used to check them.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eat/core.hpp"
#include "eat/generalized.hpp"
#include "eat/lattice.hpp"

namespace eat {

struct SharpSet {
  ElementSet members;
  struct Closure {
    bool complement = false;
    bool meet = false;
    bool join = false;
    bool sum = false;
  } closed_under;
};

/// x is sharp iff x ^ x' = 0.
SharpSet sharp_elements(const LatticeEffectAlgebra& e);

/// Mea(E) with the restricted sum: x (+) y is kept only when it is defined in
/// E and lands in Mea(E). `embedding` maps indices of `partial` to host
/// elements; `atom_ords` lists (host atom, ord inside Mea(E)) for meager atoms.
struct MeagerStructure {
  ElementSet members;
  GeneralizedEffectAlgebra partial;
  std::vector<Element> embedding;
  std::vector<std::pair<Element, std::size_t>> atom_ords;
};

/// x is meager iff the only sharp element below x is 0.
MeagerStructure meager_elements(const LatticeEffectAlgebra& e);
MeagerStructure meager_elements(const LatticeEffectAlgebra& e, const SharpSet& sharp);

struct BlockSet {
  std::vector<ElementSet> blocks;        // sorted by member list
  ElementSet intersection;               // B(E)
  std::vector<std::vector<Element>> atoms;  // atoms of E in each block
};

/// Maximal sets of pairwise compatible elements (maximal cliques of the
/// compatibility graph). On a finite carrier every block is atomic, so no
/// separate atomic-block notion is kept.
BlockSet blocks(const LatticeEffectAlgebra& e);

/// {x | x <-> y for all y}; cross-checked against the block intersection.
ElementSet compatibility_center(const LatticeEffectAlgebra& e);
ElementSet compatibility_center(const LatticeEffectAlgebra& e, const BlockSet& blocks);

struct CenterSet {
  ElementSet members;
};

/// {x | y = (y ^ x) v (y ^ x') for all y}; asserted equal to B(E) n Sh(E).
CenterSet center(const LatticeEffectAlgebra& e);

struct SubsetCheck {
  bool holds = false;
  std::vector<Element> witness;
  std::string reason;
};

/// 1 in Q, and whenever x (+) y = z with two of x, y, z in Q, all three are.
SubsetCheck is_sub_effect_algebra(const EffectAlgebra& e, const ElementSet& q);
/// Sub-effect algebra closed under binary meet and join.
SubsetCheck is_sub_lattice_effect_algebra(const LatticeEffectAlgebra& e, const ElementSet& q);
/// Closed under every supremum and infimum existing in E, including those of
/// the empty family. On a finite lattice this is: 0, 1 in Q and closed under
/// binary meet and join.
SubsetCheck is_full(const LatticeEffectAlgebra& e, const ElementSet& q);

enum class BifullSide { kJoin, kMeet, kBoth };

struct BifullOptions {
  std::size_t cutoff = 20;
  BifullSide side = BifullSide::kBoth;
};

struct BifullResult {
  bool bifull = false;
  /// Subset X of D on which the D-side and E-side bound disagree.
  std::optional<ElementSet> witness;
  /// True when decided by the binary-closure argument rather than subset
  /// enumeration.
  bool by_closure = false;
};

/// Decides whether every X subset of D has its E-supremum (infimum) existing
/// exactly when its D-supremum (infimum) does, with equal values. Exact subset
/// enumeration up to `cutoff`; beyond that E must be a lattice and the answer
/// is read off closure of D under binary bounds and the empty bounds.
/// Throws std::invalid_argument above the cutoff on a non-lattice E.
BifullResult is_bifull(const EffectAlgebra& e, const ElementSet& d, const BifullOptions& options = {});

/// Closure-based answer only; requires a lattice.
BifullResult bifull_by_closure(const LatticeEffectAlgebra& e, const ElementSet& d,
                               BifullSide side = BifullSide::kBoth);

/// Q with the restricted operation, relabelled in increasing host order.
struct SubAlgebra {
  EffectAlgebra algebra;
  std::vector<Element> embedding;  // sub index -> host element
};

/// Throws InvalidAlgebra when the restriction is not an effect algebra.
SubAlgebra make_subalgebra(const EffectAlgebra& e, const ElementSet& q);

/// Q as a generalized effect algebra: x (+) y kept iff it is defined in E and
/// lies in Q. `embedding` receives the host index of each element.
GeneralizedEffectAlgebra restrict_partial(const EffectAlgebra& e, const ElementSet& q,
                                          std::vector<Element>* embedding = nullptr);

/// Every non-zero element of Q dominates a minimal non-zero element of Q.
bool is_atomic_subposet(const EffectAlgebra& e, const ElementSet& q);

}  // namespace eat
