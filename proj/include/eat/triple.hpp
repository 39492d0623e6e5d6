#pragma once

// Rebuilding a finite lattice effect algebra from its sharp part, its meager
// part and the map h(s) = {meager x | x <= s}.
//
// A Triple is self-contained: the sharp part is an EffectAlgebra of its own,
// the meager part a GeneralizedEffectAlgebra, and h a family of subsets of the
// meager carrier. TripleCalculus and build_tea() see only the Triple. The host
// algebra appears again only in extract_triple(), phi() and verify_iso(),
// which is where the reconstruction is checked against it.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eat/core.hpp"
#include "eat/decomp.hpp"
#include "eat/generalized.hpp"
#include "eat/lattice.hpp"
#include "eat/substructures.hpp"

namespace eat {

struct Triple {
  EffectAlgebra sharp;
  GeneralizedEffectAlgebra meager;
  std::vector<ElementSet> h;  // h[s] is a subset of the meager carrier
};

/// A Triple together with where its elements came from in the host.
struct ExtractedTriple {
  Triple triple;
  std::vector<Element> sharp_to_host;
  std::vector<Element> meager_to_host;
  std::vector<Element> host_to_sharp;   // kUndefined off Sh
  std::vector<Element> host_to_meager;  // kUndefined off Mea
};

ExtractedTriple extract_triple(const LatticeEffectAlgebra& e);

/// The triple is not of the form produced by a lattice effect algebra.
class TripleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The derived maps computed inside a triple:
///   map_hat(x)   least sharp s with x in h(s)
///   map_pi(s,x)  greatest meager y <= x with y in h(s)
///   map_r(x)     join over atoms a <= x of (n_a - k_a) a, n_a = ord(a) + 1
///   map_s(x,y)   top of {z sharp | map_hat(map_pi(z,x)) = z and
///                                  map_r(map_pi(z,x)) = map_pi(z,y)}
class TripleCalculus {
 public:
  explicit TripleCalculus(const Triple& t);

  const Triple& triple() const { return t_; }
  const LatticeEffectAlgebra& sharp_lattice() const { return sharp_; }
  const GeneralizedEffectAlgebra& meager() const { return t_.meager; }
  bool in_h(Element s, Element x) const { return t_.h[s].test(x); }

  Element map_hat(Element x) const { return hat_[x]; }
  Element map_pi(Element s, Element x) const { return pi_[s * t_.meager.size() + x]; }
  Element map_r(Element x) const { return r_[x]; }
  std::optional<Element> map_s(Element x, Element y) const;

  /// Index of n_a recovered from the meager part alone: ord_meager(a) + 1.
  std::size_t host_ord(Element atom) const { return t_.meager.ord(atom) + 1; }

 private:
  Element compute_hat(Element x) const;
  Element compute_pi(Element s, Element x) const;
  Element compute_r(Element x) const;

  const Triple& t_;
  LatticeEffectAlgebra sharp_;
  std::vector<Element> hat_;
  std::vector<Element> pi_;
  std::vector<Element> r_;
  std::vector<Element> s_;  // kUndefined where the top does not exist
};

struct TeaPair {
  Element sharp;
  Element meager;
  auto operator<=>(const TeaPair&) const = default;
};

struct TeaAlgebra {
  EffectAlgebra algebra;
  std::vector<TeaPair> pairs;  // carrier, lexicographic
  std::optional<Element> index_of(TeaPair p) const;
};

/// The partial sum on pairs, or nullopt when one of its four defining
/// conditions fails.
std::optional<TeaPair> tea_sum(const TripleCalculus& calc, TeaPair x, TeaPair y);

/// The validated algebra on {(s, m) | m in h(s')}. Throws InconsistencyError
/// if the construction does not yield an effect algebra.
TeaAlgebra build_tea(const Triple& t);

/// phi(x) = (below(x), x (-) below(x)), in triple coordinates.
TeaPair phi(const Decomposer& d, const ExtractedTriple& t, Element x);
TeaPair phi(const LatticeEffectAlgebra& e, const ExtractedTriple& t, Element x);

struct IsoCertificate {
  bool isomorphic = false;
  std::vector<Element> mapping;  // source element -> Tea element
  std::string failure;
  std::optional<std::pair<Element, Element>> offending;
};

/// Checks that x -> images[x] is a bijection onto the Tea carrier that
/// preserves 0, 1 and the partial sum in both directions.
IsoCertificate verify_iso(const EffectAlgebra& source, const std::vector<TeaPair>& images,
                          const TeaAlgebra& tea);
IsoCertificate verify_iso(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                          const TeaAlgebra& tea);

/// The construction over (C(E), Mea(E) n B(E), h(c) n B(E)), checked against
/// B(E) through the restriction of phi.
struct RestrictedTea {
  SubAlgebra compatibility_center;
  ExtractedTriple triple;
  TeaAlgebra tea;
  IsoCertificate certificate;
};

RestrictedTea build_tea_restricted(const LatticeEffectAlgebra& e);

/// Elementwise comparison of the triple-side maps with their host-side
/// definitions (upper envelope, meet, envelope difference, top of the set of
/// sharp z with z = (z ^ x) (+) (z ^ y)). Returns one line per disagreement.
std::vector<std::string> cross_check_maps(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                                          const TripleCalculus& calc);

/// For all meager x, y: x (+) y is defined in the host iff S(x, y) is defined,
/// the meager remainder sum exists and lies in h(S(x, y)'), in which case the
/// host sum is S(x, y) (+) remainder. Returns one line per disagreement.
std::vector<std::string> check_sum_existence(const LatticeEffectAlgebra& e, const ExtractedTriple& t,
                                               const TripleCalculus& calc);

}  // namespace eat
