#pragma once

// Standard families of finite lattice effect algebras, exhaustive enumeration
// of small effect algebras up to isomorphism, and an isomorphism test.
//
// Spec grammar:
//   spec  := "chain:" N | "boolean:" N | "mo:" N
//          | "product(" spec ("," spec)+ ")" | "hsum(" spec ("," spec)+ ")"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eat/core.hpp"

namespace eat {

struct GenSpec {
  enum class Kind { kChain, kBoolean, kMo, kProduct, kHsum };
  Kind kind = Kind::kChain;
  std::size_t n = 0;           // chain, boolean, mo
  std::vector<GenSpec> parts;  // product, hsum
};

class GenSpecError : public std::invalid_argument {
 public:
  GenSpecError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

GenSpec parse_gen_spec(std::string_view text);
std::string to_string(const GenSpec& spec);

/// chain(n): {0, a, 2a, ..., 1}, n elements, truncated addition.
EffectAlgebra chain(std::size_t n);
/// boolean(k): subsets of k atoms named p, q, r, ...; disjoint union.
EffectAlgebra boolean(std::size_t k);
/// mo(n): horizontal sum of n copies of boolean(2); mo(1) is boolean(2).
EffectAlgebra mo(std::size_t n);
/// Componentwise sum; elements named "(x,y,...)".
EffectAlgebra product(const std::vector<EffectAlgebra>& factors);
/// Identifies all 0s and all 1s; sums across different summands are defined
/// only with 0. Non-bound names get a "_i" suffix when summands share names.
EffectAlgebra horizontal_sum(const std::vector<EffectAlgebra>& summands);

EffectAlgebra generate(const GenSpec& spec);
EffectAlgebra generate(std::string_view spec);

inline constexpr std::size_t kEnumerationCap = 7;

struct EnumeratedAlgebra {
  EffectAlgebra algebra;
  bool is_lattice = false;
};

/// One representative per isomorphism class of effect algebras with 2 to
/// max_order elements, sorted by size and then by canonical table. Elements
/// are named 0, e1, e2, ..., 1. Throws std::invalid_argument outside
/// [2, cap].
std::vector<EnumeratedAlgebra> enumerate_small(std::size_t max_order, std::size_t cap = kEnumerationCap);

/// The canonical text of an enumeration: each class as a commented header
/// followed by its EAT document.
std::string canonical_stream(const std::vector<EnumeratedAlgebra>& algebras);

/// A bijection f with f(0) = 0, f(1) = 1 and x (+) y = z iff f(x) (+) f(y) =
/// f(z), or nullopt.
std::optional<std::vector<Element>> are_isomorphic(const EffectAlgebra& a, const EffectAlgebra& b);

}  // namespace eat
