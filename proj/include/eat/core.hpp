#pragma once

// Finite effect algebras given by explicit partial sum tables.
//
// A SumTable is raw input: a carrier of n labelled elements, two distinguished
// elements and an n x n table whose cells are either an element index or
// kUndefined. validate() checks the four effect-algebra axioms exhaustively and,
// on success, produces an immutable EffectAlgebra carrying the derived
// orthosupplement, order, difference and isotropic indices.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace eat {

using Element = std::uint32_t;
inline constexpr Element kUndefined = std::numeric_limits<Element>::max();

/// Subset of a carrier, indexed by element.
using ElementSet = boost::dynamic_bitset<>;

std::vector<Element> members(const ElementSet& set);
ElementSet make_set(std::size_t n, std::span<const Element> elements);
ElementSet full_set(std::size_t n);

/// Raised when a result that the theory guarantees fails to hold on an
/// instance. Seeing one means either a bug or a malformed input that slipped
/// through validation.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SumTable {
  std::vector<std::string> names;
  Element zero = 0;
  Element unit = 1;
  std::vector<Element> cells;  // row-major, size() * size()

  SumTable() = default;
  SumTable(std::vector<std::string> element_names, Element zero_element,
           Element unit_element);

  std::size_t size() const { return names.size(); }
  Element at(Element x, Element y) const { return cells[x * size() + y]; }
  void set(Element x, Element y, Element z) { cells[x * size() + y] = z; }
  void set_symmetric(Element x, Element y, Element z) {
    set(x, y, z);
    set(y, x, z);
  }
  std::optional<Element> find(std::string_view name) const;

  bool operator==(const SumTable&) const = default;
};

enum class Axiom {
  kCommutativity,    // (Ei)
  kAssociativity,    // (Eii)
  kOrthosupplement,  // (Eiii)
  kZeroOne,          // (Eiv)
};

std::string_view axiom_label(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<AxiomViolation> violations;

  bool ok() const { return structural.empty() && violations.empty(); }
  bool violates(Axiom axiom) const;
};

/// ord(x) for x != 0 is the largest k with kx defined; ord(0) is this sentinel.
inline constexpr std::size_t kUnboundedOrd = std::numeric_limits<std::size_t>::max();

struct IsotropicProfile {
  std::vector<std::size_t> ord;
  bool archimedean = true;
};

struct AtomSet {
  std::vector<Element> atoms;
  bool is_atomic = true;
};

/// The derived order: leq[x] is the up-set of x, and y (-) x is stored at
/// ominus[y * n + x] whenever x <= y.
struct OrderRelation {
  std::vector<ElementSet> up;
  std::vector<ElementSet> down;
  std::vector<Element> ominus;
};

struct ValidationOutcome;

/// Checks (Ei)-(Eiv) exhaustively. Structural problems (bad indices, zero ==
/// unit, malformed names) are reported separately and suppress axiom checks.
/// Violations are collected, not fail-fast.
ValidationOutcome validate(SumTable table);

class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated effect algebra. Immutable; every accessor is a table lookup.
class EffectAlgebra {
 public:
  /// Validates and throws InvalidAlgebra on failure.
  static EffectAlgebra from_table(SumTable table);

  const SumTable& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  Element zero() const { return table_.zero; }
  Element unit() const { return table_.unit; }
  const std::string& name(Element x) const { return table_.names[x]; }
  std::optional<Element> find(std::string_view name) const { return table_.find(name); }
  /// Like find() but throws std::out_of_range for unknown names.
  Element element(std::string_view name) const;

  std::optional<Element> sum(Element x, Element y) const;
  Element sum_or_undefined(Element x, Element y) const { return table_.at(x, y); }
  bool defined(Element x, Element y) const { return table_.at(x, y) != kUndefined; }

  Element complement(Element x) const { return complement_[x]; }
  bool leq(Element x, Element y) const { return order_.up[x].test(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  /// y (-) x, defined iff x <= y.
  std::optional<Element> ominus(Element y, Element x) const;

  const OrderRelation& order() const { return order_; }
  const IsotropicProfile& isotropic() const { return isotropic_; }
  const AtomSet& atom_set() const { return atoms_; }
  std::size_t ord(Element x) const { return isotropic_.ord[x]; }
  bool is_atom(Element x) const;

 private:
  friend ValidationOutcome validate(SumTable table);
  explicit EffectAlgebra(SumTable table);

  SumTable table_;
  std::vector<Element> complement_;
  OrderRelation order_;
  IsotropicProfile isotropic_;
  AtomSet atoms_;
};

struct ValidationOutcome {
  std::optional<EffectAlgebra> algebra;
  ValidationReport report;
};

OrderRelation derive_order(const EffectAlgebra& e);

Element complement_of(const EffectAlgebra& e, Element x);

/// Left fold of (+) over a multiset; the empty sum is 0.
std::optional<Element> ortho_sum(const EffectAlgebra& e, std::span<const Element> summands);

/// k-fold sum kx, or nullopt when undefined. 0x is 0.
std::optional<Element> multiple(const EffectAlgebra& e, Element x, std::size_t k);

/// Throws std::invalid_argument for x == 0.
std::size_t isotropic_index(const EffectAlgebra& e, Element x);

AtomSet atoms(const EffectAlgebra& e);

}  // namespace eat
