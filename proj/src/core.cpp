#include "eat/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace eat {

std::vector<Element> members(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

ElementSet make_set(std::size_t n, std::span<const Element> elements) {
  ElementSet set(n);
  for (Element x : elements) set.set(x);
  return set;
}

ElementSet full_set(std::size_t n) {
  ElementSet set(n);
  set.set();
  return set;
}

SumTable::SumTable(std::vector<std::string> element_names, Element zero_element,
                   Element unit_element)
    : names(std::move(element_names)),
      zero(zero_element),
      unit(unit_element),
      cells(names.size() * names.size(), kUndefined) {}

std::optional<Element> SumTable::find(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Element>(it - names.begin());
}

std::string_view axiom_label(Axiom axiom) {
  switch (axiom) {
    case Axiom::kCommutativity:
      return "(Ei)";
    case Axiom::kAssociativity:
      return "(Eii)";
    case Axiom::kOrthosupplement:
      return "(Eiii)";
    case Axiom::kZeroOne:
      return "(Eiv)";
  }
  return "(?)";
}

bool ValidationReport::violates(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

namespace {

std::string render(const SumTable& t, Element x) {
  return x == kUndefined ? std::string("undefined") : t.names[x];
}

std::vector<std::string> structural_errors(const SumTable& t) {
  std::vector<std::string> errors;
  const std::size_t n = t.size();
  if (n < 2) errors.push_back("carrier must have at least two elements");
  std::set<std::string_view> seen;
  for (const auto& name : t.names) {
    if (name.empty()) {
      errors.push_back("empty element name");
    } else if (std::any_of(name.begin(), name.end(),
                           [](unsigned char c) { return std::isspace(c); })) {
      errors.push_back("element name '" + name + "' contains whitespace");
    }
    if (!seen.insert(name).second) errors.push_back("duplicate element name '" + name + "'");
  }
  if (t.zero >= n) errors.push_back("zero index out of range");
  if (t.unit >= n) errors.push_back("unit index out of range");
  if (t.zero < n && t.zero == t.unit) errors.push_back("zero and unit must be distinct");
  if (t.cells.size() != n * n) {
    errors.push_back("sum table must have n*n cells");
    return errors;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element z = t.at(x, y);
      if (z != kUndefined && z >= n) {
        std::ostringstream os;
        os << "cell (" << x << "," << y << ") holds out-of-range index " << z;
        errors.push_back(os.str());
      }
    }
  }
  return errors;
}

std::vector<AxiomViolation> axiom_violations(const SumTable& t) {
  std::vector<AxiomViolation> out;
  const auto n = static_cast<Element>(t.size());

  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (t.at(x, y) != t.at(y, x)) {
        out.push_back({Axiom::kCommutativity,
                       {x, y},
                       t.names[x] + " + " + t.names[y] + " = " + render(t, t.at(x, y)) +
                           " but " + t.names[y] + " + " + t.names[x] + " = " +
                           render(t, t.at(y, x))});
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.at(x, y);
      for (Element z = 0; z < n; ++z) {
        const Element yz = t.at(y, z);
        const Element left = xy == kUndefined ? kUndefined : t.at(xy, z);
        const Element right = yz == kUndefined ? kUndefined : t.at(x, yz);
        if (left != right) {
          out.push_back({Axiom::kAssociativity,
                         {x, y, z},
                         "(" + t.names[x] + " + " + t.names[y] + ") + " + t.names[z] + " = " +
                             render(t, left) + " but " + t.names[x] + " + (" + t.names[y] +
                             " + " + t.names[z] + ") = " + render(t, right)});
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    std::vector<Element> supplements;
    for (Element y = 0; y < n; ++y) {
      if (t.at(x, y) == t.unit) supplements.push_back(y);
    }
    if (supplements.size() == 1) continue;
    AxiomViolation v{Axiom::kOrthosupplement, {x}, {}};
    if (supplements.empty()) {
      v.message = "no y with " + t.names[x] + " + y = " + t.names[t.unit];
    } else {
      v.message = "several y with " + t.names[x] + " + y = " + t.names[t.unit] + ":";
      for (Element y : supplements) {
        v.witness.push_back(y);
        v.message += " " + t.names[y];
      }
    }
    out.push_back(std::move(v));
  }

  for (Element x = 0; x < n; ++x) {
    if (x != t.zero && t.at(t.unit, x) != kUndefined) {
      out.push_back({Axiom::kZeroOne,
                     {x},
                     t.names[t.unit] + " + " + t.names[x] + " is defined but " + t.names[x] +
                         " is not " + t.names[t.zero]});
    }
  }
  return out;
}

OrderRelation order_from_table(const SumTable& t) {
  const auto n = static_cast<Element>(t.size());
  OrderRelation rel{std::vector<ElementSet>(n, ElementSet(n)),
                    std::vector<ElementSet>(n, ElementSet(n)),
                    std::vector<Element>(static_cast<std::size_t>(n) * n, kUndefined)};
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      const Element y = t.at(x, z);
      if (y == kUndefined) continue;
      Element& slot = rel.ominus[static_cast<std::size_t>(y) * n + x];
      if (slot != kUndefined && slot != z) {
        throw InconsistencyError("cancellation fails: " + t.names[x] + " + " + t.names[slot] +
                                 " = " + t.names[x] + " + " + t.names[z]);
      }
      slot = z;
      rel.up[x].set(y);
      rel.down[y].set(x);
    }
  }
  return rel;
}

}  // namespace

InvalidAlgebra::InvalidAlgebra(ValidationReport report)
    : std::invalid_argument([&report] {
        std::string msg = "not an effect algebra:";
        for (const auto& s : report.structural) msg += " " + s + ";";
        for (const auto& v : report.violations) {
          msg += " ";
          msg += axiom_label(v.axiom);
          msg += " " + v.message + ";";
        }
        return msg;
      }()),
      report_(std::move(report)) {}

ValidationOutcome validate(SumTable table) {
  ValidationOutcome outcome;
  outcome.report.structural = structural_errors(table);
  if (!outcome.report.structural.empty()) return outcome;
  outcome.report.violations = axiom_violations(table);
  if (!outcome.report.violations.empty()) return outcome;
  outcome.algebra.emplace(EffectAlgebra(std::move(table)));
  return outcome;
}

EffectAlgebra EffectAlgebra::from_table(SumTable table) {
  auto outcome = validate(std::move(table));
  if (!outcome.algebra) throw InvalidAlgebra(std::move(outcome.report));
  return std::move(*outcome.algebra);
}

EffectAlgebra::EffectAlgebra(SumTable table) : table_(std::move(table)) {
  const auto n = static_cast<Element>(size());
  complement_.assign(n, kUndefined);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (table_.at(x, y) == table_.unit) complement_[x] = y;
    }
  }
  order_ = order_from_table(table_);

  isotropic_.ord.assign(n, kUnboundedOrd);
  for (Element x = 0; x < n; ++x) {
    if (x == zero()) continue;
    std::size_t k = 1;
    Element acc = x;
    while (table_.at(acc, x) != kUndefined) {
      acc = table_.at(acc, x);
      if (++k > n) throw InconsistencyError("unbounded multiples of " + name(x));
    }
    isotropic_.ord[x] = k;
  }

  for (Element x = 0; x < n; ++x) {
    if (x == zero()) continue;
    // An atom's down-set is exactly {0, x}.
    if (order_.down[x].count() == 2) atoms_.atoms.push_back(x);
  }
  for (Element x = 0; x < n && atoms_.is_atomic; ++x) {
    if (x == zero()) continue;
    atoms_.is_atomic = std::any_of(atoms_.atoms.begin(), atoms_.atoms.end(),
                                   [&](Element a) { return leq(a, x); });
  }
}

Element EffectAlgebra::element(std::string_view label) const {
  auto x = find(label);
  if (!x) throw std::out_of_range("unknown element '" + std::string(label) + "'");
  return *x;
}

std::optional<Element> EffectAlgebra::sum(Element x, Element y) const {
  const Element z = table_.at(x, y);
  if (z == kUndefined) return std::nullopt;
  return z;
}

std::optional<Element> EffectAlgebra::ominus(Element y, Element x) const {
  const Element z = order_.ominus[static_cast<std::size_t>(y) * size() + x];
  if (z == kUndefined) return std::nullopt;
  return z;
}

bool EffectAlgebra::is_atom(Element x) const {
  return std::find(atoms_.atoms.begin(), atoms_.atoms.end(), x) != atoms_.atoms.end();
}

OrderRelation derive_order(const EffectAlgebra& e) { return order_from_table(e.table()); }

Element complement_of(const EffectAlgebra& e, Element x) { return e.complement(x); }

std::optional<Element> ortho_sum(const EffectAlgebra& e, std::span<const Element> summands) {
  Element acc = e.zero();
  for (Element x : summands) {
    acc = e.sum_or_undefined(acc, x);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

std::optional<Element> multiple(const EffectAlgebra& e, Element x, std::size_t k) {
  Element acc = e.zero();
  for (std::size_t i = 0; i < k; ++i) {
    acc = e.sum_or_undefined(acc, x);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

std::size_t isotropic_index(const EffectAlgebra& e, Element x) {
  if (x == e.zero()) throw std::invalid_argument("isotropic index of 0 is unbounded");
  return e.ord(x);
}

AtomSet atoms(const EffectAlgebra& e) { return e.atom_set(); }

}  // namespace eat
