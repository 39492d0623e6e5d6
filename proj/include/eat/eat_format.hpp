#pragma once

// The EAT text format: one declaration per line.
//
//   # comment
//   elements 0 a 1
//   zero 0
//   unit 1
//   sum a a 1
//
// Pairs without a `sum` line are undefined; `sum x y z` also sets y (+) x.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eat/core.hpp"

namespace eat {

struct ParseDiagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
};

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view source_name);

class EatParseError : public std::invalid_argument {
 public:
  explicit EatParseError(std::vector<ParseDiagnostic> diagnostics);
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

/// Throws EatParseError listing every problem found.
SumTable parse_eat(std::string_view text);

/// Canonical form: elements in carrier order, then zero and unit, then one
/// `sum` line per defined cell with x <= y in index order.
std::string serialize_eat(const SumTable& table);
std::string serialize_eat(const EffectAlgebra& e);

}  // namespace eat
