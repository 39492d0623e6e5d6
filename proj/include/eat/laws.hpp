#pragma once

// Executable checks of structural laws of lattice effect algebras.
//
// Each law is a registry entry with a stable id ("L1".."L17"), a one-line
// statement and a checker that instantiates the law's quantifiers
// exhaustively on a finite algebra, within the bounds in LawConfig.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eat/core.hpp"
#include "eat/lattice.hpp"

namespace eat {

struct LawConfig {
  std::size_t max_family = 3;      // families A in L1, L3, L4, L6, L12
  std::size_t max_tuple = 3;       // tuples in L9, atom sets in L10
  std::size_t bifull_cutoff = 20;  // exact subset enumeration up to this size
};

enum class Verdict { kPass, kFail, kSkipped };

std::string_view verdict_label(Verdict v);

struct LawReport {
  std::string id;
  std::string statement;
  std::size_t instances = 0;
  Verdict verdict = Verdict::kPass;
  std::vector<Element> witness;  // nonempty iff verdict == kFail
  std::string detail;            // failure description or skip reason
  std::vector<std::string> notes;
};

struct LawInfo {
  std::string id;
  std::string statement;
};

/// Registered laws in id order.
const std::vector<LawInfo>& law_registry();

/// Throws std::invalid_argument for an unknown id.
LawReport check_law(const LatticeEffectAlgebra& e, std::string_view id, const LawConfig& config = {});
/// Every law is reported SKIPPED when the order is not a lattice.
LawReport check_law(const EffectAlgebra& e, std::string_view id, const LawConfig& config = {});

std::vector<LawReport> check_all(const LatticeEffectAlgebra& e, const LawConfig& config = {});
std::vector<LawReport> check_all(const EffectAlgebra& e, const LawConfig& config = {});

}  // namespace eat
