#pragma once

// Text and JSON renderings of analyses, validation failures, triple
// reconstructions and law runs.
//
// JSON analysis keys: elements, zero, unit, valid, structural, violations,
// is_lattice, lattice_witness, complement, order, atoms, atomic, ord, sharp,
// meager, blocks, compatibility_center, center, envelopes, decompositions,
// skipped. Elements are always referred to by name; ord(0) is null.

#include <string>
#include <vector>

#include <json.hpp>

#include "eat/core.hpp"
#include "eat/laws.hpp"
#include "eat/lattice.hpp"
#include "eat/triple.hpp"

namespace eat {

nlohmann::json violations_json(const SumTable& table, const ValidationReport& report);
std::string violations_text(const SumTable& table, const ValidationReport& report);

/// Full analysis of a validated algebra; lattice-only sections are replaced
/// by a "skipped" reason when the order is not a lattice.
nlohmann::json analysis_json(const EffectAlgebra& e);
std::string analysis_text(const EffectAlgebra& e);

struct TripleOutcome {
  ExtractedTriple extracted;
  TeaAlgebra tea;
  IsoCertificate certificate;
  RestrictedTea restricted;
};

TripleOutcome run_triple(const LatticeEffectAlgebra& e);
nlohmann::json triple_json(const LatticeEffectAlgebra& e, const TripleOutcome& t);
std::string triple_text(const LatticeEffectAlgebra& e, const TripleOutcome& t);

nlohmann::json laws_json(const EffectAlgebra& e, const std::vector<LawReport>& reports);
std::string laws_text(const EffectAlgebra& e, const std::vector<LawReport>& reports);

}  // namespace eat
