#include "eat/report.hpp"

#include <sstream>

#include "eat/decomp.hpp"
#include "eat/substructures.hpp"

namespace eat {

namespace {

using nlohmann::json;

json names_of(const EffectAlgebra& e, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(e.name(x));
  return out;
}

json names_of(const EffectAlgebra& e, const ElementSet& xs) { return names_of(e, members(xs)); }

std::string join_names(const json& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n.get<std::string>();
  return out;
}

std::vector<std::pair<Element, Element>> covers(const EffectAlgebra& e) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < e.size(); ++x) {
    for (Element y = 0; y < e.size(); ++y) {
      if (!e.less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < e.size() && cover; ++z) cover = !(e.less(x, z) && e.less(z, y));
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

json base_json(const EffectAlgebra& e) {
  json j;
  j["elements"] = e.table().names;
  j["zero"] = e.name(e.zero());
  j["unit"] = e.name(e.unit());
  j["valid"] = true;
  json complement = json::object();
  for (Element x = 0; x < e.size(); ++x) complement[e.name(x)] = e.name(e.complement(x));
  j["complement"] = complement;
  json order = json::array();
  for (const auto& [x, y] : covers(e)) order.push_back({e.name(x), e.name(y)});
  j["order"] = order;
  j["atoms"] = names_of(e, e.atom_set().atoms);
  j["atomic"] = e.atom_set().is_atomic;
  json ord = json::object();
  for (Element x = 0; x < e.size(); ++x) {
    ord[e.name(x)] = e.ord(x) == kUnboundedOrd ? json(nullptr) : json(e.ord(x));
  }
  j["ord"] = ord;
  return j;
}

void lattice_sections(const LatticeEffectAlgebra& e, json& j) {
  const Decomposer d(e);
  const BlockSet bs = blocks(e);
  const auto& a = e.algebra();
  j["sharp"] = names_of(a, d.sharp().members);
  j["meager"] = names_of(a, d.meager());
  json bl = json::array();
  for (const auto& b : bs.blocks) bl.push_back(names_of(a, b));
  j["blocks"] = bl;
  j["compatibility_center"] = names_of(a, compatibility_center(e, bs));
  j["center"] = names_of(a, center(e).members);
  json env = json::object();
  json dec = json::object();
  for (Element x = 0; x < e.size(); ++x) {
    const auto en = d.envelope(x);
    env[e.name(x)] = {{"below", e.name(en.below)}, {"above", e.name(en.above)}};
    const auto bd = d.basic_decomposition(x);
    json support = json::array();
    for (const auto& [atom, k] : bd.support.pairs) support.push_back({{"atom", e.name(atom)}, {"k", k}});
    dec[e.name(x)] = {{"sharp", e.name(bd.sharp_part)}, {"meager", e.name(bd.meager_part)}, {"atoms", support}};
  }
  j["envelopes"] = env;
  j["decompositions"] = dec;
}

std::string pair_label(const TeaAlgebra& tea, Element i) { return tea.algebra.name(i); }

}  // namespace

json violations_json(const SumTable& table, const ValidationReport& report) {
  json j;
  j["elements"] = table.names;
  j["valid"] = false;
  j["structural"] = report.structural;
  json vs = json::array();
  for (const auto& v : report.violations) {
    json w = json::array();
    for (Element x : v.witness) w.push_back(x < table.size() ? table.names[x] : std::to_string(x));
    vs.push_back({{"axiom", std::string(axiom_label(v.axiom))}, {"witness", w}, {"message", v.message}});
  }
  j["violations"] = vs;
  return j;
}

std::string violations_text(const SumTable& table, const ValidationReport& report) {
  std::ostringstream out;
  out << "invalid: " << report.structural.size() + report.violations.size() << " problem(s)\n";
  for (const auto& s : report.structural) out << "  structural: " << s << "\n";
  for (const auto& v : report.violations) {
    out << "  " << axiom_label(v.axiom) << " witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      out << (i ? ", " : "") << (v.witness[i] < table.size() ? table.names[v.witness[i]] : "?");
    }
    out << "): " << v.message << "\n";
  }
  return out.str();
}

json analysis_json(const EffectAlgebra& e) {
  json j = base_json(e);
  const auto check = is_lattice(e);
  j["is_lattice"] = check.is_lattice;
  if (!check.is_lattice) {
    j["lattice_witness"] = {e.name(check.witness->first), e.name(check.witness->second)};
    j["skipped"] = "sharp, meager, blocks, centers, envelopes and decompositions need a lattice order";
    return j;
  }
  lattice_sections(LatticeEffectAlgebra(e), j);
  return j;
}

std::string analysis_text(const EffectAlgebra& e) {
  const json j = analysis_json(e);
  std::ostringstream out;
  out << "elements: " << join_names(j["elements"]) << "\n";
  out << "zero: " << j["zero"].get<std::string>() << "  unit: " << j["unit"].get<std::string>() << "\n";
  out << "valid: yes\n";
  out << "order (covers):";
  for (const auto& c : j["order"]) out << " " << c[0].get<std::string>() << "<" << c[1].get<std::string>();
  out << "\ncomplement:";
  for (Element x = 0; x < e.size(); ++x) out << " " << e.name(x) << "'=" << e.name(e.complement(x));
  out << "\natoms: " << join_names(j["atoms"]) << (j["atomic"].get<bool>() ? "  (atomic)" : "  (not atomic)") << "\n";
  out << "ord:";
  for (Element x = 0; x < e.size(); ++x) {
    out << " " << e.name(x) << "=" << (e.ord(x) == kUnboundedOrd ? std::string("inf") : std::to_string(e.ord(x)));
  }
  out << "\nlattice: " << (j["is_lattice"].get<bool>() ? "yes" : "no") << "\n";
  if (!j["is_lattice"].get<bool>()) {
    out << "  no meet or join for " << j["lattice_witness"][0].get<std::string>() << ", "
        << j["lattice_witness"][1].get<std::string>() << "\n";
    out << "skipped: " << j["skipped"].get<std::string>() << "\n";
    return out.str();
  }
  out << "sharp: " << join_names(j["sharp"]) << "\n";
  out << "meager: " << join_names(j["meager"]) << "\n";
  out << "blocks:\n";
  for (const auto& b : j["blocks"]) out << "  {" << join_names(b) << "}\n";
  out << "compatibility center B(E): " << join_names(j["compatibility_center"]) << "\n";
  out << "center C(E): " << join_names(j["center"]) << "\n";
  out << "envelopes and decompositions:\n";
  for (Element x = 0; x < e.size(); ++x) {
    const auto& en = j["envelopes"][e.name(x)];
    const auto& d = j["decompositions"][e.name(x)];
    out << "  " << e.name(x) << ": below " << en["below"].get<std::string>() << ", above "
        << en["above"].get<std::string>() << "; " << e.name(x) << " = " << d["sharp"].get<std::string>() << " + "
        << d["meager"].get<std::string>();
    if (!d["atoms"].empty()) {
      out << " with meager part";
      for (const auto& s : d["atoms"]) out << " " << s["k"].get<std::size_t>() << "*" << s["atom"].get<std::string>();
    }
    out << "\n";
  }
  return out.str();
}

TripleOutcome run_triple(const LatticeEffectAlgebra& e) {
  ExtractedTriple extracted = extract_triple(e);
  TeaAlgebra tea = build_tea(extracted.triple);
  IsoCertificate cert = verify_iso(e, extracted, tea);
  RestrictedTea restricted = build_tea_restricted(e);
  return TripleOutcome{std::move(extracted), std::move(tea), std::move(cert), std::move(restricted)};
}

json triple_json(const LatticeEffectAlgebra& e, const TripleOutcome& t) {
  const auto& tr = t.extracted.triple;
  json j;
  j["sharp"] = tr.sharp.table().names;
  j["meager"] = tr.meager.names();
  json h = json::object();
  for (Element s = 0; s < tr.sharp.size(); ++s) {
    json row = json::array();
    for (Element m : members(tr.h[s])) row.push_back(tr.meager.name(m));
    h[tr.sharp.name(s)] = row;
  }
  j["h"] = h;
  j["tea"] = t.tea.algebra.table().names;
  j["isomorphic"] = t.certificate.isomorphic;
  json mapping = json::object();
  for (Element x = 0; x < t.certificate.mapping.size(); ++x) {
    mapping[e.name(x)] = pair_label(t.tea, t.certificate.mapping[x]);
  }
  j["mapping"] = mapping;
  if (!t.certificate.isomorphic) j["failure"] = t.certificate.failure;
  const auto& r = t.restricted;
  j["restricted"] = {{"compatibility_center", r.compatibility_center.algebra.table().names},
                     {"tea", r.tea.algebra.table().names},
                     {"isomorphic", r.certificate.isomorphic}};
  if (!r.certificate.isomorphic) j["restricted"]["failure"] = r.certificate.failure;
  return j;
}

std::string triple_text(const LatticeEffectAlgebra& e, const TripleOutcome& t) {
  const json j = triple_json(e, t);
  std::ostringstream out;
  out << "sharp: " << join_names(j["sharp"]) << "\n";
  out << "meager: " << join_names(j["meager"]) << "\n";
  for (const auto& [s, row] : j["h"].items()) out << "h(" << s << ") = {" << join_names(row) << "}\n";
  out << "tea carrier: " << join_names(j["tea"]) << "\n";
  out << "isomorphic: " << (t.certificate.isomorphic ? "true" : "false") << "\n";
  if (!t.certificate.isomorphic) out << "failure: " << t.certificate.failure << "\n";
  out << "mapping:\n";
  for (Element x = 0; x < t.certificate.mapping.size(); ++x) {
    out << "  " << e.name(x) << " -> " << pair_label(t.tea, t.certificate.mapping[x]) << "\n";
  }
  const auto& r = t.restricted;
  out << "restricted to B(E): " << join_names(j["restricted"]["compatibility_center"]) << "\n";
  out << "restricted tea carrier: " << join_names(j["restricted"]["tea"]) << "\n";
  out << "restricted isomorphic: " << (r.certificate.isomorphic ? "true" : "false") << "\n";
  if (!r.certificate.isomorphic) out << "restricted failure: " << r.certificate.failure << "\n";
  return out.str();
}

json laws_json(const EffectAlgebra& e, const std::vector<LawReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json item = {{"id", r.id},
                 {"statement", r.statement},
                 {"verdict", std::string(verdict_label(r.verdict))},
                 {"instances", r.instances}};
    if (!r.witness.empty()) item["witness"] = names_of(e, r.witness);
    if (!r.detail.empty()) item["detail"] = r.detail;
    if (!r.notes.empty()) item["notes"] = r.notes;
    out.push_back(item);
  }
  return out;
}

std::string laws_text(const EffectAlgebra& e, const std::vector<LawReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << " " << verdict_label(r.verdict) << " (" << r.instances << " instances) " << r.statement << "\n";
    if (!r.witness.empty()) out << "    witness: " << join_names(names_of(e, r.witness)) << "\n";
    if (!r.detail.empty()) out << "    " << r.detail << "\n";
    for (const auto& note : r.notes) out << "    note: " << note << "\n";
  }
  return out.str();
}

}  // namespace eat
