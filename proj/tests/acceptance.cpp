// Acceptance run: one PASS/FAIL line per criterion over the generator suite
// and the enumerated small algebras. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eat/cli.hpp"
#include "eat/decomp.hpp"
#include "eat/eat_format.hpp"
#include "eat/gen.hpp"
#include "eat/laws.hpp"
#include "eat/substructures.hpp"
#include "eat/triple.hpp"
#include "oracle.hpp"

namespace {

using namespace eat;
using Clock = std::chrono::steady_clock;

struct Instance {
  std::string label;
  EffectAlgebra algebra;
};

std::vector<std::string> suite_specs() {
  std::vector<std::string> specs;
  for (int n = 2; n <= 16; ++n) specs.push_back("chain:" + std::to_string(n));
  for (int k = 1; k <= 4; ++k) specs.push_back("boolean:" + std::to_string(k));
  for (int n = 1; n <= 3; ++n) specs.push_back("mo:" + std::to_string(n));
  for (const char* s : {
           "product(chain:2,chain:2)",       "product(chain:3,chain:2)",
           "product(chain:3,chain:3)",       "product(chain:4,chain:3)",
           "product(chain:5,chain:4)",       "product(chain:8,chain:8)",
           "product(chain:4,chain:4,chain:4)", "product(chain:3,boolean:2)",
           "product(chain:4,boolean:3)",     "product(mo:2,chain:2)",
           "product(mo:2,chain:3)",          "product(mo:3,chain:2)",
           "product(mo:3,mo:3)",             "product(mo:2,mo:2)",
           "product(hsum(chain:3,chain:3),chain:3)", "product(hsum(chain:3,chain:4),boolean:2)",
           "product(boolean:3,boolean:3)",   "hsum(chain:3,chain:3)",
           "hsum(chain:3,chain:4)",          "hsum(chain:5,boolean:2)",
           "hsum(chain:4,chain:4,chain:4)",  "hsum(boolean:3,boolean:3)",
           "hsum(boolean:4,chain:16)",       "hsum(product(chain:3,chain:2),chain:5)",
           "hsum(product(chain:3,chain:3),mo:2)", "hsum(product(chain:4,chain:4),product(chain:3,chain:3))",
           "hsum(chain:16,chain:16,chain:16,chain:16)", "hsum(mo:3,chain:6)",
       }) {
    specs.emplace_back(s);
  }
  return specs;
}

struct Line {
  bool pass;
  std::string detail;
};

void report(int id, const char* title, const Line& line, double seconds) {
  std::printf("criterion %d %s: %s (%.2f s) %s\n", id, line.pass ? "PASS" : "FAIL", title, seconds,
              line.detail.c_str());
  std::fflush(stdout);
}

template <typename F>
bool run(int id, const char* title, F&& body) {
  const auto start = Clock::now();
  Line line;
  try {
    line = body();
  } catch (const std::exception& e) {
    line = {false, std::string("exception: ") + e.what()};
  }
  report(id, title, line, std::chrono::duration<double>(Clock::now() - start).count());
  return line.pass;
}

// Name of a small standard algebra isomorphic to e, if any.
std::string generate_match(const EffectAlgebra& e) {
  for (const char* spec : {"chain:2", "chain:3", "chain:4", "chain:5", "boolean:2", "hsum(chain:3,chain:3)",
                           "hsum(chain:3,chain:3,chain:3)", "hsum(chain:4,chain:3)", "hsum(chain:3,boolean:2)"}) {
    const auto candidate = generate(spec);
    if (candidate.size() == e.size() && are_isomorphic(candidate, e)) return spec;
  }
  return "";
}

// Criterion 1: the suite validates, and single-cell mutations are caught by
// validate or by a law failure.
Line axiom_suite(const std::vector<Instance>& suite, std::vector<std::string>& survivors) {
  constexpr int kMutations = 100;
  std::mt19937 rng(20240601);
  std::size_t caught = 0, total = 0;
  std::size_t valid = 0;
  for (const auto& inst : suite) {
    if (validate(inst.algebra.table()).algebra) ++valid;
    const auto n = static_cast<Element>(inst.algebra.size());
    for (int k = 0; k < kMutations; ++k) {
      SumTable t = inst.algebra.table();
      const Element x = rng() % n, y = rng() % n;
      const Element old = t.at(x, y);
      Element v;
      do {
        v = rng() % (n + 1);
        v = v == n ? kUndefined : v;
      } while (v == old);
      t.set(x, y, v);
      ++total;
      auto outcome = validate(t);
      if (!outcome.algebra) {
        ++caught;
        continue;
      }
      bool law_failure = false;
      for (const auto& r : check_all(*outcome.algebra)) law_failure = law_failure || r.verdict == Verdict::kFail;
      if (law_failure) {
        ++caught;
        continue;
      }
      const auto& e = *outcome.algebra;
      const bool literal = oracle::Naive{t}.valid_algebra();
      const auto iso = generate_match(e);
      std::ostringstream s;
      s << inst.label << ": cell (" << e.name(x) << "," << e.name(y) << ") "
        << (old == kUndefined ? std::string("undefined") : e.name(old)) << " -> "
        << (v == kUndefined ? std::string("undefined") : e.name(v)) << " gives a valid "
        << (is_lattice(e).is_lattice ? "lattice" : "non-lattice") << " effect algebra"
        << (literal ? " (confirmed by literal axiom check" : " (REJECTED by literal axiom check")
        << (iso.empty() ? ")" : ", isomorphic to " + iso + ")");
      survivors.push_back(s.str());
    }
  }
  std::ostringstream d;
  d << valid << "/" << suite.size() << " instances valid; " << caught << "/" << total
    << " mutations caught, " << survivors.size() << " survivors";
  return {valid == suite.size() && caught == total, d.str()};
}

Line enumeration_oracle() {
  const auto first = enumerate_small(5);
  for (const auto& c : first) {
    if (!validate(c.algebra.table()).algebra) return {false, "emitted algebra fails validate"};
  }
  const std::string a = canonical_stream(first);
  const std::string b = canonical_stream(enumerate_small(5));
  if (a != b) return {false, "canonical streams differ between runs"};
  return {true, std::to_string(first.size()) + " classes, stream of " + std::to_string(a.size()) + " bytes"};
}

Line triple_reconstruction(const std::vector<LatticeEffectAlgebra>& lattices) {
  for (const auto& l : lattices) {
    const auto x = extract_triple(l);
    const auto tea = build_tea(x.triple);
    const auto cert = verify_iso(l, x, tea);
    if (!cert.isomorphic) return {false, "not isomorphic: " + cert.failure};
  }
  return {true, std::to_string(lattices.size()) + " lattice algebras reconstructed"};
}

Line restricted_reconstruction(const std::vector<LatticeEffectAlgebra>& lattices) {
  for (const auto& l : lattices) {
    const auto r = build_tea_restricted(l);
    if (!r.certificate.isomorphic) return {false, "restricted: " + r.certificate.failure};
    if (!are_isomorphic(r.compatibility_center.algebra, r.tea.algebra)) {
      return {false, "restricted Tea not isomorphic to B(E) by search"};
    }
  }
  return {true, std::to_string(lattices.size()) + " algebras"};
}

Line bde_uniqueness(const std::vector<LatticeEffectAlgebra>& lattices) {
  std::size_t elements = 0;
  for (const auto& l : lattices) {
    const Decomposer d(l);
    const auto sharp = members(d.sharp().members);
    const auto meager = members(d.meager());
    for (Element x = 0; x < l.size(); ++x) {
      std::size_t found = 0;
      std::pair<Element, Element> pair{};
      for (Element s : sharp) {
        for (Element m : meager) {
          if (l.sum(s, m) == std::optional<Element>(x)) {
            ++found;
            pair = {s, m};
          }
        }
      }
      const auto below = d.envelope(x).below;
      if (found != 1 || pair.first != below || pair.second != *l.ominus(x, below)) {
        return {false, "element " + l.name(x) + ": " + std::to_string(found) + " decompositions"};
      }
      ++elements;
    }
  }
  return {true, std::to_string(elements) + " elements"};
}

Line envelope_cross_check(const std::vector<LatticeEffectAlgebra>& lattices) {
  std::size_t elements = 0;
  for (const auto& l : lattices) {
    const Decomposer d(l);
    for (Element x = 0; x < l.size(); ++x) {
      const auto hat = d.hat_via_atoms(x);
      const auto above = d.envelope(x).above;
      if (hat.hat != above) return {false, "hat mismatch at " + l.name(x)};
      if (l.ominus(above, x) != std::optional<Element>(hat.gap)) return {false, "gap mismatch at " + l.name(x)};
      ++elements;
    }
  }
  return {true, std::to_string(elements) + " elements"};
}

Line law_registry_run(const std::vector<LatticeEffectAlgebra>& lattices) {
  std::size_t instances = 0;
  for (const auto& l : lattices) {
    for (const auto& r : check_all(l)) {
      if (r.verdict != Verdict::kPass) {
        return {false, r.id + " " + std::string(verdict_label(r.verdict)) + ": " + r.detail};
      }
      instances += r.instances;
    }
  }
  return {true, std::to_string(instances) + " law instances"};
}

Line identity_battery(const std::vector<LatticeEffectAlgebra>& lattices) {
  for (const auto& l : lattices) {
    const Decomposer d(l);
    const auto bs = blocks(l);
    const ElementSet b = compatibility_center(l, bs);
    const ElementSet c = center(l).members;
    const ElementSet& sh = d.sharp().members;
    if (c != (b & sh)) return {false, "C(E) != B(E) n Sh(E)"};
    ElementSet cover(l.size()), meet = full_set(l.size());
    for (const auto& blk : bs.blocks) {
      cover |= blk;
      meet &= blk;
    }
    if (cover != full_set(l.size())) return {false, "blocks do not cover E"};
    if (meet != b || bs.intersection != b) return {false, "blocks do not meet in B(E)"};
    for (Element m : members(d.meager())) {
      for (Element y = 0; y < l.size(); ++y) {
        if (l.leq(y, m) && !d.is_meager(y)) return {false, "Mea(E) is not a down-set"};
      }
    }
    for (const ElementSet* s : {&sh, &b, &c}) {
      const auto check = is_sub_lattice_effect_algebra(l, *s);
      if (!check.holds) return {false, "sub-lattice effect algebra check: " + check.reason};
    }
  }
  return {true, std::to_string(lattices.size()) + " algebras"};
}

Line cli_contract(const std::vector<Instance>& suite) {
  for (const auto& inst : suite) {
    const SumTable back = parse_eat(serialize_eat(inst.algebra));
    if (!(back == inst.algebra.table())) return {false, "round trip differs for " + inst.label};
  }
  const auto dir = std::filesystem::temp_directory_path() / "eat_acceptance_cli";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string c3 = write("c3.eat", serialize_eat(generate("chain:3")));
  const std::string hs = write("hs.eat", serialize_eat(generate("hsum(chain:3,chain:3)")));
  const std::string broken = write("broken.eat", serialize_eat(generate("chain:3")) + "sum 1 a a\n");
  const std::string garbled = write("garbled.eat", "elements 0 1\nzero 0\n");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"validate", c3}, kExitOk},
      {{"validate", broken}, kExitDomain},
      {{"validate", garbled}, kExitUsage},
      {{"analyze", c3, "--format", "json"}, kExitOk},
      {{"analyze", broken}, kExitDomain},
      {{"triple", hs}, kExitOk},
      {{"laws", hs}, kExitOk},
      {{"laws", hs, "--law", "L99"}, kExitUsage},
      {{"gen", "chain:3", "-o", (dir / "g.eat").string()}, kExitOk},
      {{"gen", "chain"}, kExitUsage},
      {{"enumerate", "--max-order", "4", "--emit", (dir / "enum").string()}, kExitOk},
      {{"enumerate", "--max-order", "99"}, kExitUsage},
      {{"nonsense"}, kExitUsage},
  };
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int code = run_cli(c.args, out, err);
    if (code != c.code) {
      std::string cmd;
      for (const auto& a : c.args) cmd += " " + a;
      return {false, "exit " + std::to_string(code) + " for" + cmd};
    }
  }
  std::filesystem::remove_all(dir);
  return {true, std::to_string(suite.size()) + " round trips, " + std::to_string(cases.size()) + " exit codes"};
}

}  // namespace

int main() {
  std::vector<Instance> suite;
  for (const auto& spec : suite_specs()) suite.push_back({spec, generate(spec)});

  std::vector<LatticeEffectAlgebra> lattices;
  for (const auto& inst : suite) {
    if (is_lattice(inst.algebra).is_lattice) lattices.emplace_back(inst.algebra);
  }
  const std::size_t suite_lattices = lattices.size();
  for (const auto& c : enumerate_small(5)) {
    if (c.is_lattice) lattices.emplace_back(c.algebra);
  }
  std::printf("suite: %zu generated instances (%zu lattices) plus %zu enumerated lattices\n", suite.size(),
              suite_lattices, lattices.size() - suite_lattices);

  bool ok = true;
  std::vector<std::string> survivors;
  ok &= run(1, "axiom suite and mutation detection", [&] { return axiom_suite(suite, survivors); });
  for (std::size_t i = 0; i < survivors.size(); ++i) std::printf("    survivor: %s\n", survivors[i].c_str());
  ok &= run(2, "enumeration oracle", [&] { return enumeration_oracle(); });
  ok &= run(3, "triple reconstruction", [&] { return triple_reconstruction(lattices); });
  ok &= run(4, "restricted reconstruction over B(E)", [&] { return restricted_reconstruction(lattices); });
  ok &= run(5, "unique sharp plus meager decomposition", [&] { return bde_uniqueness(lattices); });
  ok &= run(6, "envelope cross-check", [&] { return envelope_cross_check(lattices); });
  ok &= run(7, "law registry", [&] { return law_registry_run(lattices); });
  ok &= run(8, "identity battery", [&] { return identity_battery(lattices); });
  ok &= run(9, "CLI contract", [&] { return cli_contract(suite); });
  return ok ? 0 : 1;
}
