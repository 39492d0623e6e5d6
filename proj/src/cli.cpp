#include "eat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "eat/eat_format.hpp"
#include "eat/gen.hpp"
#include "eat/laws.hpp"
#include "eat/report.hpp"

namespace eat {

namespace {

// Thrown after a diagnostic has been written; carries the exit code.
struct Exit {
  int code;
};

struct Options {
  std::string file;
  std::string format = "text";
  std::string law;
  std::string spec;
  std::string output;
  std::size_t max_order = 0;
  std::string emit_dir;
};

SumTable load_table(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot read file\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_eat(buf.str());
  } catch (const EatParseError& e) {
    for (const auto& d : e.diagnostics()) err << format_diagnostic(d, path) << "\n";
    throw Exit{kExitUsage};
  }
}

// Validates or reports violations and exits with the domain code.
EffectAlgebra load_algebra(const Options& o, std::ostream& out, std::ostream& err) {
  const SumTable table = load_table(o.file, err);
  ValidationOutcome v = validate(table);
  if (!v.algebra) {
    if (o.format == "json") {
      out << violations_json(table, v.report).dump(2) << "\n";
    } else {
      err << violations_text(table, v.report);
    }
    throw Exit{kExitDomain};
  }
  return std::move(*v.algebra);
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const SumTable table = load_table(o.file, err);
  const ValidationOutcome v = validate(table);
  if (!v.algebra) {
    out << violations_text(table, v.report);
    return kExitDomain;
  }
  out << "valid: " << table.size() << " elements, all four axioms hold\n";
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const EffectAlgebra e = load_algebra(o, out, err);
  if (o.format == "json") {
    out << analysis_json(e).dump(2) << "\n";
  } else {
    out << analysis_text(e);
  }
  return kExitOk;
}

int cmd_triple(const Options& o, std::ostream& out, std::ostream& err) {
  EffectAlgebra e = load_algebra(o, out, err);
  const auto check = is_lattice(e);
  if (!check.is_lattice) {
    err << "not a lattice effect algebra: " << e.name(check.witness->first) << " and "
        << e.name(check.witness->second) << " lack a meet or join\n";
    return kExitDomain;
  }
  const LatticeEffectAlgebra l(std::move(e));
  const TripleOutcome t = run_triple(l);
  if (o.format == "json") {
    out << triple_json(l, t).dump(2) << "\n";
  } else {
    out << triple_text(l, t);
  }
  return t.certificate.isomorphic && t.restricted.certificate.isomorphic ? kExitOk : kExitDomain;
}

int cmd_laws(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.law.empty()) {
    bool known = false;
    for (const auto& info : law_registry()) known = known || info.id == o.law;
    if (!known) {
      err << "error: unknown law '" << o.law << "' (expected L1..L" << law_registry().size() << ")\n";
      return kExitUsage;
    }
  }
  const EffectAlgebra e = load_algebra(o, out, err);
  std::vector<LawReport> reports;
  if (o.law.empty()) {
    reports = check_all(e);
  } else {
    reports.push_back(check_law(e, o.law));
  }
  if (o.format == "json") {
    out << laws_json(e, reports).dump(2) << "\n";
  } else {
    out << laws_text(e, reports);
  }
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kFail) return kExitDomain;
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = serialize_eat(generate(o.spec));
  } catch (const GenSpecError& e) {
    err << "error: bad generator spec at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!(file << text)) {
    err << o.output << ": error: cannot write file\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<EnumeratedAlgebra> classes;
  try {
    classes = enumerate_small(o.max_order);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<std::size_t> total(o.max_order + 1), lattices(o.max_order + 1);
  for (const auto& c : classes) {
    ++total[c.algebra.size()];
    if (c.is_lattice) ++lattices[c.algebra.size()];
  }
  for (std::size_t n = 2; n <= o.max_order; ++n) {
    out << "order " << n << ": " << total[n] << " classes, " << lattices[n] << " lattice\n";
  }
  if (o.emit_dir.empty()) return kExitOk;
  std::error_code ec;
  std::filesystem::create_directories(o.emit_dir, ec);
  if (ec) {
    err << o.emit_dir << ": error: " << ec.message() << "\n";
    return kExitUsage;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    char name[64];
    std::snprintf(name, sizeof name, "order%zu_class%03zu.eat", c.algebra.size(), i + 1);
    std::ofstream file(std::filesystem::path(o.emit_dir) / name, std::ios::binary);
    file << "# " << (c.is_lattice ? "lattice" : "non-lattice") << "\n" << serialize_eat(c.algebra);
    if (!file) {
      err << o.emit_dir << "/" << name << ": error: cannot write file\n";
      return kExitUsage;
    }
  }
  out << "wrote " << classes.size() << " files to " << o.emit_dir << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice effect algebra toolkit", "eatool"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* validate_cmd = app.add_subcommand("validate", "Check the effect algebra axioms");
  validate_cmd->add_option("file", o.file, "EAT file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Order, atoms, sharp and meager parts, blocks, centers");
  analyze_cmd->add_option("file", o.file, "EAT file")->required();
  analyze_cmd->add_option("--format", o.format, "text or json")->check(formats);

  auto* triple_cmd = app.add_subcommand("triple", "Extract the triple and rebuild the algebra from it");
  triple_cmd->add_option("file", o.file, "EAT file")->required();
  triple_cmd->add_option("--format", o.format, "text or json")->check(formats);

  auto* laws_cmd = app.add_subcommand("laws", "Run the law registry");
  laws_cmd->add_option("file", o.file, "EAT file")->required();
  laws_cmd->add_option("--law", o.law, "single law id, e.g. L7");
  laws_cmd->add_option("--format", o.format, "text or json")->check(formats);

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated algebra");
  gen_cmd->add_option("spec", o.spec, "e.g. chain:3, product(chain:3,boolean:1)")->required();
  gen_cmd->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate small effect algebras up to isomorphism");
  enum_cmd->add_option("--max-order", o.max_order, "largest carrier size")->required();
  enum_cmd->add_option("--emit", o.emit_dir, "directory for one EAT file per class");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out, err);
    if (*analyze_cmd) return cmd_analyze(o, out, err);
    if (*triple_cmd) return cmd_triple(o, out, err);
    if (*laws_cmd) return cmd_laws(o, out, err);
    if (*gen_cmd) return cmd_gen(o, out, err);
    return cmd_enumerate(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace eat
