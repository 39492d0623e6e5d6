#include "eat/eat_format.hpp"

#include <map>
#include <optional>
#include <unordered_map>

namespace eat {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct Declaration {
  std::size_t line;
  std::vector<Token> tokens;
};

struct SumCell {
  Element value;
  std::size_t line;
};

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view source_name) {
  return std::string(source_name) + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) +
         ": error: " + d.message;
}

EatParseError::EatParseError(std::vector<ParseDiagnostic> diagnostics)
    : std::invalid_argument(diagnostics.empty() ? std::string("parse error")
                                                : format_diagnostic(diagnostics.front(), "input")),
      diagnostics_(std::move(diagnostics)) {}

SumTable parse_eat(std::string_view text) {
  std::vector<ParseDiagnostic> errors;
  std::optional<Declaration> elements, zero, unit;
  std::vector<Declaration> sums;
  std::size_t line_count = 0;

  // Pass 1: split into declarations.
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_count;
    pos = end + 1;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    Declaration decl{line_count, tokens};
    const std::string_view keyword = tokens.front().text;
    auto single = [&](std::optional<Declaration>& slot, std::size_t arity) {
      if (slot) {
        errors.push_back({line_count, tokens.front().column,
                          "duplicate " + std::string(keyword) + " declaration (first on line " +
                              std::to_string(slot->line) + ")"});
      } else if (arity != 0 && tokens.size() != arity + 1) {
        errors.push_back({line_count, tokens.front().column,
                          std::string(keyword) + " takes exactly " + std::to_string(arity) + " name"});
      } else if (tokens.size() < 2) {
        errors.push_back({line_count, tokens.front().column, "elements needs at least one name"});
      } else {
        slot = decl;
      }
    };
    if (keyword == "elements") {
      single(elements, 0);
    } else if (keyword == "zero") {
      single(zero, 1);
    } else if (keyword == "unit") {
      single(unit, 1);
    } else if (keyword == "sum") {
      if (tokens.size() != 4) {
        errors.push_back({line_count, tokens.front().column, "sum takes exactly 3 names"});
      } else {
        sums.push_back(std::move(decl));
      }
    } else {
      errors.push_back({line_count, tokens.front().column, "unknown keyword '" + std::string(keyword) + "'"});
    }
    if (end == text.size()) break;
  }

  if (!text.empty() && text.back() == '\n') --line_count;
  const std::size_t last = std::max<std::size_t>(line_count, 1);
  if (!elements) errors.push_back({last, 1, "missing elements declaration"});
  if (!zero) errors.push_back({last, 1, "missing zero declaration"});
  if (!unit) errors.push_back({last, 1, "missing unit declaration"});
  if (!elements) throw EatParseError(std::move(errors));

  // Pass 2: resolve names.
  std::vector<std::string> names;
  std::unordered_map<std::string_view, Element> index;
  for (std::size_t i = 1; i < elements->tokens.size(); ++i) {
    const Token& t = elements->tokens[i];
    if (!index.emplace(t.text, static_cast<Element>(names.size())).second) {
      errors.push_back({elements->line, t.column, "duplicate element name '" + std::string(t.text) + "'"});
      continue;
    }
    names.emplace_back(t.text);
  }
  auto resolve = [&](const Declaration& d, std::size_t i) -> std::optional<Element> {
    const Token& t = d.tokens[i];
    auto it = index.find(t.text);
    if (it == index.end()) {
      errors.push_back({d.line, t.column, "unknown element '" + std::string(t.text) + "'"});
      return std::nullopt;
    }
    return it->second;
  };
  std::optional<Element> z = zero ? resolve(*zero, 1) : std::nullopt;
  std::optional<Element> u = unit ? resolve(*unit, 1) : std::nullopt;

  std::map<std::pair<Element, Element>, SumCell> cells;
  for (const auto& d : sums) {
    const auto x = resolve(d, 1);
    const auto y = resolve(d, 2);
    const auto r = resolve(d, 3);
    if (!x || !y || !r) continue;
    for (const auto& key : {std::pair{*x, *y}, std::pair{*y, *x}}) {
      auto [it, inserted] = cells.emplace(key, SumCell{*r, d.line});
      if (!inserted && it->second.value != *r) {
        errors.push_back({d.line, d.tokens[3].column,
                          "sum " + names[*x] + " " + names[*y] + " = " + names[*r] + " conflicts with line " +
                              std::to_string(it->second.line) + " (= " + names[it->second.value] + ")"});
        break;
      }
    }
  }
  if (!errors.empty()) throw EatParseError(std::move(errors));

  SumTable table(std::move(names), *z, *u);
  for (const auto& [key, cell] : cells) table.set(key.first, key.second, cell.value);
  return table;
}

std::string serialize_eat(const SumTable& table) {
  std::string out = "elements";
  for (const auto& name : table.names) out += " " + name;
  out += "\nzero " + table.names[table.zero] + "\nunit " + table.names[table.unit] + "\n";
  const auto n = static_cast<Element>(table.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const Element z = table.at(x, y);
      if (z != kUndefined) out += "sum " + table.names[x] + " " + table.names[y] + " " + table.names[z] + "\n";
    }
  }
  return out;
}

std::string serialize_eat(const EffectAlgebra& e) { return serialize_eat(e.table()); }

}  // namespace eat
