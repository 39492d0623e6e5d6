#include <gtest/gtest.h>

#include "eat/eat_format.hpp"
#include "eat/gen.hpp"
#include "oracle.hpp"

namespace {

using namespace eat;

std::vector<ParseDiagnostic> diagnostics(const std::string& text) {
  try {
    parse_eat(text);
  } catch (const EatParseError& e) {
    return e.diagnostics();
  }
  return {};
}

TEST(Parse, C3Document) {
  const SumTable t = parse_eat(oracle::kC3);
  EXPECT_EQ(t.names, (std::vector<std::string>{"0", "a", "1"}));
  EXPECT_EQ(t.zero, 0u);
  EXPECT_EQ(t.unit, 2u);
  EXPECT_EQ(t.at(1, 1), 2u);
  EXPECT_EQ(t.at(1, 2), kUndefined);
  EXPECT_EQ(t.at(2, 0), 2u);
}

TEST(Parse, CommentsAndBlankLines) {
  const SumTable t = parse_eat("# C3\n\nelements 0 a 1\n  zero 0\nunit 1\n# sums\nsum 0 0 0\nsum a 0 a\nsum 1 0 1\nsum a a 1");
  EXPECT_EQ(t, parse_eat(oracle::kC3));
}

TEST(Parse, MissingUnit) {
  const auto d = diagnostics("elements 0 1\nzero 0\nsum 0 0 0\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].message, "missing unit declaration");
}

TEST(Parse, ConflictCitesBothLines) {
  const auto d = diagnostics("elements 0 a 1\nzero 0\nunit 1\nsum a a 1\nsum a a 0\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].line, 5u);
  EXPECT_NE(d[0].message.find("line 4"), std::string::npos);
  EXPECT_EQ(format_diagnostic(d[0], "x.eat").rfind("x.eat:5:", 0), 0u);
}

TEST(Parse, PositionedErrors) {
  const auto d = diagnostics("elements 0 a 1\nzero 0\nunit 1\nsum a  b 1\nfoo\nunit 1\nelements 0 0\n");
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0].line, 5u);  // unknown keyword
  EXPECT_EQ(d[1].line, 6u);  // duplicate unit
  EXPECT_EQ(d[2].line, 7u);  // duplicate elements
  EXPECT_EQ(d[3].line, 4u);  // unknown element b
  EXPECT_EQ(d[3].column, 8u);
  EXPECT_FALSE(diagnostics("elements 0 1\nzero 0\nunit 1\nsum 0 1\n").empty());
  EXPECT_FALSE(diagnostics("elements 0 0 1\nzero 0\nunit 1\n").empty());
  EXPECT_FALSE(diagnostics("").empty());
}

TEST(Serialize, C3Canonical) {
  EXPECT_EQ(serialize_eat(oracle::load(oracle::kC3)), oracle::kC3);
}

TEST(Serialize, B4Triangle) {
  const std::string text = serialize_eat(generate("boolean:2"));
  EXPECT_NE(text.find("sum p q 1\n"), std::string::npos);
  EXPECT_EQ(text.find("sum q p"), std::string::npos);
  EXPECT_EQ(text.rfind("elements 0 p q 1\n", 0), 0u);
}

TEST(Serialize, RoundTrip) {
  for (const char* spec : {"chain:16", "boolean:4", "mo:3", "product(chain:3,boolean:2)", "hsum(chain:3,chain:3)"}) {
    const auto e = generate(spec);
    const SumTable back = parse_eat(serialize_eat(e));
    EXPECT_EQ(back, e.table()) << spec;
    EXPECT_EQ(serialize_eat(back), serialize_eat(e));
  }
}

}  // namespace
