#include <gtest/gtest.h>

#include "eat/core.hpp"
#include "eat/eat_format.hpp"
#include "eat/gen.hpp"
#include "oracle.hpp"

namespace {

using namespace eat;

Element el(const EffectAlgebra& e, const char* name) { return e.element(name); }

TEST(Validate, AcceptsC3) {
  const auto v = validate(parse_eat(oracle::kC3));
  ASSERT_TRUE(v.algebra.has_value());
  EXPECT_TRUE(v.report.ok());
}

TEST(Validate, MissingComplementViolatesEiii) {
  SumTable t = parse_eat(oracle::kC3);
  const Element a = *t.find("a");
  t.set(a, a, kUndefined);
  const auto v = validate(t);
  EXPECT_FALSE(v.algebra.has_value());
  EXPECT_TRUE(v.report.violates(Axiom::kOrthosupplement));
}

TEST(Validate, UnitSumViolatesEivWithWitness) {
  SumTable t = parse_eat(oracle::kC3);
  const Element a = *t.find("a");
  t.set_symmetric(t.unit, a, a);
  const auto v = validate(t);
  ASSERT_TRUE(v.report.violates(Axiom::kZeroOne));
  bool found = false;
  for (const auto& viol : v.report.violations) {
    if (viol.axiom == Axiom::kZeroOne && !viol.witness.empty() && viol.witness.back() == a) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Validate, AsymmetricCellViolatesEi) {
  SumTable t = parse_eat(oracle::kB4);
  t.set(*t.find("p"), *t.find("q"), kUndefined);
  EXPECT_TRUE(validate(t).report.violates(Axiom::kCommutativity));
}

TEST(Validate, StructuralProblemsReported) {
  SumTable t(std::vector<std::string>{"0", "1"}, 0, 0);
  const auto v = validate(t);
  EXPECT_FALSE(v.algebra.has_value());
  EXPECT_FALSE(v.report.structural.empty());
}

TEST(Validate, FromTableThrowsInvalidAlgebra) {
  SumTable t = parse_eat(oracle::kC3);
  t.set(1, 1, kUndefined);
  EXPECT_THROW(EffectAlgebra::from_table(t), InvalidAlgebra);
}

TEST(Order, C3IsAChain) {
  const auto e = oracle::load(oracle::kC3);
  EXPECT_TRUE(e.less(el(e, "0"), el(e, "a")));
  EXPECT_TRUE(e.less(el(e, "a"), el(e, "1")));
  EXPECT_EQ(*e.ominus(el(e, "1"), el(e, "a")), el(e, "a"));
}

TEST(Order, HSAtomsIncomparable) {
  const auto e = oracle::load(oracle::kHS);
  const Element a = el(e, "a"), b = el(e, "b");
  EXPECT_FALSE(e.leq(a, b));
  EXPECT_FALSE(e.leq(b, a));
  EXPECT_TRUE(e.less(e.zero(), a) && e.less(a, e.unit()));
  EXPECT_FALSE(e.ominus(a, b).has_value());
}

TEST(Order, MatchesNaiveOracleOnSuite) {
  for (const char* spec : {"chain:6", "boolean:3", "mo:3", "product(chain:3,chain:3)", "hsum(chain:4,boolean:2)"}) {
    const auto e = generate(spec);
    oracle::Naive o{e.table()};
    for (Element x = 0; x < e.size(); ++x) {
      EXPECT_EQ(e.complement(x), o.complement(x)) << spec;
      for (Element y = 0; y < e.size(); ++y) {
        ASSERT_EQ(e.leq(x, y), o.leq(x, y)) << spec << " " << x << " " << y;
        if (o.leq(x, y)) {
          EXPECT_EQ(*e.ominus(y, x), o.ominus(y, x));
        }
      }
    }
  }
}

TEST(OrthoSum, C3Examples) {
  const auto e = oracle::load(oracle::kC3);
  const Element a = el(e, "a");
  const std::vector<Element> two{a, a}, three{a, a, a}, none;
  EXPECT_EQ(ortho_sum(e, two), std::optional<Element>(e.unit()));
  EXPECT_FALSE(ortho_sum(e, three).has_value());
  EXPECT_EQ(ortho_sum(e, none), std::optional<Element>(e.zero()));
}

TEST(Isotropic, Indices) {
  const auto c5 = oracle::load(oracle::kC5);
  EXPECT_EQ(isotropic_index(c5, el(c5, "a")), 4u);
  EXPECT_EQ(isotropic_index(c5, el(c5, "2a")), 2u);
  EXPECT_EQ(isotropic_index(c5, el(c5, "3a")), 1u);
  EXPECT_EQ(isotropic_index(c5, c5.unit()), 1u);
  EXPECT_THROW(isotropic_index(c5, c5.zero()), std::invalid_argument);
  EXPECT_EQ(c5.ord(c5.zero()), kUnboundedOrd);
  EXPECT_TRUE(c5.isotropic().archimedean);
  EXPECT_EQ(multiple(c5, el(c5, "a"), 3), std::optional<Element>(el(c5, "3a")));
  EXPECT_EQ(multiple(c5, el(c5, "a"), 0), std::optional<Element>(c5.zero()));
  EXPECT_FALSE(multiple(c5, el(c5, "a"), 5).has_value());
}

TEST(Atoms, FixtureAtoms) {
  const auto c3 = oracle::load(oracle::kC3);
  const auto b4 = oracle::load(oracle::kB4);
  const auto hs = oracle::load(oracle::kHS);
  EXPECT_EQ(atoms(c3).atoms, (std::vector<Element>{el(c3, "a")}));
  EXPECT_EQ(atoms(b4).atoms, (std::vector<Element>{el(b4, "p"), el(b4, "q")}));
  EXPECT_EQ(atoms(hs).atoms, (std::vector<Element>{el(hs, "a"), el(hs, "b")}));
  EXPECT_TRUE(atoms(hs).is_atomic);
}

TEST(Atoms, MatchNaiveOracle) {
  for (const char* spec : {"chain:7", "boolean:4", "mo:3", "product(chain:4,boolean:2)"}) {
    const auto e = generate(spec);
    EXPECT_EQ(e.atom_set().atoms, oracle::Naive{e.table()}.atoms()) << spec;
  }
}

TEST(Elements, UnknownNameThrows) {
  const auto e = oracle::load(oracle::kC3);
  EXPECT_THROW(e.element("zz"), std::out_of_range);
  EXPECT_FALSE(e.find("zz").has_value());
}

}  // namespace
