#include <gtest/gtest.h>

#include "eat/decomp.hpp"
#include "eat/gen.hpp"
#include "oracle.hpp"

namespace {

using namespace eat;

TEST(Envelope, Examples) {
  const LatticeEffectAlgebra c3(oracle::load(oracle::kC3)), b4(oracle::load(oracle::kB4));
  const Element a = c3.algebra().element("a");
  const auto env = sharp_envelope(c3, a);
  EXPECT_EQ(env.below, c3.zero());
  EXPECT_EQ(env.above, c3.unit());
  EXPECT_EQ(multiple(c3.algebra(), a, c3.algebra().ord(a)), std::optional<Element>(env.above));
  const Element p = b4.algebra().element("p");
  EXPECT_EQ(sharp_envelope(b4, p).below, p);
  EXPECT_EQ(sharp_envelope(b4, p).above, p);
}

TEST(Decomposition, Examples) {
  const LatticeEffectAlgebra p6(oracle::load(oracle::kP6));
  const auto& e = p6.algebra();
  const auto d = basic_decomposition(p6, e.element("(a,1)"));
  EXPECT_EQ(e.name(d.sharp_part), "(0,1)");
  EXPECT_EQ(e.name(d.meager_part), "(a,0)");
  EXPECT_EQ(d.support.pairs, (std::vector<AtomMultiple>{{e.element("(a,0)"), 1}}));

  const LatticeEffectAlgebra c3(oracle::load(oracle::kC3));
  const auto one = basic_decomposition(c3, c3.unit());
  EXPECT_EQ(one.sharp_part, c3.unit());
  EXPECT_EQ(one.meager_part, c3.zero());
  EXPECT_TRUE(one.support.pairs.empty());

  const LatticeEffectAlgebra hs(oracle::load(oracle::kHS));
  const Element a = hs.algebra().element("a");
  const auto da = basic_decomposition(hs, a);
  EXPECT_EQ(da.sharp_part, hs.zero());
  EXPECT_EQ(da.meager_part, a);
  EXPECT_EQ(da.support.pairs, (std::vector<AtomMultiple>{{a, 1}}));
}

TEST(AtomSupport, Examples) {
  const LatticeEffectAlgebra c5(oracle::load(oracle::kC5)), hs(oracle::load(oracle::kHS));
  const Element a = c5.algebra().element("a");
  EXPECT_EQ(meager_atom_support(c5, c5.algebra().element("3a")).pairs, (std::vector<AtomMultiple>{{a, 3}}));
  EXPECT_EQ(c5.algebra().ord(a), 4u);
  EXPECT_TRUE(meager_atom_support(c5, c5.zero()).pairs.empty());
  const Element b = hs.algebra().element("b");
  EXPECT_EQ(meager_atom_support(hs, b).pairs, (std::vector<AtomMultiple>{{b, 1}}));
  EXPECT_THROW(meager_atom_support(c5, c5.unit()), std::invalid_argument);
}

TEST(HatViaAtoms, Examples) {
  const LatticeEffectAlgebra c3(oracle::load(oracle::kC3)), c5(oracle::load(oracle::kC5)),
      b4(oracle::load(oracle::kB4));
  EXPECT_EQ(hat_via_atoms(c3, c3.algebra().element("a")), c3.unit());
  EXPECT_EQ(hat_via_atoms(c5, c5.algebra().element("3a")), c5.unit());
  const Element p = b4.algebra().element("p");
  EXPECT_EQ(hat_via_atoms(b4, p), p);
}

TEST(Decomposition, MatchesNaiveEnvelopes) {
  for (const char* spec : {"chain:7", "boolean:3", "mo:3", "product(chain:3,chain:4)", "hsum(chain:4,chain:3)",
                           "product(hsum(chain:3,chain:3),chain:2)"}) {
    const LatticeEffectAlgebra l(generate(spec));
    const Decomposer d(l);
    oracle::Naive o{l.algebra().table()};
    for (Element x = 0; x < l.size(); ++x) {
      const auto env = d.envelope(x);
      EXPECT_EQ(env.below, o.lower_envelope(x)) << spec;
      EXPECT_EQ(env.above, o.upper_envelope(x)) << spec;
      const auto dec = d.basic_decomposition(x);
      EXPECT_EQ(l.sum(dec.sharp_part, dec.meager_part), std::optional<Element>(x));
      EXPECT_TRUE(o.meager(dec.meager_part));
      const auto hat = d.hat_via_atoms(x);
      EXPECT_EQ(hat.hat, env.above) << spec;
      EXPECT_EQ(l.sum(x, hat.gap), std::optional<Element>(env.above)) << spec;
    }
  }
}

TEST(Decomposition, MaxMultipleBelow) {
  const LatticeEffectAlgebra c5(oracle::load(oracle::kC5));
  const Decomposer d(c5);
  const Element a = c5.algebra().element("a");
  EXPECT_EQ(d.max_multiple_below(a, c5.algebra().element("2a")), 2u);
  EXPECT_EQ(d.max_multiple_below(a, c5.unit()), 4u);
  EXPECT_EQ(d.max_multiple_below(a, c5.zero()), 0u);
}

}  // namespace
