#include <gtest/gtest.h>

#include "eat/gen.hpp"
#include "eat/triple.hpp"
#include "oracle.hpp"

namespace {

using namespace eat;

std::vector<std::string> carrier(const TeaAlgebra& t) { return t.algebra.table().names; }
using Names = std::vector<std::string>;

TEST(Extract, C3) {
  const LatticeEffectAlgebra c3(oracle::load(oracle::kC3));
  const auto x = extract_triple(c3);
  const auto& t = x.triple;
  EXPECT_EQ(t.sharp.table().names, (Names{"0", "1"}));
  EXPECT_EQ(t.meager.names(), (Names{"0", "a"}));
  const Element a = *t.meager.find("a");
  EXPECT_FALSE(t.meager.sum(a, a).has_value());
  EXPECT_EQ(t.h[t.sharp.element("1")].count(), 2u);
  EXPECT_EQ(members(t.h[t.sharp.element("0")]), (std::vector<Element>{t.meager.zero()}));
}

TEST(Extract, B4AndHS) {
  const LatticeEffectAlgebra b4(oracle::load(oracle::kB4)), hs(oracle::load(oracle::kHS));
  const auto xb = extract_triple(b4);
  EXPECT_EQ(xb.triple.sharp.size(), 4u);
  EXPECT_EQ(xb.triple.meager.size(), 1u);
  for (const auto& h : xb.triple.h) EXPECT_EQ(h.count(), 1u);
  const auto xh = extract_triple(hs);
  EXPECT_EQ(xh.triple.meager.names(), (Names{"0", "a", "b"}));
  EXPECT_EQ(xh.triple.h[xh.triple.sharp.unit()].count(), 3u);
}

TEST(Tea, Carriers) {
  const LatticeEffectAlgebra c3(oracle::load(oracle::kC3)), b4(oracle::load(oracle::kB4)),
      hs(oracle::load(oracle::kHS));
  EXPECT_EQ(carrier(build_tea(extract_triple(c3).triple)), (Names{"(0,0)", "(0,a)", "(1,0)"}));
  EXPECT_EQ(carrier(build_tea(extract_triple(hs).triple)), (Names{"(0,0)", "(0,a)", "(0,b)", "(1,0)"}));
  const auto tb = build_tea(extract_triple(b4).triple);
  EXPECT_EQ(tb.algebra.size(), 4u);
  for (const auto& p : tb.pairs) EXPECT_EQ(p.meager, 0u);
}

TEST(Tea, IsomorphicToSource) {
  for (const char* text : {oracle::kC3, oracle::kB4, oracle::kHS, oracle::kP6, oracle::kC5}) {
    const LatticeEffectAlgebra e(oracle::load(text));
    const auto x = extract_triple(e);
    const auto tea = build_tea(x.triple);
    const auto cert = verify_iso(e, x, tea);
    EXPECT_TRUE(cert.isomorphic) << cert.failure;
    // Independent check: a generic isomorphism search.
    EXPECT_TRUE(are_isomorphic(e.algebra(), tea.algebra).has_value());
  }
}

TEST(Tea, VerifyIsoRejectsBadMapping) {
  const LatticeEffectAlgebra hs(oracle::load(oracle::kHS));
  const auto x = extract_triple(hs);
  const auto tea = build_tea(x.triple);
  std::vector<TeaPair> images;
  for (Element e = 0; e < hs.size(); ++e) images.push_back(phi(hs, x, e));
  std::swap(images[0], images[3]);
  EXPECT_FALSE(verify_iso(hs.algebra(), images, tea).isomorphic);
  images[0] = images[3];
  EXPECT_FALSE(verify_iso(hs.algebra(), images, tea).isomorphic);
}

TEST(Tea, MapsAgreeWithHost) {
  for (const char* spec : {"chain:6", "mo:3", "product(chain:3,chain:3)", "hsum(chain:4,chain:3)",
                           "product(hsum(chain:3,chain:3),chain:3)", "hsum(product(chain:3,chain:2),chain:5)"}) {
    const LatticeEffectAlgebra e(generate(spec));
    const auto x = extract_triple(e);
    const TripleCalculus calc(x.triple);
    EXPECT_TRUE(cross_check_maps(e, x, calc).empty()) << spec;
    EXPECT_TRUE(check_sum_existence(e, x, calc).empty()) << spec;
  }
}

TEST(Tea, SumOnC5Pairs) {
  const LatticeEffectAlgebra c5(oracle::load(oracle::kC5));
  const auto x = extract_triple(c5);
  const TripleCalculus calc(x.triple);
  const Element a = *x.triple.meager.find("a");
  const Element a3 = *x.triple.meager.find("3a");
  const Element zero = x.triple.sharp.zero(), one = x.triple.sharp.unit();
  const auto s = tea_sum(calc, {zero, a}, {zero, a3});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (TeaPair{one, x.triple.meager.zero()}));
  EXPECT_FALSE(tea_sum(calc, {one, 0}, {zero, a}).has_value());
}

TEST(Restricted, Examples) {
  const LatticeEffectAlgebra hs(oracle::load(oracle::kHS)), c3(oracle::load(oracle::kC3)),
      b4(oracle::load(oracle::kB4));
  const auto rh = build_tea_restricted(hs);
  EXPECT_TRUE(rh.certificate.isomorphic);
  EXPECT_EQ(rh.tea.algebra.size(), 2u);
  const auto rc = build_tea_restricted(c3);
  EXPECT_TRUE(rc.certificate.isomorphic);
  EXPECT_TRUE(are_isomorphic(rc.tea.algebra, c3.algebra()).has_value());
  const auto rb = build_tea_restricted(b4);
  EXPECT_TRUE(rb.certificate.isomorphic);
  EXPECT_TRUE(are_isomorphic(rb.tea.algebra, b4.algebra()).has_value());
}

TEST(Triple, CalculusRejectsNonLatticeSharpPart) {
  // Sharp part taken from a non-lattice effect algebra cannot be used.
  for (const auto& c : enumerate_small(6)) {
    if (c.is_lattice) continue;
    Triple t{c.algebra, GeneralizedEffectAlgebra({"0"}, 0, {0}), std::vector<ElementSet>(c.algebra.size(), ElementSet(1, 1))};
    EXPECT_THROW(TripleCalculus{t}, std::exception);
  }
}

}  // namespace
