#include <random>

#include <gtest/gtest.h>

#include "nbt/conjugacy.hpp"
#include "nbt/families.hpp"
#include "nbt/freegroup.hpp"
#include "nbt/surgery.hpp"

using namespace nbt;
using R = ExtendedRational;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len, int lo = 1) {
  std::uniform_int_distribution<int> gen(lo, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, w);
}

SurgeredLink gamma_link(int l, int m, std::optional<R> r) {
  const FamilyBraid g = gamma(l, m);
  std::vector<int> rest;
  for (int s = 2; s <= g.word.strands(); ++s) rest.push_back(s);
  return SurgeredLink(g.word, true, {{"fixed", {1}, r}, {"rest", rest, std::nullopt}});
}

}  // namespace

TEST(FreeGroup, ReduceAndInverse) {
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (FreeWord{3}));
  EXPECT_EQ(free_inverse({1, -2, 3}), (FreeWord{-3, 2, -1}));
}

TEST(FreeGroup, ArtinActionIsAHomomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const BraidWord u = random_word(rng, n, 12), v = random_word(rng, n, 12);
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(free_reduce(artin_action(u * v, {i})), free_reduce(artin_action(v, artin_action(u, {i}))));
    // the product x1...xn is fixed
    FreeWord all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    EXPECT_EQ(free_reduce(artin_action(u, all)), all);
  }
}

TEST(Templates, SplitRecoversRandomLassos) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 4, m = 1 + trial % 3;
    const BraidWord v1 = random_word(rng, n - 1, 10).embedded(n, 1);
    const BraidWord v2 = random_word(rng, n - 1, 10).embedded(n, 1);
    const BraidWord u = v1 * left_lasso(n, m) * v2;
    auto tt = match_untwisted(u);
    ASSERT_TRUE(tt) << to_text(u);
    EXPECT_EQ(tt->width, m);
    EXPECT_TRUE(words_equal(twisted_form(*tt, 0), u));
    EXPECT_TRUE(avoids_first(tt->before, 1));
    EXPECT_TRUE(avoids_first(tt->after, 1));
  }
}

TEST(Templates, TwistedFormRoundTrip) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 3, m = 1 + trial % 2, t = 1 + trial % 3;
    TwistTemplate tt{m, random_word(rng, n - 1, 8).embedded(n, 1), random_word(rng, n - 1, 8).embedded(n, 1)};
    const BraidWord big = twisted_form(tt, t);
    EXPECT_EQ(big.strands(), n + t * m);
    auto back = match_twisted(big, m, t);
    ASSERT_TRUE(back);
    EXPECT_TRUE(words_equal(twisted_form(*back, 0), twisted_form(tt, 0)));
  }
}

TEST(Templates, RejectsNonLasso) {
  // the fixed string wraps twice around the next strand
  EXPECT_FALSE(match_untwisted(BraidWord(4, {1, 1, 1, 1})));
  // not a fixed string
  EXPECT_FALSE(match_untwisted(BraidWord(4, {1, 2})));
  // negative loop
  EXPECT_FALSE(match_untwisted(BraidWord(4, {-1, -1, 3})));
}

TEST(Flip, IsAnInvolutionAndConjugatesByDelta) {
  std::mt19937 rng(13);
  for (int n = 2; n <= 7; ++n) {
    const BraidWord u = random_word(rng, n, 15);
    EXPECT_EQ(flip(flip(u)).letters(), u.letters());
    EXPECT_TRUE(words_equal(flip(u), conjugate(u, delta_braid(n))));
  }
}

TEST(SurgeredLink, ValidatesComponents) {
  const BraidWord u(3, {1, 1});
  EXPECT_NO_THROW(SurgeredLink(u, false, {{"a", {1}, std::nullopt}, {"b", {2}, std::nullopt}, {"c", {3}, std::nullopt}}));
  EXPECT_THROW(SurgeredLink(u, false, {{"a", {1, 2}, std::nullopt}}), SurgeryError);
  EXPECT_THROW(SurgeredLink(BraidWord(3, {1}), false, {{"a", {1}, std::nullopt}, {"b", {2, 3}, std::nullopt}}),
               SurgeryError);
  EXPECT_THROW(SurgeredLink(u, false, {{"a", {1}, std::nullopt}, {"a", {2}, std::nullopt}, {"c", {3}, std::nullopt}}),
               SurgeryError);
}

TEST(LinkingNumber, Examples) {
  SurgeredLink hopf(BraidWord(2, {1, 1}), true, {{"a", {1}, std::nullopt}, {"b", {2}, std::nullopt}});
  EXPECT_EQ(hopf.linking_number("a", "b"), 1);
  EXPECT_EQ(hopf.linking_number("a", kAxisName), 1);
  SurgeredLink neg(BraidWord(2, {-1, -1}), false, {{"a", {1}, std::nullopt}, {"b", {2}, std::nullopt}});
  EXPECT_EQ(neg.linking_number("a", "b"), -1);
  EXPECT_THROW(neg.linking_number("a", kAxisName), SurgeryError);
  EXPECT_THROW(neg.linking_number("a", "zz"), SurgeryError);
}

TEST(LinkingNumber, InvariantUnderConjugationAndRelators) {
  std::mt19937 rng(17);
  const FamilyBraid z = zeta_word();
  std::vector<LinkComponent> cs;
  for (const auto& [k, v] : z.roles) cs.push_back({k, v, std::nullopt});
  const SurgeredLink base(z.word, true, cs);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord c = random_word(rng, 11, 10);
    const SurgeredLink moved = base.conjugated(c);
    for (const char* a : {"red", "blue", "black", "green"})
      for (const char* b : {"red", "blue", "black", "green"})
        if (std::string(a) < b) EXPECT_EQ(moved.linking_number(a, b), base.linking_number(a, b)) << a << b;
  }
  // relator insertion: s1 s2 s1 s2^-1 s1^-1 s2^-1 is trivial
  std::vector<int> w = z.word.letters();
  w.insert(w.begin() + 10, {3, 4, 3, -4, -3, -4});
  const SurgeredLink padded(BraidWord(11, w), true, cs);
  EXPECT_EQ(padded.linking_number("red", "black"), 1);
  EXPECT_EQ(padded.linking_number("blue", "black"), base.linking_number("blue", "black"));
}

TEST(TwistAxis, UpdatesBraidAndCoefficients) {
  const SurgeredLink link(BraidWord(3, {1, 2}), true, {{"c", {1, 2, 3}, R(1, 2)}}, R::infinity());
  const SurgeredLink t = link.twist_axis(1);
  EXPECT_TRUE(words_equal(t.braid(), BraidWord(3, {1, 2}) * full_twist(3).inverse()));
  EXPECT_EQ(*t.coefficient("c"), R(1, 2) + R(9));
  EXPECT_EQ(*t.axis_coefficient(), R(1));
  EXPECT_EQ(t.ledger().size(), 1u);
  EXPECT_EQ(link.twist_axis(0).braid().letters(), link.braid().letters());
  const SurgeredLink no_axis(BraidWord(2, {1}), false, {{"c", {1, 2}, std::nullopt}});
  EXPECT_THROW(no_axis.twist_axis(1), SurgeryError);
}

TEST(TwistFixed, WidensTheFirstRibbon) {
  for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}})
    for (int k = 1; k <= 3; ++k) {
      const SurgeredLink link = gamma_link(l, m, R(1, k));
      const SurgeredLink tw = link.twist_fixed("fixed", -k);
      EXPECT_EQ(tw.braid().strands(), link.braid().strands() + k * m);
      EXPECT_EQ(*tw.coefficient("fixed"), R::infinity());
      EXPECT_EQ(tw.strands_of("fixed"), std::vector<int>{1});
      const SurgeredLink gone = tw.erase_component("fixed");
      const BraidWord target = beta(m, (k + 3) * m + l).word;
      if (l == 0) EXPECT_TRUE(words_equal(gone.braid(), target));
      auto cert = conjugacy_search(gone.braid(), target);
      ASSERT_TRUE(cert) << l << "/" << m << " k=" << k;
      EXPECT_TRUE(cert->check());
    }
}

TEST(TwistFixed, RoundTrip) {
  for (auto [l, m] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})
    for (int k = 1; k <= 3; ++k) {
      const SurgeredLink link = gamma_link(l, m, R(2, 7));
      const SurgeredLink back = link.twist_fixed("fixed", -k).twist_fixed("fixed", k);
      EXPECT_TRUE(words_equal(back.braid(), link.braid()));
      EXPECT_EQ(back.coefficient("fixed"), link.coefficient("fixed"));
      EXPECT_EQ(back.strands_of("rest"), link.strands_of("rest"));
    }
}

TEST(TwistFixed, Errors) {
  const SurgeredLink link = gamma_link(0, 1, R(1));
  EXPECT_THROW(link.twist_fixed("rest", -1), SurgeryError);
  const SurgeredLink hopf(BraidWord(3, {1, 1}), true,
                          {{"a", {1}, R(1)}, {"b", {2}, std::nullopt}, {"c", {3}, std::nullopt}});
  EXPECT_THROW(hopf.twist_fixed("a", 1), SurgeryError);  // not in twisted form
  EXPECT_EQ(link.twist_fixed("fixed", 0).braid().letters(), link.braid().letters());
  EXPECT_THROW(link.erase_component("fixed"), SurgeryError);
  EXPECT_THROW(link.with_coefficient("fixed", R(1, 2)).erase_component("fixed"), SurgeryError);
}

TEST(TwistFixed, RightEndUsesTheFlip) {
  const SurgeredLink left = gamma_link(1, 2, R(1, 2));
  const int n = left.braid().strands();
  std::vector<int> rest;
  for (int s = 1; s < n; ++s) rest.push_back(s);
  const SurgeredLink right(flip(left.braid()), true, {{"fixed", {n}, R(1, 2)}, {"rest", rest, std::nullopt}});
  const SurgeredLink a = left.twist_fixed("fixed", -2), b = right.twist_fixed("fixed", -2);
  EXPECT_TRUE(words_equal(flip(a.braid()), b.braid()));
  EXPECT_EQ(b.strands_of("fixed"), std::vector<int>{b.braid().strands()});
  EXPECT_EQ(*b.coefficient("fixed"), R::infinity());
}

TEST(AxisAugmented, LinksEachComponentByItsStrandCount) {
  EXPECT_EQ(axis_augmented_braid(BraidWord(1)).letters(), (std::vector<int>{1, 1}));
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const BraidWord u = random_word(rng, n, 14);
    const BraidWord big = axis_augmented_braid(u);
    ASSERT_EQ(big.strands(), n + 1);
    std::vector<LinkComponent> cs;
    for (auto c : cycle_components(u)) {
      std::sort(c.begin(), c.end());
      cs.push_back({"c" + std::to_string(cs.size()), c, std::nullopt});
    }
    cs.push_back({"axis", {n + 1}, std::nullopt});
    const SurgeredLink link(big, false, cs);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
      EXPECT_EQ(link.linking_number(cs[i].name, "axis"), static_cast<int>(cs[i].strands.size()));
  }
}
