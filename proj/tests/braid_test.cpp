#include <random>

#include <gtest/gtest.h>

#include "nbt/braid.hpp"
#include "nbt/garside.hpp"

using namespace nbt;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, w);
}

Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

const BraidWord kDelta(10, {6, 5, 4, 3, 9, 8, 8, 9, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 6});

}  // namespace

TEST(BraidWord, RejectsOutOfRangeLetters) {
  EXPECT_THROW(BraidWord(3, {3}), BraidError);
  EXPECT_THROW(BraidWord(3, {0}), BraidError);
  EXPECT_THROW(BraidWord(0), BraidError);
}

TEST(BraidWord, Compose) {
  EXPECT_EQ(compose(BraidWord(2, {1}), BraidWord(2, {1})), BraidWord(2, {1, 1}));
  EXPECT_THROW(compose(BraidWord(2), BraidWord(3)), BraidError);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto u = random_word(rng, 5, 12);
    auto v = random_word(rng, 5, 7);
    EXPECT_EQ(compose(u, v).exponent_sum(), u.exponent_sum() + v.exponent_sum());
    EXPECT_TRUE(is_identity(compose(u, u.inverse())));
  }
}

TEST(Permutation, OfWord) {
  EXPECT_EQ(permutation_of(BraidWord(2, {1})), Permutation({2, 1}));
  auto cyc = cycle_components(kDelta);
  ASSERT_EQ(cyc.size(), 3u);
  EXPECT_EQ(cyc[0], (std::vector<int>{1, 3, 7, 5, 9}));
  EXPECT_EQ(cyc[1], (std::vector<int>{2, 4, 6, 8}));
  EXPECT_EQ(cyc[2], (std::vector<int>{10}));
  EXPECT_EQ(cycle_components(BraidWord(3)).size(), 3u);
}

TEST(Permutation, PositivePermutationBraid) {
  EXPECT_TRUE(positive_permutation_braid(Permutation::identity(4)).empty());
  EXPECT_EQ(positive_permutation_braid(Permutation({2, 1})), BraidWord(2, {1}));
  Permutation pi({2, 4, 5, 3, 1});
  auto w = positive_permutation_braid(pi);
  EXPECT_EQ(w.length(), 6u);
  EXPECT_EQ(permutation_of(w), pi);
}

TEST(Permutation, RoundTripExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    do {
      Permutation p(im);
      auto w = positive_permutation_braid(p);
      ASSERT_EQ(permutation_of(w), p);
      ASSERT_EQ(static_cast<int>(w.length()), p.inversions());
    } while (std::next_permutation(im.begin(), im.end()));
  }
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> nd(7, 60);
    auto p = random_permutation(rng, nd(rng));
    auto w = positive_permutation_braid(p);
    ASSERT_EQ(permutation_of(w), p);
    ASSERT_EQ(static_cast<int>(w.length()), p.inversions());
  }
}

TEST(Twists, DeltaAndTheta) {
  EXPECT_EQ(delta_braid(2), BraidWord(2, {1}));
  EXPECT_EQ(full_twist(2), BraidWord(2, {1, 1}));
  EXPECT_THROW(delta_braid(1), BraidError);
  EXPECT_TRUE(words_equal(full_twist(3), power(BraidWord(3, {1, 2}), 3)));
  EXPECT_TRUE(words_equal(compose(full_twist(5), BraidWord(5, {2})),
                          compose(BraidWord(5, {2}), full_twist(5))));
  for (int n = 2; n <= 12; ++n)
    for (int i = 1; i < n; ++i)
      ASSERT_TRUE(words_equal(full_twist(n) * BraidWord(n, {i}), BraidWord(n, {i}) * full_twist(n)));
}

TEST(Twists, HalfTwistRange) {
  EXPECT_TRUE(half_twist_range(5, 5, 5).empty());
  EXPECT_EQ(half_twist_range(5, 4, 5), BraidWord(5, {4}));
  EXPECT_EQ(half_twist_range(7, 5, 7), BraidWord(7, {5, 6, 5}));
  EXPECT_THROW(half_twist_range(5, 4, 6), BraidError);
}

TEST(Garside, WordProblemBasics) {
  EXPECT_TRUE(words_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  EXPECT_FALSE(words_equal(BraidWord(3, {1}), BraidWord(3, {2})));
  auto nf = left_normal_form(BraidWord(2, {1, -1}));
  EXPECT_EQ(nf.infimum(), 0);
  EXPECT_EQ(nf.canonical_length(), 0);
  EXPECT_THROW(words_equal(BraidWord(2), BraidWord(3)), BraidError);
  auto d = left_normal_form(delta_braid(4));
  EXPECT_EQ(d.infimum(), 1);
  EXPECT_EQ(d.canonical_length(), 0);
}

TEST(Garside, NormalFormIsValidAndRoundTrips) {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 8;
    auto u = random_word(rng, n, 30);
    auto nf = left_normal_form(u);
    ASSERT_TRUE(nf.is_valid());
    ASSERT_TRUE(words_equal(nf.word(), u));
    ASSERT_EQ(left_normal_form(nf.word()), nf);
    auto inv = nf.inverse();
    ASSERT_EQ(inv, left_normal_form(u.inverse()));
  }
}

TEST(Garside, RelatorInsertionKeepsNormalForm) {
  std::mt19937 rng(5);
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + t % 8;
    auto u = random_word(rng, n, 20);
    std::vector<int> w = u.letters();
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<std::size_t> at(0, w.size());
    const int i = gen(rng);
    std::vector<int> ins;
    switch (t % 3) {
      case 0: ins = {i, -i}; break;
      case 1:
        if (i + 1 < n) ins = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
        break;
      default: {
        const int j = gen(rng);
        if (std::abs(i - j) >= 2) ins = {i, j, -i, -j};
      }
    }
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at(rng)), ins.begin(), ins.end());
    ASSERT_EQ(left_normal_form(BraidWord(n, w)), left_normal_form(u));
  }
}

TEST(Conjugate, Basics) {
  EXPECT_EQ(conjugate(BraidWord(3, {1}), BraidWord(3)), BraidWord(3, {1}));
  EXPECT_EQ(conjugate(BraidWord(3, {1}), BraidWord(3, {2})), BraidWord(3, {-2, 1, 2}));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto u = random_word(rng, 6, 15), c = random_word(rng, 6, 9);
    auto v = conjugate(u, c);
    EXPECT_EQ(v.exponent_sum(), u.exponent_sum());
    auto pc = permutation_of(c);
    EXPECT_EQ(permutation_of(v), pc.inverse().then(permutation_of(u)).then(pc));
  }
}

TEST(EraseStrand, Examples) {
  EXPECT_EQ(erase_strand(BraidWord(2, {1, 1}), 2), BraidWord(1));
  EXPECT_EQ(erase_strand(BraidWord(3, {1, 2}), 1), BraidWord(2));
  EXPECT_EQ(erase_strand(BraidWord(3, {2}), 1), BraidWord(2, {1}));
  EXPECT_THROW(erase_strand(BraidWord(3), 4), BraidError);
}

TEST(EraseStrand, CompositionProperty) {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 7;
    auto u = random_word(rng, n, 14), v = random_word(rng, n, 14);
    const int s = 1 + t % n;
    const int mid = permutation_of(u)(s);
    EXPECT_EQ(erase_strand(compose(u, v), s), compose(erase_strand(u, s), erase_strand(v, mid)));
  }
}

TEST(TextFormat, ParseAndPrint) {
  const std::string text = "B10: 6 5 4 3 9 8 8 9 7 6 5 4 3 2 1 8 7 6 5 4 3 2 1 8 6";
  EXPECT_EQ(parse_braid(text), kDelta);
  EXPECT_EQ(to_text(kDelta), text);
  EXPECT_EQ(parse_braid("B3: -2 1"), BraidWord(3, {-2, 1}));
  EXPECT_EQ(parse_braid("B4:"), BraidWord(4));
  EXPECT_THROW(parse_braid("B3: 3"), BraidError);
  EXPECT_THROW(parse_braid("B3 1 2"), BraidError);
  EXPECT_THROW(parse_braid("C3: 1"), BraidError);
  EXPECT_THROW(parse_braid("B3: 1x"), BraidError);
}
