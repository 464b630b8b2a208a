#include <random>

#include <gtest/gtest.h>

#include "nbt/conjugacy.hpp"
#include "nbt/families.hpp"

using namespace nbt;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, w);
}

/// Shortest c with c^-1 x c = y among words of length <= len, by brute force.
bool brute_conjugate(const BraidWord& x, const BraidWord& y, int len) {
  const int n = x.strands();
  std::vector<BraidWord> layer{BraidWord(n)};
  for (int d = 0; d <= len; ++d) {
    std::vector<BraidWord> next;
    for (const auto& c : layer) {
      if (words_equal(conjugate(x, c), y)) return true;
      for (int i = 1; i < n; ++i)
        for (int s : {1, -1}) next.push_back(c * BraidWord(n, {s * i}));
    }
    layer.swap(next);
  }
  return false;
}

}  // namespace

TEST(Conjugacy, Trivial) {
  const BraidWord u(4, {1, -3, 2});
  auto cert = conjugacy_search(u, u);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->conjugator.length(), 0);
}

TEST(Conjugacy, GeneratorsOfB3) {
  const BraidWord s1(3, {1}), s2(3, {2});
  ASSERT_TRUE(brute_conjugate(s1, s2, 2));
  auto cert = conjugacy_search(s1, s2);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(cert->check());
}

TEST(Conjugacy, BetaPrimeAndBeta) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 7}, {3, 10}}) {
    const BraidWord h = beta_conjugator(m, n);
    EXPECT_TRUE(words_equal(conjugate(beta_prime(m, n).word, h.inverse()), beta(m, n).word));
    auto cert = conjugacy_search(beta_prime(m, n).word, beta(m, n).word);
    ASSERT_TRUE(cert) << m << "/" << n;
    EXPECT_TRUE(cert->check());
  }
}

TEST(Conjugacy, RandomConjugatesAreFound) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const BraidWord x = random_word(rng, n, 10), c = random_word(rng, n, 6);
    const BraidWord y = conjugate(x, c);
    auto cert = conjugacy_search(x, y, {5000});
    ASSERT_TRUE(cert) << to_text(x) << " / " << to_text(c);
    EXPECT_TRUE(cert->check());
  }
}

TEST(Conjugacy, RejectsByInvariants) {
  EXPECT_FALSE(conjugacy_search(BraidWord(3, {1}), BraidWord(3, {-1})));
  EXPECT_FALSE(conjugacy_search(BraidWord(4, {1, 2}), BraidWord(4, {1, 3})));
  EXPECT_THROW(conjugacy_search(BraidWord(3, {1}), BraidWord(4, {1})), BraidError);
}

TEST(Conjugacy, CycleTypeSeparates) {
  // same exponent sum, different permutations
  EXPECT_FALSE(conjugacy_search(BraidWord(3, {1, 1}), BraidWord(3, {1, 2})));
}

TEST(SlidingCircuit, ConjugatorIsTracked) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord x = random_word(rng, 5, 14);
    const Conjugate c = slide_to_circuit(left_normal_form(x), BraidWord(5));
    EXPECT_TRUE(words_equal(conjugate(x, c.conjugator), c.form.word()));
  }
}
