#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ratpow/word.hpp"
#include "test_support.hpp"

namespace ratpow {
namespace {

using testing::W;

std::set<Word> words(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(W(t));
  return out;
}

// Word with periods k and l built by identifying positions i ~ i+k and i ~ i+l
// and colouring each class at random.
Word word_with_periods(std::mt19937_64& rng, std::size_t len, std::size_t k, std::size_t l,
                       std::size_t sigma) {
  std::vector<std::size_t> parent(len);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < len; ++i) {
    if (i + k < len) parent[find(i)] = find(i + k);
    if (i + l < len) parent[find(i)] = find(i + l);
  }
  std::vector<Letter> colour(len);
  for (auto& c : colour) c = static_cast<Letter>(rng() % sigma);
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = colour[find(i)];
  return Word(std::move(out));
}

TEST(TextCodec, RoundTripsLowercase) {
  EXPECT_EQ(W("abcz").text(), "abcz");
  EXPECT_EQ(W("").size(), 0u);
}

TEST(TextCodec, RejectsNonLowercaseWithColumn) {
  try {
    W("abXb");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(W("ab b"), ParseError);
}

TEST(SmallestPeriod, Examples) {
  EXPECT_EQ(smallest_period(W("aaaa")), 1u);
  EXPECT_EQ(smallest_period(W("abab")), 2u);
  EXPECT_EQ(smallest_period(W("bbab")), testing::brute_period("bbab"));
  EXPECT_EQ(smallest_period(W("bbab")), 3u);
}

TEST(SmallestPeriod, RejectsEmpty) {
  try {
    smallest_period(Word{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty input");
  }
}

TEST(SmallestPeriod, MatchesScanOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 40, 1 + rng() % 3);
    EXPECT_EQ(smallest_period(w), testing::brute_period(w.text())) << w.text();
  }
}

TEST(IsPrimitive, Examples) {
  EXPECT_TRUE(is_primitive(W("ab")));
  EXPECT_FALSE(is_primitive(W("abab")));
  EXPECT_TRUE(is_primitive(W("aba")));
  EXPECT_THROW(is_primitive(Word{}), Error);
}

TEST(PrimitiveRoot, Examples) {
  auto r = primitive_root(W("abab"));
  EXPECT_EQ(r.root, W("ab"));
  EXPECT_EQ(r.exponent, 2u);
  r = primitive_root(W("aaa"));
  EXPECT_EQ(r.root, W("a"));
  EXPECT_EQ(r.exponent, 3u);
  r = primitive_root(W("aba"));
  EXPECT_EQ(r.root, W("aba"));
  EXPECT_EQ(r.exponent, 1u);
  EXPECT_THROW(primitive_root(Word{}), Error);
}

TEST(ConjugacyClass, Examples) {
  EXPECT_EQ(conjugacy_class(W("bbab")), words({"bbab", "babb", "abbb", "bbba"}));
  EXPECT_EQ(conjugacy_class(W("aa")), words({"aa"}));
  EXPECT_EQ(conjugacy_class(W("ab")), words({"ab", "ba"}));
  EXPECT_THROW(conjugacy_class(Word{}), Error);
}

TEST(CanonicalClassKey, Examples) {
  EXPECT_EQ(canonical_class_key(W("bbab")), W("abbb"));
  EXPECT_EQ(canonical_class_key(W("ba")), W("ab"));
  EXPECT_EQ(canonical_class_key(W("a")), W("a"));
  try {
    canonical_class_key(W("abab"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "key requires primitive root");
  }
}

TEST(RationalPowerExpand, Examples) {
  EXPECT_EQ(rational_power_expand(W("bbab"), 9), W("bbabbbabb"));
  EXPECT_EQ(rational_power_expand(W("a"), 4), W("aaaa"));
  EXPECT_EQ(rational_power_expand(W("ab"), 5), W("ababa"));
  EXPECT_THROW(rational_power_expand(Word{}, 3), Error);
}

TEST(ClassFactorsOfOrder, Examples) {
  EXPECT_EQ(class_factors_of_order(W("ab"), 3), words({"aba", "bab"}));
  EXPECT_EQ(class_factors_of_order(W("a"), 2), words({"aa"}));
  EXPECT_EQ(class_factors_of_order(W("ab"), 2), words({"ab", "ba"}));
  try {
    class_factors_of_order(W("ab"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "order below root length");
  }
}

TEST(RationalExponent, RequiresTwiceRoot) {
  EXPECT_EQ(RationalExponent(9, 4).value(), 2.25);
  EXPECT_THROW(RationalExponent(7, 4), Error);
  EXPECT_THROW(RationalExponent(4, 0), Error);
}

TEST(FineWilf, Examples) {
  EXPECT_TRUE(fine_wilf_holds(W("aaaaa"), 2, 3));
  EXPECT_TRUE(fine_wilf_holds(W("ababab"), 2, 4));
}

TEST(FineWilf, RejectsUnmetHypotheses) {
  // Too short: |w| = 6 < 3 + 5 - 1.
  try {
    fine_wilf_holds(W("aabaab"), 3, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "hypotheses not met");
  }
  // Not a period.
  EXPECT_THROW(fine_wilf_holds(W("abcabc"), 2, 3), Error);
}

TEST(FineWilf, GeneratedInstancesAlwaysHold) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 10000) {
    const std::size_t k = 1 + rng() % 9;
    const std::size_t l = 1 + rng() % 9;
    const std::size_t g = std::gcd(k, l);
    const std::size_t len = k + l - g + rng() % 6;
    const Word w = word_with_periods(rng, len, k, l, 2 + rng() % 3);
    ASSERT_TRUE(fine_wilf_holds(w, k, l)) << w.text() << " k=" << k << " l=" << l;
    ++checked;
  }
}

TEST(FineWilf, LengthThresholdIsSharp) {
  // One letter shorter than k + l - gcd admits words without period gcd.
  std::mt19937_64 rng(3);
  bool found_counterexample = false;
  for (int trial = 0; trial < 200 && !found_counterexample; ++trial) {
    const Word w = word_with_periods(rng, 3 + 5 - 1 - 1, 3, 5, 2);
    found_counterexample = !has_period(w.letters(), 1);
  }
  EXPECT_TRUE(found_counterexample);
}

TEST(WordProperties, PeriodDividesIffNotPrimitiveOrFull) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5000; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 24, 1 + rng() % 3);
    const std::size_t p = smallest_period(w);
    EXPECT_EQ(w.size() % p == 0, !is_primitive(w) || p == w.size()) << w.text();
  }
}

TEST(WordProperties, PrimitiveRootRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    Word w = testing::random_word(rng, 1 + rng() % 16, 1 + rng() % 4);
    // Bias towards powers.
    const std::size_t reps = 1 + rng() % 4;
    std::vector<Letter> letters;
    for (std::size_t r = 0; r < reps && letters.size() + w.size() <= 64; ++r) {
      letters.insert(letters.end(), w.begin(), w.end());
    }
    w = Word(std::move(letters));
    const auto root = primitive_root(w);
    ASSERT_TRUE(is_primitive(root.root));
    EXPECT_EQ(rational_power_expand(root.root, root.root.size() * root.exponent), w);
    EXPECT_EQ(conjugacy_class(w).size(), root.root.size());
  }
}

TEST(WordProperties, ExpandIntegerPowerIsConcatenation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word u = testing::random_word(rng, 1 + rng() % 10, 1 + rng() % 4);
    const std::size_t k = 1 + rng() % 5;
    std::string concat;
    for (std::size_t i = 0; i < k; ++i) concat += u.text();
    EXPECT_EQ(rational_power_expand(u, u.size() * k).text(), concat);
  }
}

TEST(WordProperties, CanonicalKeyIsRotationInvariantAndLeast) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 3000) {
    const Word u = testing::random_word(rng, 1 + rng() % 20, 2 + rng() % 3);
    if (!is_primitive(u)) continue;
    const Word key = canonical_class_key(u);
    EXPECT_EQ(key, *conjugacy_class(u).begin());
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_EQ(canonical_class_key(rotate(u, j)), key);
    ++checked;
  }
}

}  // namespace
}  // namespace ratpow
