#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "ratpow/factor_index.hpp"
#include "ratpow/rational_powers.hpp"
#include "test_support.hpp"

namespace ratpow {
namespace {

using testing::W;

std::vector<std::size_t> profile(const std::string& s) {
  const FactorIndex ix(W(s));
  return {ix.complexity().begin(), ix.complexity().end()};
}

std::set<std::string> enumerated_texts(const Word& w) {
  const auto list = enumerate_rational_power_factors(w);
  std::set<std::string> out;
  for (const auto& f : list.factors) out.insert(list.text(f).text());
  return out;
}

TEST(FactorIndex, ComplexityExamples) {
  EXPECT_EQ(profile("abab"), (std::vector<std::size_t>{2, 2, 2, 1}));
  EXPECT_EQ(profile("aaaa"), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(profile("bbab"), (std::vector<std::size_t>{2, 3, 2, 1}));
  for (const char* s : {"abab", "bbab"}) {
    const auto p = profile(s);
    for (std::size_t i = 1; i <= p.size(); ++i) {
      EXPECT_EQ(p[i - 1], testing::brute_factors_of_length(s, i).size()) << s << " i=" << i;
    }
  }
}

TEST(FactorIndex, ContainsExamples) {
  const auto ix = build_index(W("abab"));
  EXPECT_TRUE(contains_factor(ix, W("bab")));
  EXPECT_FALSE(contains_factor(ix, W("bb")));
  EXPECT_FALSE(contains_factor(ix, W("ababa")));
  EXPECT_FALSE(contains_factor(ix, W("c")));
  EXPECT_THROW(contains_factor(ix, Word{}), Error);
}

TEST(FactorIndex, RejectsEmptySource) {
  try {
    FactorIndex ix{Word{}};
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty input");
  }
}

TEST(FactorIndex, DistinctCountOutOfRangeIsZero) {
  const FactorIndex ix(W("abc"));
  EXPECT_EQ(ix.distinct_count(0), 0u);
  EXPECT_EQ(ix.distinct_count(3), 1u);
  EXPECT_EQ(ix.distinct_count(4), 0u);
}

TEST(FactorIndex, MatchesBruteForceOnRandomWords) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t sigma = 1 + rng() % 4;
    const Word w = testing::random_word(rng, 1 + rng() % 30, sigma);
    const FactorIndex ix(w);
    const std::string s = w.text();
    const auto c = ix.complexity();
    ASSERT_EQ(c.size(), s.size());
    EXPECT_EQ(c.back(), 1u);
    EXPECT_EQ(c.front(), w.alphabet_used());
    for (std::size_t i = 1; i <= s.size(); ++i) {
      EXPECT_EQ(c[i - 1], testing::brute_factors_of_length(s, i).size());
      EXPECT_LE(c[i - 1], s.size() - i + 1);
      if (i < s.size()) EXPECT_LE(c[i], sigma * c[i - 1]);
    }
    // Membership: every factor present, random probes agree with std::string::find.
    for (int probe = 0; probe < 40; ++probe) {
      const Word u = testing::random_word(rng, 1 + rng() % 6, sigma);
      EXPECT_EQ(ix.contains(u), s.find(u.text()) != std::string::npos) << s << " / " << u.text();
    }
  }
}

TEST(FactorIndex, LongestFactorPrefixes) {
  const FactorIndex ix(W("abab"));
  const Word text = W("ababbab");
  const auto got = ix.longest_factor_prefixes(text.letters());
  std::vector<std::size_t> want;
  const std::string src = "abab", t = text.text();
  for (std::size_t j = 0; j < t.size(); ++j) {
    std::size_t len = 0;
    while (j + len < t.size() && src.find(t.substr(j, len + 1)) != std::string::npos) ++len;
    want.push_back(len);
  }
  EXPECT_EQ(got, want);
}

TEST(LongestPreviousMatch, MatchesNaiveScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 40, 1 + rng() % 3);
    const auto got = longest_previous_match(w.letters());
    const std::string s = w.text();
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::size_t best = 0;
      for (std::size_t j = 0; j < i; ++j) {
        std::size_t k = 0;
        while (i + k < s.size() && s[j + k] == s[i + k]) ++k;
        best = std::max(best, k);
      }
      EXPECT_EQ(got[i], best) << s << " at " << i;
    }
  }
}

TEST(Enumerate, Examples) {
  const auto aaaa = enumerate_rational_power_factors(W("aaaa"));
  EXPECT_EQ(enumerated_texts(W("aaaa")), (std::set<std::string>{"aa", "aaa", "aaaa"}));
  ASSERT_EQ(aaaa.class_keys.size(), 1u);
  EXPECT_EQ(aaaa.class_keys[0], W("a"));

  const auto abab = enumerate_rational_power_factors(W("abab"));
  ASSERT_EQ(abab.factors.size(), 1u);
  EXPECT_EQ(abab.class_key(abab.factors[0]), W("ab"));
  EXPECT_EQ(abab.factors[0].root_len, 2u);
  EXPECT_EQ(abab.factors[0].total_len, 4u);

  EXPECT_EQ(enumerated_texts(W("aabab")), testing::brute_rational_powers("aabab"));
  EXPECT_EQ(enumerated_texts(W("aabab")), (std::set<std::string>{"aa", "abab"}));
  EXPECT_THROW(enumerate_rational_power_factors(Word{}), Error);
}

TEST(Enumerate, SquareFreeWordHasNoFactors) {
  EXPECT_TRUE(enumerate_rational_power_factors(W("abcacb")).factors.empty());
}

TEST(Enumerate, ExhaustiveBinaryUpTo12MatchesBruteForce) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      const std::string s = testing::binary_text(code, len);
      ASSERT_EQ(enumerated_texts(W(s)), testing::brute_rational_powers(s)) << s;
    }
  }
}

TEST(Enumerate, FactorInvariantsOnRandomWords) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 80, 1 + rng() % 4);
    const FactorIndex ix(w);
    const auto list = enumerate_rational_power_factors(w);
    EXPECT_TRUE(std::is_sorted(list.class_keys.begin(), list.class_keys.end()));
    std::set<std::string> seen;
    for (std::size_t k = 0; k < list.factors.size(); ++k) {
      const auto& f = list.factors[k];
      const Word text = list.text(f);
      EXPECT_TRUE(seen.insert(text.text()).second) << "duplicate " << text.text();
      EXPECT_GE(f.total_len, 2 * f.root_len);
      EXPECT_EQ(testing::brute_period(text.text()), f.root_len);
      const Word root = text.substr(0, f.root_len);
      EXPECT_TRUE(is_primitive(root));
      EXPECT_EQ(canonical_class_key(root), list.class_key(f));
      // Re-expansion from the stored conjugate of the key.
      const Word again = rational_power_expand(rotate(list.class_key(f), f.rotation), f.total_len);
      EXPECT_EQ(again, text);
      EXPECT_TRUE(ix.contains(rational_power_expand(root, f.total_len)));
      EXPECT_EQ(w.substr(f.witness, f.total_len), text);
      EXPECT_EQ(w.text().find(text.text()), f.witness);
      if (k > 0) {
        const auto& p = list.factors[k - 1];
        const bool ordered =
            p.total_len < f.total_len ||
            (p.total_len == f.total_len &&
             (list.class_key(p) < list.class_key(f) ||
              (list.class_key(p) == list.class_key(f) && p.witness < f.witness)));
        EXPECT_TRUE(ordered);
      }
    }
    EXPECT_EQ(count_rational_powers(w.letters()), list.factors.size());
  }
}

TEST(Enumerate, MatchesLiteralDefinitionUpToLength12) {
  // Every p^k p' of length <= 12 over {a, b} is a rational power by the length
  // criterion, and every word satisfying the criterion arises this way.
  std::set<std::string> roots;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      roots.insert(testing::binary_text(code, len));
    }
  }
  const auto literal = testing::literal_rational_powers_upto(12, roots);
  std::set<std::string> criterion;
  for (std::size_t len = 2; len <= 12; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      const std::string s = testing::binary_text(code, len);
      if (s.size() >= 2 * testing::brute_period(s)) criterion.insert(s);
    }
  }
  EXPECT_EQ(literal, criterion);
  // The enumerator reports a word as a factor of itself exactly when it is in the set.
  for (std::size_t len = 2; len <= 12; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      const std::string s = testing::binary_text(code, len);
      const auto list = enumerate_rational_power_factors(W(s));
      const bool whole = std::any_of(list.factors.begin(), list.factors.end(),
                                     [&](const auto& f) { return f.total_len == len; });
      ASSERT_EQ(whole, literal.count(s) == 1) << s;
    }
  }
}

TEST(Enumerate, HandlesLongWordsQuickly) {
  std::mt19937_64 rng(31);
  const Word w = testing::random_word(rng, 5000, 2);
  const auto list = enumerate_rational_power_factors(w);
  EXPECT_EQ(list.factors.size(), count_rational_powers(w.letters()));
}

}  // namespace
}  // namespace ratpow
