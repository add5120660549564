#include <gtest/gtest.h>

#include <random>

#include "ratpow/breakdown.hpp"
#include "ratpow/constructions.hpp"
#include "ratpow/oracle.hpp"
#include "ratpow/rational_powers.hpp"
#include "ratpow/search.hpp"
#include "test_support.hpp"

namespace ratpow {
namespace {

using testing::W;

// Unpruned maximum over all binary words of length n, tie-broken lexicographically.
std::pair<std::size_t, std::string> brute_max(std::size_t n) {
  std::size_t best = 0;
  std::string witness;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const std::string s = testing::binary_text(code, n);
    const std::size_t rp = testing::brute_rational_powers(s).size();
    if (witness.empty() || rp > best) {
      best = rp;
      witness = s;
    }
  }
  return {best, witness};
}

TEST(Exhaustive, Anchors) {
  const auto r2 = exhaustive_max_rp(2, 2);
  EXPECT_EQ(r2.best_rp, 1u);
  EXPECT_EQ(r2.witness.text(), "aa");
  const auto r4 = exhaustive_max_rp(4, 2);
  EXPECT_EQ(r4.best_rp, 3u);
  EXPECT_EQ(r4.witness.text(), "aaaa");
  EXPECT_EQ(r4.mode, SearchMode::exhaustive);
}

TEST(Exhaustive, MatchesUnprunedSearch) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto r = exhaustive_max_rp(n, 2);
    const auto [best, witness] = brute_max(n);
    EXPECT_EQ(r.best_rp, best) << "n=" << n;
    EXPECT_EQ(r.witness.text(), witness) << "n=" << n;
    EXPECT_EQ(oracle::rp_oracle(r.witness), r.best_rp);
    EXPECT_EQ(r.witness.size(), n);
  }
}

TEST(Exhaustive, TernaryAtLeastBinary) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto r3 = exhaustive_max_rp(n, 3);
    EXPECT_GE(r3.best_rp, exhaustive_max_rp(n, 2).best_rp);
    EXPECT_EQ(oracle::rp_oracle(r3.witness), r3.best_rp);
  }
}

TEST(Exhaustive, ThreadCountDoesNotChangeResult) {
  const auto a = exhaustive_max_rp(13, 2, kDefaultExhaustiveBudget, 1);
  const auto b = exhaustive_max_rp(13, 2, kDefaultExhaustiveBudget, 3);
  EXPECT_EQ(a.best_rp, b.best_rp);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Exhaustive, Errors) {
  EXPECT_THROW(exhaustive_max_rp(5, 4), Error);
  try {
    exhaustive_max_rp(23, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("budget exceeded"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("8388608"), std::string::npos);
  }
}

TEST(CanonicalRenaming, FirstOccurrenceOrder) {
  EXPECT_EQ(canonical_renaming(W("bba")).text(), "aab");
  EXPECT_EQ(canonical_renaming(W("cab")).text(), "abc");
}

TEST(Heuristic, DominatesWnInitialization) {
  HeuristicOptions o;
  o.n = 48;
  o.init = SeedInit::wn_seed;
  for (std::uint64_t iters : {0u, 50u, 500u}) {
    o.iters = iters;
    o.seed = iters;
    const auto r = heuristic_max_rp(o);
    EXPECT_GE(r.best_rp, 271u);
    EXPECT_EQ(count_rational_powers(r.witness.letters()), r.best_rp);
    EXPECT_EQ(r.witness.size(), 48u);
  }
}

TEST(Heuristic, DominatesFibInitialization) {
  HeuristicOptions o;
  o.n = 384;
  o.init = SeedInit::fib_seed;
  o.iters = 20;
  const auto r = heuristic_max_rp(o);
  EXPECT_GE(r.best_rp, rp_with_breakdown(gen_fib_morphic(1, 0, 55)).total);
}

TEST(Heuristic, InitialWords) {
  HeuristicOptions o;
  o.n = 50;
  o.init = SeedInit::wn_seed;
  const Word w = initial_word(o);
  EXPECT_EQ(w.size(), 50u);
  EXPECT_EQ(w.substr(0, 48), gen_wn(5));
  o.init = SeedInit::random;
  o.seed = 4;
  EXPECT_EQ(initial_word(o), initial_word(o));
}

TEST(Heuristic, Deterministic) {
  HeuristicOptions o;
  o.n = 60;
  o.seed = 12;
  o.iters = 400;
  const auto a = heuristic_max_rp(o);
  const auto b = heuristic_max_rp(o);
  EXPECT_EQ(a.best_rp, b.best_rp);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(SeedInit, ParseRoundTrip) {
  for (auto init : {SeedInit::random, SeedInit::wn_seed, SeedInit::fib_seed}) {
    EXPECT_EQ(parse_seed_init(to_string(init)), init);
  }
  EXPECT_THROW(parse_seed_init("greedy"), Error);
}

TEST(CoefficientReport, Examples) {
  SearchResult small;
  small.n = 4;
  small.best_rp = 3;
  SearchResult wn;
  wn.n = 21;
  wn.best_rp = 55;
  wn.mode = SearchMode::heuristic;
  const std::vector<SearchResult> results{wn, small};
  const auto rows = coefficient_report(results);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 4u);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 0.1875);
  EXPECT_DOUBLE_EQ(rows[1].ratio, 55.0 / 441.0);
  EXPECT_DOUBLE_EQ(rows[1].eighth_envelope, 441.0 / 8.0);
  EXPECT_DOUBLE_EQ(rows[1].ninth_envelope, 49.0);
}

TEST(CoefficientReport, ExhaustiveRowsUnderPinnedEnvelope) {
  std::vector<SearchResult> results;
  for (std::size_t n = 1; n <= 14; ++n) results.push_back(exhaustive_max_rp(n, 2));
  for (const auto& row : coefficient_report(results)) {
    const double n = static_cast<double>(row.n);
    EXPECT_LE(static_cast<double>(row.best_rp), n * n / 8.0 + n / 2.0) << row.n;
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    EXPECT_LE(results[i - 1].best_rp, results[i].best_rp);
  }
}

}  // namespace
}  // namespace ratpow
