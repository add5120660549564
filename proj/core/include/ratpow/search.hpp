#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratpow/word.hpp"

namespace ratpow {

enum class SearchMode { exhaustive, heuristic };
enum class SeedInit { random, wn_seed, fib_seed };

std::string to_string(SearchMode mode);
std::string to_string(SeedInit init);
SeedInit parse_seed_init(const std::string& name);

struct SearchResult {
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t best_rp = 0;
  Word witness;  // lexicographically least maximizer found
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;  // words evaluated (exhaustive) or moves tried
  double wall_seconds = 0.0;

  double ratio() const noexcept {
    return static_cast<double>(best_rp) / (static_cast<double>(n) * static_cast<double>(n));
  }
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 22;

/// Letters renamed in order of first occurrence (0, 1, 2, ...).
Word canonical_renaming(const Word& w);

/// Exact RP(n) over all σ^n words, evaluating one representative per
/// renaming/reversal orbit. Throws Error naming the needed budget when
/// σ^n > budget, and for σ outside {2, 3}.
SearchResult exhaustive_max_rp(std::size_t n, std::size_t sigma,
                               std::uint64_t budget = kDefaultExhaustiveBudget,
                               std::size_t threads = 0);

struct HeuristicOptions {
  std::size_t n = 0;
  std::size_t sigma = 2;
  std::uint64_t seed = 0;
  std::uint64_t iters = 0;
  SeedInit init = SeedInit::random;
};

/// Length-n starting word for a given initialization. wn_seed and fib_seed use
/// the largest construction that fits and pad with the letter 'a'.
Word initial_word(const HeuristicOptions& options);

/// Annealed local search. Moves: single-letter substitution, block rotation,
/// block copy, imposing a period on a block, and one substitution repeated
/// along a residue class. Restarts from the incumbent after a stall. Never
/// returns less than the initial word; deterministic in (seed, iters, init).
SearchResult heuristic_max_rp(const HeuristicOptions& options);

struct CoefficientRow {
  std::size_t n = 0;
  std::size_t best_rp = 0;
  double ratio = 0.0;
  SearchMode mode = SearchMode::exhaustive;
  double eighth_envelope = 0.0;  // n²/8
  double ninth_envelope = 0.0;   // n²/9
};

/// Rows sorted by n (ties by mode, then best_rp descending).
std::vector<CoefficientRow> coefficient_report(std::span<const SearchResult> results);

}  // namespace ratpow
