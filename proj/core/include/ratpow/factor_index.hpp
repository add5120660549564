#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ratpow/word.hpp"

namespace ratpow {

/// Factor membership and factor complexity of one word, backed by its suffix
/// automaton. Immutable after construction.
class FactorIndex {
 public:
  /// Throws Error("empty input") for the empty word. O(n σ) time and space.
  explicit FactorIndex(Word source);

  const Word& source() const noexcept { return source_; }

  /// O(|u|). The empty query is rejected.
  bool contains(std::span<const Letter> u) const;
  bool contains(const Word& u) const { return contains(u.letters()); }

  /// |Fac_i(source)| for i >= 1; zero for i > n.
  std::size_t distinct_count(std::size_t length) const;
  /// Entry i-1 is |Fac_i| for i = 1..n.
  std::span<const std::size_t> complexity() const noexcept { return complexity_; }

  /// Entry j is the length of the longest prefix of text[j..] occurring in the
  /// source. Linear in |text| (matching statistics).
  std::vector<std::size_t> longest_factor_prefixes(std::span<const Letter> text) const;

 private:
  struct State {
    std::int32_t len = 0;
    std::int32_t link = -1;
  };

  std::int32_t next(std::int32_t state, Letter x) const;

  Word source_;
  std::vector<std::int32_t> letter_code_;  // letter -> dense code, -1 if unused
  std::size_t sigma_ = 0;
  std::vector<State> states_;
  std::vector<std::int32_t> transitions_;  // states_.size() * sigma_
  std::vector<std::size_t> complexity_;
};

inline FactorIndex build_index(const Word& w) { return FactorIndex(w); }

inline bool contains_factor(const FactorIndex& ix, const Word& u) { return ix.contains(u); }

}  // namespace ratpow
