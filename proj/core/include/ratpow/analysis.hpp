#pragma once

#include <vector>

#include "ratpow/breakdown.hpp"
#include "ratpow/factor_index.hpp"
#include "ratpow/rational_powers.hpp"
#include "ratpow/rauzy.hpp"
#include "ratpow/word.hpp"

namespace ratpow {

/// Everything derived from one word: index, factors, breakdown, classes, circuits.
struct WordAnalysis {
  FactorIndex index;
  RationalPowerList factors;
  RpBreakdown breakdown;
  std::vector<ClassStats> classes;
  ScProfile sc;

  const Word& word() const noexcept { return index.source(); }
  std::size_t length() const noexcept { return index.source().size(); }
};

WordAnalysis analyze_word(const Word& w);

}  // namespace ratpow
