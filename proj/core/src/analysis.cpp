#include "ratpow/analysis.hpp"

namespace ratpow {

WordAnalysis analyze_word(const Word& w) {
  FactorIndex index(w);
  RationalPowerList factors = enumerate_rational_power_factors(w);
  RpBreakdown breakdown = rp_with_breakdown(factors);
  std::vector<ClassStats> classes = class_stats(index, factors, breakdown);
  ScProfile sc = sc_profile(index, classes);
  return WordAnalysis{std::move(index), std::move(factors), std::move(breakdown),
                      std::move(classes), std::move(sc)};
}

}  // namespace ratpow
