#pragma once

#include <cstddef>

#include "ratpow/word.hpp"

namespace ratpow::oracle {

inline constexpr std::size_t kOracleMaxLength = 400;

/// Brute-force RP(w): every substring goes into an exact set, filtered by
/// length >= 2 * smallest period. Deliberately independent of the indexed path.
/// Throws Error("oracle limit") above kOracleMaxLength letters.
std::size_t rp_oracle(const Word& w);

}  // namespace ratpow::oracle
