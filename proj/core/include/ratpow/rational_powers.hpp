#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ratpow/word.hpp"

namespace ratpow {

/// One distinct rational-power factor of a source word.
///
/// The factor's letters are rational_power_expand(rotate(key, rotation), total_len)
/// where key is the class key it refers to; (class_id, rotation, total_len)
/// therefore pins the letter sequence within one RationalPowerList.
struct RationalPowerFactor {
  std::uint32_t class_id = 0;
  std::uint32_t rotation = 0;
  std::uint32_t root_len = 0;   // smallest period ℓ
  std::uint32_t total_len = 0;  // L >= 2ℓ
  std::uint32_t witness = 0;    // first occurrence in the source

  RationalExponent exponent() const { return {total_len, root_len}; }

  // Equal iff same letters (witness does not participate).
  friend bool operator==(const RationalPowerFactor& a, const RationalPowerFactor& b) {
    return a.class_id == b.class_id && a.rotation == b.rotation && a.total_len == b.total_len;
  }
};

/// Every distinct rational-power factor of `source`, sorted by
/// (total_len, class key, witness). Class ids index `class_keys`, which is
/// sorted lexicographically.
struct RationalPowerList {
  Word source;
  std::vector<Word> class_keys;
  std::vector<RationalPowerFactor> factors;

  const Word& class_key(const RationalPowerFactor& f) const { return class_keys[f.class_id]; }
  Word text(const RationalPowerFactor& f) const {
    return source.substr(f.witness, f.total_len);
  }
};

/// For each start s, the longest common prefix of suffix s with any earlier
/// suffix. A factor starting at s with length L is a first occurrence iff
/// L > result[s]. O(n²) time, O(n) memory.
std::vector<std::size_t> longest_previous_match(std::span<const Letter> w);

/// Exact enumeration: a factor is a rational power iff its length is at least
/// twice its smallest period. Throws Error("empty input") for the empty word.
RationalPowerList enumerate_rational_power_factors(const Word& w);

/// Count-only variant of the same algorithm with reusable scratch space; no
/// class keys are materialized. Used by the search loops.
class RationalPowerCounter {
 public:
  std::size_t count(std::span<const Letter> w);

 private:
  std::vector<std::size_t> previous_;
  std::vector<std::size_t> border_;
};

std::size_t count_rational_powers(std::span<const Letter> w);

}  // namespace ratpow
