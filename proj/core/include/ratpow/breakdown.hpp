#pragma once

#include <cstddef>
#include <map>

#include "ratpow/rational_powers.hpp"
#include "ratpow/word.hpp"

namespace ratpow {

/// RP(w) split by primitive conjugacy class (keyed by least rotation).
struct RpBreakdown {
  std::size_t total = 0;
  std::map<Word, std::size_t> per_class;
  // class key -> (length -> number of distinct class members of that length)
  std::map<Word, std::map<std::size_t, std::size_t>> per_class_length_profile;
};

RpBreakdown rp_with_breakdown(const RationalPowerList& factors);
RpBreakdown rp_with_breakdown(const Word& w);

/// Members of one class by exact length. Throws Error("unknown class") when the
/// class has no square in the word.
std::map<std::size_t, std::size_t> qclass_length_profile(const RpBreakdown& breakdown,
                                                         const Word& class_key);
std::map<std::size_t, std::size_t> qclass_length_profile(const Word& w, const Word& class_key);

}  // namespace ratpow
