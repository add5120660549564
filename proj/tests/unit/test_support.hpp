#pragma once

// Test-only oracles and generators. Nothing here calls into the library's
// period, factor or enumeration code.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ratpow/word.hpp"

namespace ratpow::testing {

inline Word W(const std::string& text) { return Word::from_text(text); }

inline Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t sigma) {
  std::vector<Letter> out(len);
  for (auto& x : out) x = static_cast<Letter>(rng() % sigma);
  return Word(std::move(out));
}

/// Binary word of length `len` whose letters are the bits of `code`, MSB first.
inline std::string binary_text(std::uint64_t code, std::size_t len) {
  std::string s(len, 'a');
  for (std::size_t i = 0; i < len; ++i) {
    if ((code >> (len - 1 - i)) & 1) s[i] = 'b';
  }
  return s;
}

inline std::size_t brute_period(const std::string& s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size(); ++i) {
      if (s[i] != s[i + p]) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return s.size();
}

inline std::set<std::string> brute_factors(const std::string& s) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t len = 1; i + len <= s.size(); ++len) out.insert(s.substr(i, len));
  }
  return out;
}

inline std::set<std::string> brute_factors_of_length(const std::string& s, std::size_t len) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + len <= s.size(); ++i) out.insert(s.substr(i, len));
  return out;
}

/// Distinct factors with length >= 2 * smallest period.
inline std::set<std::string> brute_rational_powers(const std::string& s) {
  std::set<std::string> out;
  for (const auto& f : brute_factors(s)) {
    if (f.size() >= 2 * brute_period(f)) out.insert(f);
  }
  return out;
}

/// Literal definition: every p^k p' with p nonempty, k >= 2, p' a prefix of p.
inline std::set<std::string> literal_rational_powers_upto(std::size_t max_len,
                                                         const std::set<std::string>& roots) {
  std::set<std::string> out;
  for (const auto& p : roots) {
    for (std::size_t k = 2; k * p.size() <= max_len; ++k) {
      std::string base;
      for (std::size_t i = 0; i < k; ++i) base += p;
      for (std::size_t extra = 0; extra < p.size() && base.size() + extra <= max_len; ++extra) {
        out.insert(base + p.substr(0, extra));
      }
    }
  }
  return out;
}

}  // namespace ratpow::testing
