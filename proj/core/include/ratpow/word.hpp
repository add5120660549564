#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratpow/error.hpp"

namespace ratpow {

using Letter = std::uint8_t;

// Letters are 0..25; the text codec maps them to 'a'..'z'.
inline constexpr std::size_t kMaxAlphabet = 26;

/// A finite word over a small integer alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  /// Parses lowercase ASCII. Throws ParseError naming the offending column.
  static Word from_text(std::string_view text);
  std::string text() const;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word substr(std::size_t pos, std::size_t len) const;
  Word reversed() const;
  /// Number of distinct letters that occur.
  std::size_t alphabet_used() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Word with exponent: `root` repeated `exponent` times.
struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

/// Unreduced exponent L/ℓ of a rational power; always total_len >= 2*root_len.
class RationalExponent {
 public:
  RationalExponent(std::size_t total_len, std::size_t root_len);

  std::size_t total_len() const noexcept { return total_len_; }
  std::size_t root_len() const noexcept { return root_len_; }
  double value() const noexcept {
    return static_cast<double>(total_len_) / static_cast<double>(root_len_);
  }

  friend bool operator==(const RationalExponent&, const RationalExponent&) = default;

 private:
  std::size_t total_len_;
  std::size_t root_len_;
};

/// Failure function: entry i is the length of the longest proper border of
/// letters[0..i].
std::vector<std::size_t> border_array(std::span<const Letter> letters);

bool has_period(std::span<const Letter> letters, std::size_t p);
std::size_t smallest_period(const Word& w);
bool is_primitive(const Word& w);
PrimitiveRoot primitive_root(const Word& w);

/// Left rotation by k: letters k, k+1, ..., then 0..k-1.
Word rotate(const Word& w, std::size_t k);
std::set<Word> conjugacy_class(const Word& w);

/// Start index of the lexicographically least rotation (Booth).
std::size_t least_rotation_index(std::span<const Letter> letters);
/// Least rotation of a primitive word; identifies its conjugacy class.
Word canonical_class_key(const Word& w);

/// Length-L prefix of u u u ...
Word rational_power_expand(const Word& u, std::size_t total_len);

/// Length-i factors of the periodic word u^ω, i >= |u|.
std::set<Word> class_factors_of_order(const Word& u, std::size_t order);

/// Whether gcd(k, l) is a period of w, given w has periods k and l and is long
/// enough for the Fine-Wilf theorem to apply. Throws "hypotheses not met" otherwise.
bool fine_wilf_holds(const Word& w, std::size_t k, std::size_t l);

}  // namespace ratpow
