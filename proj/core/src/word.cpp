#include "ratpow/word.hpp"

#include <algorithm>
#include <numeric>

namespace ratpow {
namespace {

void require_nonempty(const Word& w) {
  if (w.empty()) throw Error("empty input");
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= kMaxAlphabet) {
      throw ParseError("letter out of alphabet", i + 1);
    }
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word Word::from_text(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError(std::string("invalid letter '") + c + "'", i + 1);
    }
    letters.push_back(static_cast<Letter>(c - 'a'));
  }
  return Word(std::move(letters));
}

std::string Word::text() const {
  std::string out(letters_.size(), 'a');
  std::transform(letters_.begin(), letters_.end(), out.begin(),
                 [](Letter x) { return static_cast<char>('a' + x); });
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

std::size_t Word::alphabet_used() const {
  std::vector<bool> seen(kMaxAlphabet, false);
  std::size_t used = 0;
  for (Letter x : letters_) {
    if (!seen[x]) {
      seen[x] = true;
      ++used;
    }
  }
  return used;
}

RationalExponent::RationalExponent(std::size_t total_len, std::size_t root_len)
    : total_len_(total_len), root_len_(root_len) {
  if (root_len == 0 || total_len < 2 * root_len) {
    throw Error("rational exponent requires total_len >= 2 * root_len > 0");
  }
}

std::vector<std::size_t> border_array(std::span<const Letter> letters) {
  std::vector<std::size_t> pi(letters.size(), 0);
  for (std::size_t i = 1; i < letters.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && letters[i] != letters[k]) k = pi[k - 1];
    if (letters[i] == letters[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

bool has_period(std::span<const Letter> letters, std::size_t p) {
  if (p == 0) return false;
  for (std::size_t i = 0; i + p < letters.size(); ++i) {
    if (letters[i] != letters[i + p]) return false;
  }
  return true;
}

std::size_t smallest_period(const Word& w) {
  require_nonempty(w);
  return w.size() - border_array(w.letters()).back();
}

bool is_primitive(const Word& w) {
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

PrimitiveRoot primitive_root(const Word& w) {
  const std::size_t p = smallest_period(w);
  if (w.size() % p != 0) return {w, 1};
  return {w.substr(0, p), w.size() / p};
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return Word(std::move(out));
}

std::set<Word> conjugacy_class(const Word& w) {
  require_nonempty(w);
  std::set<Word> out;
  for (std::size_t k = 0; k < w.size(); ++k) out.insert(rotate(w, k));
  return out;
}

std::size_t least_rotation_index(std::span<const Letter> s) {
  // Booth's algorithm over the implicit doubled string s s.
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  if (n == 0) return 0;
  auto at = [&](std::ptrdiff_t idx) { return s[static_cast<std::size_t>(idx % n)]; };
  std::vector<std::ptrdiff_t> f(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      // i == -1 here
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

Word canonical_class_key(const Word& w) {
  require_nonempty(w);
  if (!is_primitive(w)) throw Error("key requires primitive root");
  return rotate(w, least_rotation_index(w.letters()));
}

Word rational_power_expand(const Word& u, std::size_t total_len) {
  require_nonempty(u);
  std::vector<Letter> out(total_len);
  for (std::size_t i = 0; i < total_len; ++i) out[i] = u[i % u.size()];
  return Word(std::move(out));
}

std::set<Word> class_factors_of_order(const Word& u, std::size_t order) {
  require_nonempty(u);
  if (order < u.size()) throw Error("order below root length");
  std::set<Word> out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    out.insert(rational_power_expand(rotate(u, k), order));
  }
  return out;
}

bool fine_wilf_holds(const Word& w, std::size_t k, std::size_t l) {
  if (k == 0 || l == 0) throw Error("hypotheses not met");
  const std::size_t g = std::gcd(k, l);
  if (w.size() < k + l - g || !has_period(w.letters(), k) ||
      !has_period(w.letters(), l)) {
    throw Error("hypotheses not met");
  }
  return has_period(w.letters(), g);
}

}  // namespace ratpow
