#include "ratpow/rational_powers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ratpow {
namespace {

void fill_previous_match(std::span<const Letter> w, std::vector<std::size_t>& prev) {
  const std::size_t n = w.size();
  prev.assign(n, 0);
  for (std::size_t d = 1; d < n; ++d) {
    std::size_t run = 0;
    for (std::size_t j = n - d; j-- > 0;) {
      run = (w[j] == w[j + d]) ? run + 1 : 0;
      if (run > prev[j + d]) prev[j + d] = run;
    }
  }
}

// Extends the failure function of w[s..] one letter at a time. `border` holds
// entries for the first `len` letters of the suffix.
std::size_t extend_border(std::span<const Letter> suffix, std::vector<std::size_t>& border,
                          std::size_t len) {
  if (len == 0) {
    border[0] = 0;
    return 0;
  }
  std::size_t k = border[len - 1];
  while (k > 0 && suffix[len] != suffix[k]) k = border[k - 1];
  if (suffix[len] == suffix[k]) ++k;
  border[len] = k;
  return k;
}

}  // namespace

std::vector<std::size_t> longest_previous_match(std::span<const Letter> w) {
  std::vector<std::size_t> prev;
  fill_previous_match(w, prev);
  return prev;
}

RationalPowerList enumerate_rational_power_factors(const Word& w) {
  if (w.empty()) throw Error("empty input");
  const std::span<const Letter> letters = w.letters();
  const std::size_t n = letters.size();

  std::vector<std::size_t> prev;
  fill_previous_match(letters, prev);

  std::map<Word, std::uint32_t> key_ids;
  std::vector<Word> keys;
  std::vector<RationalPowerFactor> out;
  std::vector<std::size_t> border(n);

  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t remaining = n - s;
    if (prev[s] >= remaining) continue;
    const std::span<const Letter> suffix = letters.subspan(s);
    std::size_t cached_period = 0;
    std::uint32_t cached_id = 0;
    std::uint32_t cached_rotation = 0;
    for (std::size_t len = 0; len < remaining; ++len) {
      const std::size_t total = len + 1;
      const std::size_t period = total - extend_border(suffix, border, len);
      if (total < 2 * period || total <= prev[s]) continue;
      if (period != cached_period) {
        const std::span<const Letter> root = suffix.first(period);
        const std::size_t k = least_rotation_index(root);
        Word key = rotate(Word(std::vector<Letter>(root.begin(), root.end())), k);
        auto [it, inserted] = key_ids.try_emplace(std::move(key), static_cast<std::uint32_t>(keys.size()));
        if (inserted) keys.push_back(it->first);
        cached_period = period;
        cached_id = it->second;
        cached_rotation = static_cast<std::uint32_t>((period - k) % period);
      }
      out.push_back({cached_id, cached_rotation, static_cast<std::uint32_t>(period),
                     static_cast<std::uint32_t>(total), static_cast<std::uint32_t>(s)});
    }
  }

  // Renumber classes in lexicographic key order.
  std::vector<std::uint32_t> remap(keys.size());
  RationalPowerList result;
  result.source = w;
  result.class_keys.reserve(keys.size());
  for (auto& [key, id] : key_ids) {
    remap[id] = static_cast<std::uint32_t>(result.class_keys.size());
    result.class_keys.push_back(key);
  }
  for (auto& f : out) f.class_id = remap[f.class_id];
  std::sort(out.begin(), out.end(), [](const RationalPowerFactor& a, const RationalPowerFactor& b) {
    if (a.total_len != b.total_len) return a.total_len < b.total_len;
    if (a.class_id != b.class_id) return a.class_id < b.class_id;
    return a.witness < b.witness;
  });
  result.factors = std::move(out);
  return result;
}

std::size_t RationalPowerCounter::count(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) throw Error("empty input");
  fill_previous_match(w, previous_);
  border_.resize(n);
  std::size_t total_count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t remaining = n - s;
    if (previous_[s] >= remaining) continue;
    const std::span<const Letter> suffix = w.subspan(s);
    for (std::size_t len = 0; len < remaining; ++len) {
      const std::size_t total = len + 1;
      const std::size_t period = total - extend_border(suffix, border_, len);
      if (total >= 2 * period && total > previous_[s]) ++total_count;
    }
  }
  return total_count;
}

std::size_t count_rational_powers(std::span<const Letter> w) {
  RationalPowerCounter counter;
  return counter.count(w);
}

}  // namespace ratpow
