#include "ratpow/factor_index.hpp"

#include <algorithm>

namespace ratpow {

FactorIndex::FactorIndex(Word source) : source_(std::move(source)) {
  if (source_.empty()) throw Error("empty input");

  letter_code_.assign(kMaxAlphabet, -1);
  for (Letter x : source_) {
    if (letter_code_[x] < 0) letter_code_[x] = static_cast<std::int32_t>(sigma_++);
  }

  const std::size_t n = source_.size();
  states_.reserve(2 * n + 1);
  transitions_.reserve((2 * n + 1) * sigma_);
  auto add_state = [&](std::int32_t len, std::int32_t link) {
    states_.push_back({len, link});
    transitions_.resize(states_.size() * sigma_, -1);
    return static_cast<std::int32_t>(states_.size() - 1);
  };
  auto trans = [&](std::int32_t s, std::int32_t c) -> std::int32_t& {
    return transitions_[static_cast<std::size_t>(s) * sigma_ + static_cast<std::size_t>(c)];
  };

  add_state(0, -1);
  std::int32_t last = 0;
  for (Letter x : source_) {
    const std::int32_t c = letter_code_[x];
    const std::int32_t cur = add_state(states_[static_cast<std::size_t>(last)].len + 1, -1);
    std::int32_t p = last;
    while (p != -1 && trans(p, c) == -1) {
      trans(p, c) = cur;
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
      states_[static_cast<std::size_t>(cur)].link = 0;
    } else {
      const std::int32_t q = trans(p, c);
      if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
        states_[static_cast<std::size_t>(cur)].link = q;
      } else {
        const std::int32_t clone = add_state(states_[static_cast<std::size_t>(p)].len + 1,
                                             states_[static_cast<std::size_t>(q)].link);
        std::copy_n(transitions_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(q) * sigma_),
                    sigma_,
                    transitions_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(clone) * sigma_));
        while (p != -1 && trans(p, c) == q) {
          trans(p, c) = clone;
          p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[static_cast<std::size_t>(q)].link = clone;
        states_[static_cast<std::size_t>(cur)].link = clone;
      }
    }
    last = cur;
  }

  // Each state stands for the factors of lengths (len(link), len], one per length.
  std::vector<std::ptrdiff_t> diff(n + 2, 0);
  for (std::size_t s = 1; s < states_.size(); ++s) {
    const auto lo = static_cast<std::size_t>(states_[static_cast<std::size_t>(states_[s].link)].len) + 1;
    const auto hi = static_cast<std::size_t>(states_[s].len);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  complexity_.resize(n);
  std::ptrdiff_t running = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    running += diff[i];
    complexity_[i - 1] = static_cast<std::size_t>(running);
  }
}

std::int32_t FactorIndex::next(std::int32_t state, Letter x) const {
  if (x >= kMaxAlphabet) return -1;
  const std::int32_t c = letter_code_[x];
  if (c < 0) return -1;
  return transitions_[static_cast<std::size_t>(state) * sigma_ + static_cast<std::size_t>(c)];
}

bool FactorIndex::contains(std::span<const Letter> u) const {
  if (u.empty()) throw Error("empty input");
  std::int32_t state = 0;
  for (Letter x : u) {
    state = next(state, x);
    if (state < 0) return false;
  }
  return true;
}

std::size_t FactorIndex::distinct_count(std::size_t length) const {
  if (length == 0 || length > complexity_.size()) return 0;
  return complexity_[length - 1];
}

std::vector<std::size_t> FactorIndex::longest_factor_prefixes(std::span<const Letter> text) const {
  const std::size_t m = text.size();
  // Longest suffix of text[0..e] that is a factor, for every end e.
  std::vector<std::size_t> ending(m, 0);
  std::int32_t state = 0;
  std::size_t len = 0;
  for (std::size_t e = 0; e < m; ++e) {
    std::int32_t to = next(state, text[e]);
    while (to < 0 && state != 0) {
      state = states_[static_cast<std::size_t>(state)].link;
      len = static_cast<std::size_t>(states_[static_cast<std::size_t>(state)].len);
      to = next(state, text[e]);
    }
    if (to < 0) {
      state = 0;
      len = 0;
    } else {
      state = to;
      ++len;
    }
    ending[e] = len;
  }

  // text[j..e] is a factor iff e + 1 - ending[e] <= j; those starts are
  // nondecreasing in e, so one pointer sweep finds the farthest e per j.
  std::vector<std::size_t> out(m, 0);
  std::ptrdiff_t e = -1;
  for (std::size_t j = 0; j < m; ++j) {
    while (static_cast<std::size_t>(e + 1) < m &&
           static_cast<std::size_t>(e + 1) + 1 - ending[static_cast<std::size_t>(e + 1)] <= j) {
      ++e;
    }
    if (e >= static_cast<std::ptrdiff_t>(j)) out[j] = static_cast<std::size_t>(e) - j + 1;
  }
  return out;
}

}  // namespace ratpow
