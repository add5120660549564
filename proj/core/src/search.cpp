#include "ratpow/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "ratpow/constructions.hpp"
#include "ratpow/rational_powers.hpp"

namespace ratpow {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Lexicographic comparison of equal-length letter sequences.
bool less_letters(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void canonicalize(std::span<const Letter> in, std::vector<Letter>& out) {
  std::array<int, kMaxAlphabet> rename;
  rename.fill(-1);
  int next = 0;
  out.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (rename[in[i]] < 0) rename[in[i]] = next++;
    out[i] = static_cast<Letter>(rename[in[i]]);
  }
}

bool is_renaming_canonical(std::span<const Letter> w) {
  int max_seen = -1;
  for (Letter x : w) {
    if (static_cast<int>(x) > max_seen + 1) return false;
    max_seen = std::max(max_seen, static_cast<int>(x));
  }
  return true;
}

struct Incumbent {
  std::size_t best = 0;
  std::vector<Letter> witness;
  bool found = false;

  void offer(std::size_t score, std::span<const Letter> w) {
    if (!found || score > best || (score == best && less_letters(w, witness))) {
      best = score;
      witness.assign(w.begin(), w.end());
      found = true;
    }
  }
};

}  // namespace

std::string to_string(SearchMode mode) {
  return mode == SearchMode::exhaustive ? "exhaustive" : "heuristic";
}

std::string to_string(SeedInit init) {
  switch (init) {
    case SeedInit::random:
      return "random";
    case SeedInit::wn_seed:
      return "wn_seed";
    case SeedInit::fib_seed:
      return "fib_seed";
  }
  return "random";
}

SeedInit parse_seed_init(const std::string& name) {
  if (name == "random") return SeedInit::random;
  if (name == "wn_seed") return SeedInit::wn_seed;
  if (name == "fib_seed") return SeedInit::fib_seed;
  throw Error("unknown init '" + name + "'");
}

Word canonical_renaming(const Word& w) {
  std::vector<Letter> out;
  canonicalize(w.letters(), out);
  return Word(std::move(out));
}

SearchResult exhaustive_max_rp(std::size_t n, std::size_t sigma, std::uint64_t budget,
                               std::size_t threads) {
  if (sigma != 2 && sigma != 3) throw Error("exhaustive search supports sigma 2 or 3");
  if (n == 0) throw Error("empty input");
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / sigma) overflow = true;
    total *= sigma;
  }
  if (overflow || total > budget) {
    throw Error("budget exceeded: " + std::to_string(sigma) + "^" + std::to_string(n) + " = " +
                (overflow ? std::string("overflow") : std::to_string(total)) +
                " words needed, budget is " + std::to_string(budget));
  }

  const auto start = Clock::now();
  const std::size_t workers =
      threads > 0 ? threads : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  // Words in lexicographic order correspond to base-σ indices in [0, total);
  // canonical words start with letter 0, i.e. the first total/σ indices.
  const std::uint64_t span_end = total / sigma;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, span_end / (workers * 8) + 1);
  std::atomic<std::uint64_t> next{0};
  std::vector<Incumbent> partial(workers);
  std::vector<std::uint64_t> evaluated(workers, 0);

  auto work = [&](std::size_t id) {
    RationalPowerCounter counter;
    std::vector<Letter> w(n), rev(n), rev_canon;
    for (std::uint64_t lo = next.fetch_add(chunk); lo < span_end; lo = next.fetch_add(chunk)) {
      const std::uint64_t hi = std::min(span_end, lo + chunk);
      std::uint64_t code = lo;
      for (std::size_t i = n; i-- > 0;) {
        w[i] = static_cast<Letter>(code % sigma);
        code /= sigma;
      }
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (is_renaming_canonical(w)) {
          std::reverse_copy(w.begin(), w.end(), rev.begin());
          canonicalize(rev, rev_canon);
          if (!less_letters(rev_canon, w)) {
            partial[id].offer(counter.count(w), w);
            ++evaluated[id];
          }
        }
        for (std::size_t i = n; i-- > 0;) {  // odometer increment
          if (++w[i] < sigma) break;
          w[i] = 0;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work, i);
  work(0);
  for (auto& th : pool) th.join();

  Incumbent merged;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < workers; ++i) {
    if (partial[i].found) merged.offer(partial[i].best, partial[i].witness);
    count += evaluated[i];
  }

  SearchResult result;
  result.n = n;
  result.sigma = sigma;
  result.best_rp = merged.best;
  result.witness = Word(merged.witness);
  result.mode = SearchMode::exhaustive;
  result.iterations = count;
  result.wall_seconds = seconds_since(start);
  return result;
}

Word initial_word(const HeuristicOptions& options) {
  const std::size_t n = options.n;
  if (options.sigma < 2 || options.sigma > kMaxAlphabet) throw Error("sigma must be in [2, 26]");
  std::vector<Letter> out;
  switch (options.init) {
    case SeedInit::random: {
      std::mt19937_64 rng(options.seed);
      out.resize(n);
      for (auto& x : out) x = static_cast<Letter>(rng() % options.sigma);
      return Word(std::move(out));
    }
    case SeedInit::wn_seed: {
      const std::size_t k = n >= 12 ? (n - 3) / 9 : 1;
      const Word seed = gen_wn(k);
      out.assign(seed.begin(), seed.end());
      break;
    }
    case SeedInit::fib_seed: {
      const std::size_t t = n >= 384 ? (n - 147) / 237 : 1;
      const Word seed = gen_fib_morphic(t, 0, 55);
      out.assign(seed.begin(), seed.end());
      break;
    }
  }
  out.resize(n, Letter{0});
  return Word(std::move(out));
}

SearchResult heuristic_max_rp(const HeuristicOptions& options) {
  const std::size_t n = options.n;
  if (n == 0) throw Error("empty input");
  if (n > 5000) throw Error("heuristic search supports n <= 5000");
  const auto start = Clock::now();
  const std::size_t sigma = options.sigma;

  RationalPowerCounter counter;
  const Word init = initial_word(options);
  std::vector<Letter> current(init.begin(), init.end());
  std::size_t current_score = counter.count(current);
  Incumbent best;
  best.offer(current_score, current);

  std::mt19937_64 rng(options.seed ^ 0x5bd1e995ULL);
  auto below = [&](std::size_t bound) { return bound == 0 ? 0 : rng() % bound; };
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const std::uint64_t patience = std::max<std::uint64_t>(64, options.iters / 20);
  const double t0 = std::max(1.0, static_cast<double>(n) / 20.0);
  std::uint64_t stall = 0;
  std::vector<Letter> candidate;

  auto substitute = [&](std::vector<Letter>& w) {
    const std::size_t pos = below(n);
    w[pos] = static_cast<Letter>((w[pos] + 1 + below(sigma - 1)) % sigma);
  };
  // Random [i, j) with 2 <= j - i <= max_len, or false when n is too small.
  auto pick_block = [&](std::size_t max_len, std::size_t& i, std::size_t& j) {
    max_len = std::min(max_len, n);
    if (max_len < 2) return false;
    const std::size_t len = 2 + below(max_len - 1);
    i = below(n - len + 1);
    j = i + len;
    return true;
  };

  for (std::uint64_t it = 0; it < options.iters; ++it) {
    candidate = current;
    std::size_t i = 0, j = 0;
    switch (rng() % 5) {
      case 0:
        substitute(candidate);
        break;
      case 4:  // same substitution at every position of one residue class
        if (pick_block(n, i, j)) {
          const std::size_t p = 1 + below((j - i) / 2);
          const std::size_t first = i + below(p);
          const auto x = static_cast<Letter>((candidate[first] + 1 + below(sigma - 1)) % sigma);
          for (std::size_t k = first; k < j; k += p) candidate[k] = x;
        } else {
          substitute(candidate);
        }
        break;
      case 1:  // block rotation
        if (pick_block(n, i, j)) {
          const std::size_t k = 1 + below(j - i - 1);
          std::rotate(candidate.begin() + static_cast<std::ptrdiff_t>(i),
                      candidate.begin() + static_cast<std::ptrdiff_t>(i + k),
                      candidate.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          substitute(candidate);
        }
        break;
      case 2:  // copy a block over another position
        if (pick_block(std::max<std::size_t>(2, n / 4), i, j)) {
          const std::size_t dst = below(n - (j - i) + 1);
          std::copy(current.begin() + static_cast<std::ptrdiff_t>(i),
                    current.begin() + static_cast<std::ptrdiff_t>(j),
                    candidate.begin() + static_cast<std::ptrdiff_t>(dst));
        } else {
          substitute(candidate);
        }
        break;
      default:  // impose a short period on a block
        if (pick_block(n, i, j)) {
          const std::size_t p = 1 + below((j - i) / 2);
          for (std::size_t k = i + p; k < j; ++k) candidate[k] = candidate[k - p];
        } else {
          substitute(candidate);
        }
        break;
    }

    const std::size_t score = counter.count(candidate);
    const double temperature =
        t0 * (1.0 - static_cast<double>(it) / static_cast<double>(options.iters));
    const double delta = static_cast<double>(score) - static_cast<double>(current_score);
    stall = score > best.best ? 0 : stall + 1;
    if (delta >= 0 || (temperature > 0 && unit() < std::exp(delta / temperature))) {
      current.swap(candidate);
      current_score = score;
      best.offer(current_score, current);
    }
    if (stall >= patience) {
      current = best.witness;
      const std::size_t kicks = 1 + below(3);
      for (std::size_t k = 0; k < kicks; ++k) substitute(current);
      current_score = counter.count(current);
      best.offer(current_score, current);
      stall = 0;
    }
  }

  SearchResult result;
  result.n = n;
  result.sigma = sigma;
  result.best_rp = best.best;
  result.witness = Word(best.witness);
  result.mode = SearchMode::heuristic;
  result.seed = options.seed;
  result.iterations = options.iters;
  result.wall_seconds = seconds_since(start);
  return result;
}

std::vector<CoefficientRow> coefficient_report(std::span<const SearchResult> results) {
  std::vector<CoefficientRow> rows;
  rows.reserve(results.size());
  for (const auto& r : results) {
    const double n2 = static_cast<double>(r.n) * static_cast<double>(r.n);
    rows.push_back({r.n, r.best_rp, r.ratio(), r.mode, n2 / 8.0, n2 / 9.0});
  }
  std::sort(rows.begin(), rows.end(), [](const CoefficientRow& a, const CoefficientRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.mode != b.mode) return a.mode < b.mode;
    return a.best_rp > b.best_rp;
  });
  return rows;
}

}  // namespace ratpow
