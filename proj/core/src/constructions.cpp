#include "ratpow/constructions.hpp"

#include <algorithm>

#include "ratpow/rational_powers.hpp"

namespace ratpow {
namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

void append_run(std::vector<Letter>& out, Letter x, std::size_t count) {
  out.insert(out.end(), count, x);
}

Word from_text(const std::string& s) { return Word::from_text(s); }

std::string run(char c, std::size_t count) { return std::string(count, c); }

Word morph(const Word& binary, std::size_t t) {
  std::vector<Letter> out;
  for (Letter x : binary) {
    append_run(out, kA, x == 0 ? t : t - 1);
    out.push_back(kB);
  }
  return Word(std::move(out));
}

bool supported_prefix(std::size_t len) { return len == 13 || len == 21 || len == 34 || len == 55; }

}  // namespace

Word gen_wn(std::size_t n) {
  if (n < 1) throw Error("wn requires n >= 1");
  std::vector<Letter> out;
  out.reserve(9 * n + 3);
  for (int rep = 0; rep < 4; ++rep) {
    append_run(out, kA, n);
    out.push_back(kB);
    append_run(out, kA, n - 1);
    out.push_back(kB);
  }
  append_run(out, kA, n - 1);
  return Word(std::move(out));
}

WnExpectation expected_rp_wn(std::size_t n) {
  if (n < 2) throw Error("formula range");
  const std::uint64_t m = n;
  WnExpectation out;
  out.total = 9 * m * m + 9 * m + 1;
  out.classes.push_back({from_text("a"), m - 1, "n-1"});
  out.classes.push_back({from_text(run('a', n) + "b"), m * (m - 1) / 2, "n(n-1)/2"});
  out.classes.push_back({from_text(run('a', n - 1) + "b"), m * (m + 1) / 2, "n(n+1)/2"});
  out.classes.push_back({from_text(run('a', n) + "b" + run('a', n - 1) + "b"),
                         (2 * m + 1) * (2 * m + 2) / 2 + (2 * m + 1) * (3 * m + 1),
                         "(2n+1)(2n+2)/2+(2n+1)(3n+1)"});
  return out;
}

Word fibonacci_prefix(std::size_t len) {
  std::vector<Letter> f{0};
  while (f.size() < len) {
    std::vector<Letter> next;
    next.reserve(2 * f.size());
    for (Letter x : f) {
      next.push_back(0);
      if (x == 0) next.push_back(1);
    }
    f = std::move(next);
  }
  f.resize(len);
  return Word(std::move(f));
}

std::size_t fib_tail_prefix_len(std::size_t prefix_len) {
  if (!supported_prefix(prefix_len)) throw Error("prefix length must be 13, 21, 34 or 55");
  return (17 * prefix_len * 2 + 55) / (2 * 55);
}

Word gen_fib_morphic(std::size_t t, std::size_t d, std::size_t prefix_len) {
  if (t < 1) throw Error("fib_morphic requires t >= 1");
  if (d >= t) throw Error("fib_morphic requires 0 <= d <= t-1");
  const std::size_t tail = fib_tail_prefix_len(prefix_len);
  const Word f = fibonacci_prefix(prefix_len);
  const Word q = morph(f, t);
  std::vector<Letter> out;
  for (int rep = 0; rep < 4; ++rep) out.insert(out.end(), q.begin(), q.end());
  const Word p = morph(f.substr(0, tail), t);
  out.insert(out.end(), p.begin(), p.end());
  append_run(out, kA, d);
  return Word(std::move(out));
}

Word generate(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::wn:
      return gen_wn(spec.n);
    case Family::fib_morphic:
      return gen_fib_morphic(spec.t, spec.d, spec.prefix_len);
  }
  throw Error("unknown family");
}

std::size_t construction_length(const ConstructionSpec& spec) {
  if (spec.family == Family::wn) return 9 * spec.n + 3;
  if (spec.prefix_len == 55) return 237 * spec.t + 147 + spec.d;
  // |φ_t(v)| = (#0)(t+1) + (#1)t.
  auto image_len = [&](std::size_t len) {
    const Word f = fibonacci_prefix(len);
    const auto ones = static_cast<std::size_t>(std::count(f.begin(), f.end(), Letter{1}));
    return (len - ones) * (spec.t + 1) + ones * spec.t;
  };
  return 4 * image_len(spec.prefix_len) + image_len(fib_tail_prefix_len(spec.prefix_len)) + spec.d;
}

std::optional<FibMorphicHypothesis> fib_morphic_hypothesis(std::size_t t, std::size_t d,
                                                           std::size_t prefix_len) {
  if (prefix_len != 55) return std::nullopt;
  const auto ti = static_cast<std::int64_t>(t);
  const auto di = static_cast<std::int64_t>(d);
  struct Row {
    std::int64_t period;
    std::int64_t count;
    const char* formula;
  };
  const std::vector<Row> rows{
      {1, ti - 1, "t-1"},
      {ti, ti * (ti + 1) / 2, "t(t+1)/2"},
      {ti + 1, 3 * ti * (ti + 1) / 2, "3t(t+1)/2"},
      {2 * ti + 1, (2 * ti + 1) * (2 * ti + 1), "(2t+1)^2"},
      {3 * ti + 2, (21 * ti * ti + 23 * ti + 6) / 2, "(21t^2+23t+6)/2"},
      {5 * ti + 3, (55 * ti * ti + 63 * ti + 18) / 2, "(55t^2+63t+18)/2"},
      {8 * ti + 5, 72 * ti * ti + 85 * ti + 25, "72t^2+85t+25"},
      {13 * ti + 8, (377 * ti * ti + 453 * ti + 136) / 2, "(377t^2+453t+136)/2"},
      {21 * ti + 13, (987 * ti * ti + 1199 * ti + 364) / 2, "(987t^2+1199t+364)/2"},
      {34 * ti + 21, (441 * ti * ti + 525 * ti + 156) / 2, "(441t^2+525t+156)/2"},
      {55 * ti + 34, (10945 * ti * ti + 13751 * ti + 4318) / 2 + di * (55 * ti + 34),
       "(10945t^2+13751t+4318)/2+d(55t+34)"},
  };
  FibMorphicHypothesis h;
  h.total = 6491 * ti * ti + 8099 * ti + 2524 + di * (55 * ti + 34);
  h.formula = "6491t^2+8099t+2524+d(55t+34)";
  std::map<std::int64_t, PeriodHypothesis> grouped;
  for (const auto& r : rows) {
    auto& g = grouped[r.period];
    g.period = static_cast<std::uint64_t>(r.period);
    g.predicted += r.count;
    g.formula = g.formula.empty() ? r.formula : g.formula + " + " + r.formula;
  }
  for (auto& [period, g] : grouped) h.per_period.push_back(std::move(g));
  return h;
}

HypothesisAudit audit_fib_morphic(std::size_t t, std::size_t d) {
  const Word w = gen_fib_morphic(t, d, 55);
  const auto factors = enumerate_rational_power_factors(w);
  const auto hypothesis = fib_morphic_hypothesis(t, d, 55);

  std::map<std::uint64_t, std::int64_t> measured;
  for (const auto& f : factors.factors) ++measured[f.root_len];

  HypothesisAudit audit;
  audit.t = t;
  audit.d = d;
  audit.length = w.size();
  audit.measured = static_cast<std::int64_t>(factors.factors.size());
  audit.predicted = hypothesis->total;
  audit.confirmed = audit.measured == audit.predicted;

  std::map<std::uint64_t, PeriodAuditRow> rows;
  for (const auto& p : hypothesis->per_period) {
    rows[p.period] = {p.period, p.predicted, 0, true, false};
  }
  for (const auto& [period, count] : measured) {
    auto& row = rows[period];
    row.period = period;
    row.measured = count;
  }
  for (auto& [period, row] : rows) {
    row.confirmed = row.predicted == row.measured;
    audit.periods.push_back(row);
  }
  return audit;
}

}  // namespace ratpow
