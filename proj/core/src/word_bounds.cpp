#include <algorithm>
#include <cmath>
#include <string>

#include "ratpow/bounds.hpp"

namespace ratpow {
namespace {

// Keeps the instance with the smallest rhs - lhs.
class WorstCase {
 public:
  WorstCase(std::string id, double tolerance) : id_(std::move(id)), tolerance_(tolerance) {}

  void observe(double lhs, double rhs, std::string where) {
    if (!seen_ || rhs - lhs < best_.margin()) {
      best_.lhs = lhs;
      best_.rhs = rhs;
      best_.where = std::move(where);
      seen_ = true;
    }
  }

  void emit(std::vector<InequalityCheck>& out) {
    best_.id = id_;
    if (!seen_) {
      best_.where = "vacuous";
      out.push_back(best_);
      return;
    }
    best_.pass = best_.margin() >= -tolerance_ * std::max(1.0, std::abs(best_.rhs));
    out.push_back(best_);
  }

 private:
  std::string id_;
  double tolerance_;
  bool seen_ = false;
  InequalityCheck best_;
};

std::size_t class_bound(std::size_t root_len, std::size_t circuits) {
  if (circuits <= root_len) return circuits * (circuits + 1) / 2;
  return root_len * (root_len + 1) / 2 + root_len * (circuits - root_len);
}

double as_double(std::size_t v) { return static_cast<double>(v); }

}  // namespace

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.pass; });
}

const InequalityCheck* BoundReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

BoundReport check_word_bounds(const WordAnalysis& analysis, std::string word_id) {
  BoundReport report;
  report.word_id = word_id.empty() ? analysis.word().text() : std::move(word_id);
  const std::size_t n = analysis.length();
  const std::size_t big_n = n + 1;
  report.n = n;
  report.big_n = big_n;
  report.rp = analysis.breakdown.total;
  const double nd = as_double(big_n);

  // Circuit counts per order and in total.
  WorstCase sc_order("circuits.per_order_gap", 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    sc_order.observe(as_double(analysis.sc.per_order[i - 1]),
                     static_cast<double>(analysis.sc.complexity_gap[i - 1]),
                     "order " + std::to_string(i));
  }
  WorstCase sc_total("circuits.total_le_n", 0.0);
  sc_total.observe(as_double(analysis.sc.total), as_double(n), "all orders");

  // Per-class checks on QClass length profiles.
  WorstCase no_long("class.no_long_members", 0.0);
  WorstCase long_counts("class.long_member_counts", 0.0);
  WorstCase per_class("class.size_bound", 0.0);
  WorstCase span("class.two_root_plus_circuits", 0.0);
  WorstCase overlap("overlap.interval_sum", 0.0);

  // Prefix sums of sc_q turn Σ_i |I_i ∩ I_j| into a range sum over I_j.
  std::vector<std::size_t> sc_prefix(n + 1, 0);
  for (std::size_t q = 1; q <= n; ++q) sc_prefix[q] = sc_prefix[q - 1] + analysis.sc.per_order[q - 1];
  auto overlap_sum = [&](const ClassStats& c) {
    const std::size_t hi = std::min(c.active_end() - 1, n);
    if (c.circuits == 0 || c.root_len > hi) return std::size_t{0};
    return sc_prefix[hi] - sc_prefix[c.root_len - 1];
  };

  std::size_t sum_circuits = 0;
  for (const auto& c : analysis.classes) {
    const auto& profile = analysis.breakdown.per_class_length_profile.at(c.class_key);
    const std::string key = c.class_key.text();
    ClassBoundEntry entry;
    entry.class_key = c.class_key;
    entry.root_len = c.root_len;
    entry.circuits = c.circuits;
    entry.qclass_size = c.qclass_size;
    entry.longest_member = profile.empty() ? 0 : profile.rbegin()->first;

    const std::size_t ell = c.root_len;
    const std::size_t big_m = c.circuits;
    no_long.observe(as_double(entry.longest_member), as_double(2 * ell + big_m - 1), key);

    std::ptrdiff_t slack = static_cast<std::ptrdiff_t>(ell);
    for (std::size_t i = 1; i <= ell; ++i) {
      const std::size_t len = 2 * ell + big_m - i;
      const auto it = profile.find(len);
      const std::size_t count = it == profile.end() ? 0 : it->second;
      const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(count);
      if (s < slack) slack = s;
      long_counts.observe(as_double(count), as_double(i), key + " at length " + std::to_string(len));
    }
    entry.long_member_slack = slack;

    entry.class_bound = class_bound(ell, big_m);
    entry.class_bound_tight = entry.class_bound == entry.qclass_size;
    per_class.observe(as_double(entry.qclass_size), as_double(entry.class_bound), key);

    span.observe(as_double(2 * ell + big_m), nd, key);
    overlap.observe(as_double(overlap_sum(c)), nd - 2.0 * as_double(ell), key);

    entry.f_normalized = eval_F(as_double(ell) / nd, as_double(big_m) / nd);
    report.sum_f_normalized += entry.f_normalized;
    report.sum_f_unnormalized += eval_F(as_double(ell), as_double(big_m));
    sum_circuits += big_m;
    report.classes.push_back(std::move(entry));
  }

  WorstCase circuit_sum("overlap.sum_circuits_le_n", 0.0);
  circuit_sum.observe(as_double(sum_circuits), as_double(n), "all classes");

  WorstCase pivot("overlap.pivot", 0.0);
  if (!analysis.classes.empty()) {
    const auto& first = analysis.classes.front();
    pivot.observe(as_double(overlap_sum(first) - first.circuits),
                  nd - 2.0 * as_double(first.root_len) - as_double(first.circuits),
                  first.class_key.text());
  }

  WorstCase eighth("envelope.sum_f_le_eighth", kBoundTolerance);
  eighth.observe(report.sum_f_normalized, 0.125, "sum over classes");
  WorstCase pinned("envelope.rp_le_sum_f_plus_half_n", kBoundTolerance);
  pinned.observe(as_double(report.rp), report.sum_f_unnormalized + 0.5 * as_double(n), "pinned O(n) = n/2");
  WorstCase quadratic("envelope.rp_le_eighth_n2_plus_half_n", kBoundTolerance);
  quadratic.observe(as_double(report.rp), nd * nd / 8.0 + 0.5 * as_double(n), "pinned O(n) = n/2");

  for (WorstCase* c : {&sc_order, &sc_total, &no_long, &long_counts, &per_class, &circuit_sum, &overlap,
                       &pivot, &span, &eighth, &pinned, &quadratic}) {
    c->emit(report.checks);
  }
  return report;
}

BoundReport check_word_bounds(const Word& w) { return check_word_bounds(analyze_word(w)); }

}  // namespace ratpow
