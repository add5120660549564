#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratpow/word.hpp"

namespace ratpow {

enum class Family { wn, fib_morphic };

struct ConstructionSpec {
  Family family = Family::wn;
  std::size_t n = 0;            // wn
  std::size_t t = 0;            // fib_morphic
  std::size_t d = 0;            // fib_morphic, 0 <= d <= t-1
  std::size_t prefix_len = 55;  // fib_morphic, one of 13, 21, 34, 55
};

/// (a^n b a^(n-1) b)^4 a^(n-1), of length 9n + 3.
Word gen_wn(std::size_t n);

struct ClassCount {
  Word class_key;
  std::uint64_t count = 0;
  std::string formula;
};

struct WnExpectation {
  std::uint64_t total = 0;          // 9n² + 9n + 1
  std::vector<ClassCount> classes;  // a, a^(n-1)ba, a^(n-1)b, a^(n-1)ba^nb
};

/// Closed-form count for gen_wn(n). Throws Error("formula range") for n < 2.
WnExpectation expected_rp_wn(std::size_t n);

/// Prefix of the fixed point of 0 -> 01, 1 -> 0, letters 0 = 'a', 1 = 'b'.
Word fibonacci_prefix(std::size_t len);

/// Q^4 P with Q = φ_t(f[0..prefix_len)) and P = φ_t(f[0..p)) a^d, where
/// φ_t(0) = a^t b and φ_t(1) = a^(t-1) b. For prefix_len 55 the tail prefix is
/// p = 17; for 13, 21, 34 it is round(17 prefix_len / 55).
Word gen_fib_morphic(std::size_t t, std::size_t d, std::size_t prefix_len);
std::size_t fib_tail_prefix_len(std::size_t prefix_len);

Word generate(const ConstructionSpec& spec);

/// Closed-form length, checked against the generated word by tests.
std::size_t construction_length(const ConstructionSpec& spec);

/// Draft-table counts for the 55-prefix family. Unverified by construction:
/// every value here is a hypothesis to be audited, never an expectation.
struct PeriodHypothesis {
  std::uint64_t period = 0;
  std::int64_t predicted = 0;
  std::string formula;
};

struct FibMorphicHypothesis {
  std::int64_t total = 0;
  std::string formula;
  std::vector<PeriodHypothesis> per_period;  // grouped by period value
};

/// Present only for prefix_len 55.
std::optional<FibMorphicHypothesis> fib_morphic_hypothesis(std::size_t t, std::size_t d,
                                                           std::size_t prefix_len);

struct PeriodAuditRow {
  std::uint64_t period = 0;
  std::int64_t predicted = 0;  // 0 for periods the table does not list
  std::int64_t measured = 0;
  bool listed = false;
  bool confirmed = false;
};

struct HypothesisAudit {
  std::size_t t = 0;
  std::size_t d = 0;
  std::size_t length = 0;
  std::int64_t measured = 0;
  std::int64_t predicted = 0;
  bool confirmed = false;
  std::vector<PeriodAuditRow> periods;
};

/// Measures RP(W_{t,d}) by enumeration and compares with the draft formulas.
HypothesisAudit audit_fib_morphic(std::size_t t, std::size_t d);

}  // namespace ratpow
