#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratpow/analysis.hpp"
#include "ratpow/word.hpp"

namespace ratpow {

inline constexpr double kBoundTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Envelope functions. All are piecewise quadratics; inputs outside the stated
// domains throw Error. Domain edges accept a 1e-12 slack and are clamped.
// ---------------------------------------------------------------------------

/// F(x, y) = (y - x/2) x when y >= x, else y²/2. Homogeneous of degree 2, so
/// F(ℓ, m) = N² F(ℓ/N, m/N).
double eval_F(double x, double y);

/// φ(r) = r²/2 on [0, 1/2], (1 - r)(3r - 1)/2 on [1/2, 1]: the best F(x, rs)/s²
/// over 0 <= x <= s - rs.
double eval_phi(double r);

/// Closed-form upper envelope of the packing value, T in [1, 2].
double eval_V(double t);

/// W(a, s) = s² V(1 + a/s) in its three-branch form, 0 < a <= s.
double eval_W(double a, double s);

struct WUValues {
  double w = 0.0;
  double u1 = 0.0;
  std::optional<double> u2;  // requires 2a <= S
  std::optional<double> u3;  // requires 3a <= S
  double u4 = 0.0;           // W(a, S)
};

/// Requires 0 < a <= s <= 1/2 and a <= S <= 1/2.
WUValues eval_W_and_U(double a, double s, double big_s);

// ---------------------------------------------------------------------------
// Packing value P(s, B) = max Σ F(x_j, y_j) s.t. x_j + y_j <= s, Σ y_j <= B.
// ---------------------------------------------------------------------------

struct PackingSample {
  double value = 0.0;
  std::vector<std::pair<double, double>> parts;  // (x_j, y_j) of the best family
};

/// Lower estimate of P(s, B) from structured families (equal splits, the
/// three- and four-part equality profiles, split-plus-remainder scans) and
/// `trials` random families of at most `max_parts` parts. Deterministic in seed.
PackingSample sample_packing_max(double s, double big_b, std::size_t max_parts,
                                 std::size_t trials, std::uint64_t seed);

/// Σ F over a family; the family must satisfy the packing constraints.
double packing_value(const std::vector<std::pair<double, double>>& parts);

// ---------------------------------------------------------------------------
// Word-level checks.
// ---------------------------------------------------------------------------

/// One checked inequality lhs <= rhs, reduced to its worst instance.
struct InequalityCheck {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = true;
  std::string where;  // instance that attains the worst margin

  double margin() const noexcept { return rhs - lhs; }
};

struct ClassBoundEntry {
  Word class_key;
  std::size_t root_len = 0;
  std::size_t circuits = 0;
  std::size_t qclass_size = 0;
  std::size_t longest_member = 0;
  // min over 1 <= i <= ℓ of i - |members of length 2ℓ + M - i|
  std::ptrdiff_t long_member_slack = 0;
  std::size_t class_bound = 0;  // M(M+1)/2 or ℓ(ℓ+1)/2 + ℓ(M-ℓ)
  bool class_bound_tight = false;
  double f_normalized = 0.0;    // F(ℓ/N, m/N)
};

struct BoundReport {
  std::string word_id;
  std::size_t n = 0;
  std::size_t big_n = 0;  // N = n + 1
  std::size_t rp = 0;
  std::vector<ClassBoundEntry> classes;
  std::vector<InequalityCheck> checks;
  double sum_f_normalized = 0.0;
  double sum_f_unnormalized = 0.0;

  bool all_pass() const;
  const InequalityCheck* find(const std::string& id) const;
};

/// Runs every per-word inequality on an analyzed word. Failures are entries,
/// never exceptions. The O(n) term of the quadratic bound is pinned to n/2:
/// each class exceeds F(ℓ, m) by at most m/2, and Σ m <= n.
BoundReport check_word_bounds(const WordAnalysis& analysis, std::string word_id = {});
BoundReport check_word_bounds(const Word& w);

// ---------------------------------------------------------------------------
// Continuous-region checks.
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::size_t resolution = 200;    // steps per unit-half axis of the one-eighth grid
  std::size_t trials = 100000;     // random families per packing cell
  std::uint64_t seed = 0;
  std::size_t packing_grid = 50;   // (s, B) cells per axis
  std::size_t max_parts = 6;
  std::size_t threads = 0;         // 0: hardware concurrency
};

struct PackingGridResult {
  std::size_t cells = 0;
  std::uint64_t samples = 0;
  double worst_excess = 0.0;  // max over cells of sampled P - s² V(B/s)
  double worst_s = 0.0;
  double worst_b = 0.0;
  std::size_t violations = 0;
  double equality_sample = 0.0;   // sampled P(1/2, 1)
  double equality_profile = 0.0;  // three parts at (1/6, 1/3)
};

struct OneEighthGridResult {
  std::size_t points = 0;
  double max_value = 0.0;
  std::array<double, 3> argmax{};  // (a, s, y), first in scan order
  std::size_t maximizers = 0;      // points within tolerance of the max
  std::array<double, 3> nearest_maximizer{};  // to (1/4, 1/4, 0)
  double nearest_distance = 0.0;
  double grid_step = 0.0;
  std::size_t violations = 0;
};

struct PhiStepResult {
  std::size_t pairs = 0;
  double max_violation = 0.0;  // max of lhs - rhs over the grid
  double at_ri = 0.0;
  double at_rj = 0.0;
};

struct UTableResult {
  std::array<double, 4> max_value{};  // max F(a, 1-a-S) + U_j(a, S)
  std::size_t points = 0;
};

struct OptimizationReport {
  VerifyOptions options;
  PackingGridResult packing;
  OneEighthGridResult one_eighth;
  PhiStepResult phi_steps;
  UTableResult u_table;

  bool all_pass() const;
};

/// Throws Error for resolution < 50.
OptimizationReport verify_optimization_lemmas(const VerifyOptions& options);
OptimizationReport verify_optimization_lemmas(std::size_t grid_resolution, std::size_t trials,
                                              std::uint64_t seed);

}  // namespace ratpow
