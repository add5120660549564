#include <algorithm>
#include <cmath>
#include <random>

#include "ratpow/bounds.hpp"

namespace ratpow {
namespace {

double clamp_domain(double v, double lo, double hi, const char* what) {
  if (!(v >= lo - kBoundTolerance && v <= hi + kBoundTolerance)) throw Error(what);
  return std::clamp(v, lo, hi);
}

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double eval_F(double x, double y) {
  if (x < 0.0 || y < 0.0) throw Error("F requires nonnegative arguments");
  if (y >= x) return (y - 0.5 * x) * x;
  return 0.5 * y * y;
}

double eval_phi(double r) {
  r = clamp_domain(r, 0.0, 1.0, "phi requires r in [0, 1]");
  if (r <= 0.5) return 0.5 * r * r;
  return 0.5 * (1.0 - r) * (3.0 * r - 1.0);
}

double eval_V(double t) {
  t = clamp_domain(t, 1.0, 2.0, "V requires T in [1, 2]");
  if (t <= 4.0 / 3.0) return (2.0 - t) * (3.0 * t - 2.0) / 4.0;
  if (t <= 1.5) return 1.5 * t * t - 4.0 * t + 3.0;
  return 0.5 * (3.0 - t) * (t - 1.0);
}

double eval_W(double a, double s) {
  if (!(a > 0.0) || a > s + kBoundTolerance) throw Error("W requires 0 < a <= s");
  const double ratio = a / s;
  if (ratio <= 1.0 / 3.0) return 0.25 * s * s + 0.5 * a * s - 0.75 * a * a;
  if (ratio <= 0.5) return 0.5 * s * s - a * s + 1.5 * a * a;
  return a * s - 0.5 * a * a;
}

WUValues eval_W_and_U(double a, double s, double big_s) {
  if (!(a > 0.0) || a > s || s > 0.5 || a > big_s || big_s > 0.5) {
    throw Error("W/U require 0 < a <= s <= 1/2 and a <= S <= 1/2");
  }
  WUValues out;
  out.w = eval_W(a, s);
  out.u1 = 0.5 * a * a + 0.5 * (big_s - a) * (big_s - a);
  if (2.0 * a <= big_s) out.u2 = 1.5 * a * a + 0.5 * (big_s - 2.0 * a) * (big_s - 2.0 * a);
  if (3.0 * a <= big_s) out.u3 = 3.0 * a * a + 0.5 * (big_s - 3.0 * a) * (big_s - 3.0 * a);
  out.u4 = eval_W(a, big_s);
  return out;
}

double packing_value(const std::vector<std::pair<double, double>>& parts) {
  double total = 0.0;
  for (const auto& [x, y] : parts) total += eval_F(x, y);
  return total;
}

PackingSample sample_packing_max(double s, double big_b, std::size_t max_parts,
                                 std::size_t trials, std::uint64_t seed) {
  if (!(s > 0.0) || s > 0.5) throw Error("packing requires 0 < s <= 1/2");
  if (big_b < s - kBoundTolerance) throw Error("packing infeasible: B < s");
  if (big_b > 2.0 * s + kBoundTolerance) throw Error("packing requires B <= 2s");
  if (max_parts == 0) throw Error("packing requires max_parts >= 1");

  PackingSample best;
  std::vector<std::pair<double, double>> family;
  auto consider = [&] {
    const double v = packing_value(family);
    if (v > best.value) {
      best.value = v;
      best.parts = family;
    }
  };

  // Equal splits of the y-budget; x = s - y is optimal for a fixed y.
  for (std::size_t k = 1; k <= max_parts; ++k) {
    const double y = std::min(s, big_b / static_cast<double>(k));
    family.assign(k, {s - y, y});
    consider();
  }
  // Equality profiles (N/6, N/3) x 3 and (N/4, N/4) x 4, scaled to (s, B).
  if (max_parts >= 3) {
    const double y = std::min(2.0 * s / 3.0, big_b / 3.0);
    family.assign(3, {s / 3.0, y});
    if (s / 3.0 + y <= s) consider();
  }
  if (max_parts >= 4) {
    const double y = std::min(0.5 * s, big_b / 4.0);
    family.assign(4, {0.5 * s, y});
    consider();
  }
  // k equal large parts plus one small remainder part.
  constexpr std::size_t kRemainderSteps = 64;
  for (std::size_t k = 1; k < max_parts; ++k) {
    const double z_max = std::min(0.5 * s, big_b);
    for (std::size_t step = 0; step <= kRemainderSteps; ++step) {
      const double z = z_max * static_cast<double>(step) / kRemainderSteps;
      const double y = std::min(s, (big_b - z) / static_cast<double>(k));
      family.assign(k, {s - y, y});
      family.emplace_back(s - z, z);
      consider();
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % max_parts);
    weights.resize(k);
    double sum = 0.0;
    for (auto& w : weights) {
      w = unit_real(rng) + 1e-9;
      sum += w;
    }
    const double shrink = unit_real(rng);
    const double budget = big_b * (1.0 - shrink * shrink * shrink);
    family.clear();
    for (double w : weights) {
      const double y = std::min(s, w / sum * budget);
      const double x = (rng() & 1) ? s - y : unit_real(rng) * (s - y);
      family.emplace_back(x, y);
    }
    consider();
  }
  return best;
}

}  // namespace ratpow
