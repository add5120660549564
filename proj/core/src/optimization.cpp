#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ratpow/bounds.hpp"

namespace ratpow {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

struct CellOutcome {
  double excess = 0.0;
  double s = 0.0;
  double b = 0.0;
};

PackingGridResult check_packing_grid(const VerifyOptions& opt) {
  const std::size_t g = opt.packing_grid;
  const std::size_t cells = g * g;
  std::vector<CellOutcome> outcomes(cells);
  std::atomic<std::size_t> next{0};

  // Per-cell seeds make the merged result independent of scheduling.
  auto work = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const std::size_t si = cell / g;
      const std::size_t bi = cell % g;
      const double s = 0.5 * static_cast<double>(si + 1) / static_cast<double>(g);
      const double t = 1.0 + static_cast<double>(bi) / static_cast<double>(g - 1);
      const double b = s * t;
      const auto sample = sample_packing_max(s, b, opt.max_parts, opt.trials,
                                             splitmix64(opt.seed ^ splitmix64(cell)));
      outcomes[cell] = {sample.value - s * s * eval_V(t), s, b};
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(worker_count(opt.threads), cells);
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  PackingGridResult out;
  out.cells = cells;
  out.samples = static_cast<std::uint64_t>(cells) * opt.trials;
  out.worst_excess = -1.0;
  for (const auto& c : outcomes) {
    if (c.excess > kBoundTolerance) ++out.violations;
    if (c.excess > out.worst_excess) {
      out.worst_excess = c.excess;
      out.worst_s = c.s;
      out.worst_b = c.b;
    }
  }
  out.equality_sample = sample_packing_max(0.5, 1.0, opt.max_parts, opt.trials, splitmix64(opt.seed)).value;
  out.equality_profile = packing_value({{1.0 / 6, 1.0 / 3}, {1.0 / 6, 1.0 / 3}, {1.0 / 6, 1.0 / 3}});
  return out;
}

OneEighthGridResult check_one_eighth_grid(const VerifyOptions& opt) {
  // a = i h, s = j h, y = k h with h = 1/(2R), 1 <= i <= j <= R, 0 <= k <= R - j.
  const std::size_t r = opt.resolution;
  const double h = 0.5 / static_cast<double>(r);
  OneEighthGridResult out;
  out.grid_step = h;
  out.max_value = -1.0;

  auto value_at = [&](std::size_t i, std::size_t j, std::size_t k) {
    const double a = static_cast<double>(i) * h;
    const double s = static_cast<double>(j) * h;
    const double y = static_cast<double>(k) * h;
    const double rest = static_cast<double>(2 * r - i - j - k) * h;  // 1 - a - s - y
    return eval_F(a, rest) + eval_W(a, s) + 0.5 * y * y;
  };

  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i; j <= r; ++j) {
      for (std::size_t k = 0; k + j <= r; ++k) {
        const double v = value_at(i, j, k);
        ++out.points;
        if (v > 0.125 + kBoundTolerance) ++out.violations;
        if (v > out.max_value) {
          out.max_value = v;
          out.argmax = {static_cast<double>(i) * h, static_cast<double>(j) * h, static_cast<double>(k) * h};
        }
      }
    }
  }

  // Second pass: the maximizing set and its point nearest to (1/4, 1/4, 0).
  out.nearest_distance = INFINITY;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i; j <= r; ++j) {
      for (std::size_t k = 0; k + j <= r; ++k) {
        if (value_at(i, j, k) < out.max_value - kBoundTolerance) continue;
        ++out.maximizers;
        const std::array<double, 3> p{static_cast<double>(i) * h, static_cast<double>(j) * h,
                                      static_cast<double>(k) * h};
        const double d = std::hypot(p[0] - 0.25, p[1] - 0.25, p[2]);
        if (d < out.nearest_distance) {
          out.nearest_distance = d;
          out.nearest_maximizer = p;
        }
      }
    }
  }
  return out;
}

PhiStepResult check_phi_steps(const VerifyOptions& opt) {
  const std::size_t r = opt.resolution;
  const double h = 0.5 / static_cast<double>(r);
  PhiStepResult out;
  out.max_violation = -INFINITY;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const double ri = static_cast<double>(i) * h;
      const double rj = static_cast<double>(j) * h;
      const double lhs = eval_phi(ri) + eval_phi(rj);
      const double rhs = (i + j <= r) ? eval_phi(ri + rj)
                                      : eval_phi(0.5) + eval_phi(static_cast<double>(i + j - r) * h);
      ++out.pairs;
      if (lhs - rhs > out.max_violation) {
        out.max_violation = lhs - rhs;
        out.at_ri = ri;
        out.at_rj = rj;
      }
    }
  }
  return out;
}

UTableResult check_u_table(const VerifyOptions& opt) {
  const std::size_t r = opt.resolution;
  const double h = 0.5 / static_cast<double>(r);
  UTableResult out;
  out.max_value.fill(-INFINITY);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i; j <= r; ++j) {
      const double a = static_cast<double>(i) * h;
      const double big_s = static_cast<double>(j) * h;
      const double f = eval_F(a, static_cast<double>(2 * r - i - j) * h);
      const WUValues u = eval_W_and_U(a, a, big_s);
      ++out.points;
      out.max_value[0] = std::max(out.max_value[0], f + u.u1);
      if (u.u2) out.max_value[1] = std::max(out.max_value[1], f + *u.u2);
      if (u.u3) out.max_value[2] = std::max(out.max_value[2], f + *u.u3);
      out.max_value[3] = std::max(out.max_value[3], f + u.u4);
    }
  }
  return out;
}

}  // namespace

bool OptimizationReport::all_pass() const {
  const bool u_ok = std::all_of(u_table.max_value.begin(), u_table.max_value.end(),
                                [](double v) { return v <= 0.125 + kBoundTolerance; });
  return packing.violations == 0 && one_eighth.violations == 0 &&
         phi_steps.max_violation <= kBoundTolerance && u_ok;
}

OptimizationReport verify_optimization_lemmas(const VerifyOptions& options) {
  if (options.resolution < 50) throw Error("resolution must be at least 50");
  if (options.packing_grid < 2) throw Error("packing grid must be at least 2");
  OptimizationReport report;
  report.options = options;
  report.packing = check_packing_grid(options);
  report.one_eighth = check_one_eighth_grid(options);
  report.phi_steps = check_phi_steps(options);
  report.u_table = check_u_table(options);
  return report;
}

OptimizationReport verify_optimization_lemmas(std::size_t grid_resolution, std::size_t trials,
                                              std::uint64_t seed) {
  VerifyOptions options;
  options.resolution = grid_resolution;
  options.trials = trials;
  options.seed = seed;
  return verify_optimization_lemmas(options);
}

}  // namespace ratpow
