#include "trigprod/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace trigprod {

namespace detail {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// delta = 1 - tanh((pi/2) sinh t) computed overflow-free; nodes are dropped
// once delta underflows past 1e-290 (their weight is far below any use).
bool make_node(double t, TsNode& out) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2.0 * u);
  const double delta = 2.0 * e / (1.0 + e);
  if (delta < 1e-290) return false;
  out.delta = delta;
  out.weight = kHalfPi * std::cosh(t) * delta * (2.0 - delta);
  return true;
}

TsTable build_tanh_sinh_table() {
  TsTable table;
  table.center_weight = kHalfPi;
  table.levels.resize(kTanhSinhLevelCap + 1);
  // Level 0: integer t >= 1. Level L: odd multiples of 2^-L.
  for (int level = 0; level <= kTanhSinhLevelCap; ++level) {
    const double h = std::ldexp(1.0, -level);
    const std::int64_t step = level == 0 ? 1 : 2;
    const std::int64_t start = 1;
    for (std::int64_t k = start;; k += step) {
      TsNode node{};
      if (!make_node(static_cast<double>(k) * h, node)) break;
      table.levels[static_cast<std::size_t>(level)].push_back(node);
    }
  }
  return table;
}

// Legendre P15 roots/weights by Newton iteration on the recurrence.
Gauss15 build_gauss15() {
  constexpr int n = 15;
  Gauss15 rule{};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.node[static_cast<std::size_t>(i)] = -x;
    rule.weight[static_cast<std::size_t>(i)] = w;
    rule.node[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weight[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace

const TsTable& tanh_sinh_table() {
  static const TsTable table = build_tanh_sinh_table();
  return table;
}

const Gauss15& gauss15() {
  static const Gauss15 rule = build_gauss15();
  return rule;
}

}  // namespace detail

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                     const std::function<void(int, double, double, double)>& on_iterate) {
  if (!(lo < hi)) throw std::domain_error("find_root requires lo < hi");
  if (!(tol > 0)) throw std::domain_error("find_root requires tol > 0");
  double flo = f(lo);
  double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw accuracy_error("find_root: endpoint evaluation is NaN", {});
  }
  if (flo == 0.0) return {lo, 0.0, 0.0};
  if (fhi == 0.0) return {hi, 0.0, 0.0};
  if ((flo > 0) == (fhi > 0)) {
    throw std::domain_error("find_root requires a sign change on [lo, hi]");
  }

  double best_x = std::fabs(flo) <= std::fabs(fhi) ? lo : hi;
  double best_f = std::fabs(flo) <= std::fabs(fhi) ? flo : fhi;

  int iter = 0;
  bool force_bisect = false;
  while (hi - lo > tol) {
    ++iter;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval no longer refinable in double
    double candidate = mid;
    if (!force_bisect && fhi != flo) {
      const double secant = hi - fhi * (hi - lo) / (fhi - flo);
      // Keep the step inside the bracket with a margin so progress is real.
      const double margin = 0.01 * (hi - lo);
      if (secant > lo + margin && secant < hi - margin) candidate = secant;
    }
    const double fc = f(candidate);
    if (std::isnan(fc)) {
      throw accuracy_error("find_root: evaluation is NaN", {});
    }
    if (std::fabs(fc) < std::fabs(best_f)) {
      best_f = fc;
      best_x = candidate;
    }
    if (on_iterate) on_iterate(iter, best_x, best_f, hi - lo);
    if (fc == 0.0) return {candidate, 0.0, 0.0};
    if ((fc > 0) == (flo > 0)) {
      lo = candidate;
      flo = fc;
    } else {
      hi = candidate;
      fhi = fc;
    }
    // Alternate in a bisection step so the bracket provably shrinks.
    force_bisect = !force_bisect && candidate != mid;
    if (candidate == mid) force_bisect = false;
  }
  return {best_x, best_f, hi - lo};
}

}  // namespace trigprod
