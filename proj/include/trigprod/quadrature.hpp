#ifndef TRIGPROD_QUADRATURE_HPP
#define TRIGPROD_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigprod {

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  double bracket_width = 0.0;
};

/// Quadrature that could not reach the requested tolerance; carries the best
/// estimate obtained.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, IntegralResult best)
      : std::runtime_error(what), best_(best) {}
  const IntegralResult& best() const { return best_; }

 private:
  IntegralResult best_;
};

namespace detail {

struct TsNode {
  double delta;   // distance of the abscissa from the interval endpoint, in [0,1] units
  double weight;
};

struct TsTable {
  double center_weight;
  std::vector<std::vector<TsNode>> levels;  // level L holds the nodes new at step 2^-L
};

const TsTable& tanh_sinh_table();

struct Gauss15 {
  std::array<double, 15> node;
  std::array<double, 15> weight;
};

const Gauss15& gauss15();

inline constexpr int kTanhSinhLevelCap = 12;

}  // namespace detail

/// Double-exponential (tanh-sinh) quadrature on (a, b). Tolerates integrable
/// endpoint singularities (log sin at 0, cot blowup near 1); tol is absolute.
template <class F>
IntegralResult integrate_singular(F&& f, double a, double b, double tol) {
  if (!(a < b)) throw std::domain_error("integrate_singular requires a < b");
  if (!(tol > 0)) throw std::domain_error("integrate_singular requires tol > 0");
  const auto& table = detail::tanh_sinh_table();
  const double r = 0.5 * (b - a);
  const double mid = a + r;

  IntegralResult res;
  double weighted_sum = table.center_weight * f(mid);
  res.evaluations = 1;
  double h = 1.0;
  double prev = 0.0;
  for (int level = 0; level <= detail::kTanhSinhLevelCap; ++level) {
    for (const auto& node : table.levels[static_cast<std::size_t>(level)]) {
      const double off = r * node.delta;
      weighted_sum += node.weight * (f(a + off) + f(b - off));
      res.evaluations += 2;
    }
    const double estimate = h * r * weighted_sum;
    if (level >= 2) {
      const double diff = std::fabs(estimate - prev);
      if (diff <= tol && std::isfinite(estimate)) {
        res.value = estimate;
        res.error_estimate = std::fmax(diff, std::fabs(estimate) * 1e-16);
        return res;
      }
    }
    prev = estimate;
    h *= 0.5;
  }
  res.value = prev;
  res.error_estimate = std::fabs(prev);
  throw accuracy_error("tanh-sinh did not converge to tol within level cap", res);
}

struct AdaptiveOptions {
  int presplit = 1;    // initial uniform panels
  int max_depth = 40;  // bisection depth cap per panel
};

/// Adaptive bisection with 15-point Gauss-Legendre panels. Panel nodes are
/// interior, so isolated log-zeros of the integrand are never sampled.
/// tol is absolute.
template <class F>
IntegralResult integrate_adaptive(F&& f, double a, double b, double tol,
                                  const AdaptiveOptions& opts = {}) {
  if (!(a < b)) throw std::domain_error("integrate_adaptive requires a < b");
  if (!(tol > 0)) throw std::domain_error("integrate_adaptive requires tol > 0");
  const auto& rule = detail::gauss15();

  std::int64_t evals = 0;
  auto panel = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double r = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += rule.weight[static_cast<std::size_t>(i)] * f(c + r * rule.node[static_cast<std::size_t>(i)]);
    evals += 15;
    return s * r;
  };

  struct Panel {
    double lo, hi, q;
    int depth;
  };
  std::vector<Panel> stack;
  const int presplit = std::max(1, opts.presplit);
  stack.reserve(static_cast<std::size_t>(presplit) + 64);
  for (int i = 0; i < presplit; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / presplit;
    const double hi = (i + 1 == presplit) ? b : a + (b - a) * static_cast<double>(i + 1) / presplit;
    stack.push_back({lo, hi, panel(lo, hi), 0});
  }

  IntegralResult res;
  const double width = b - a;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.lo + p.hi);
    const double ql = panel(p.lo, m);
    const double qr = panel(m, p.hi);
    const double refined = ql + qr;
    const double diff = std::fabs(p.q - refined);
    const double share = tol * (p.hi - p.lo) / width;
    const double floor = 8e-16 * (std::fabs(ql) + std::fabs(qr));
    if (diff <= std::fmax(share, floor) || m <= p.lo || m >= p.hi) {
      res.value += refined;
      res.error_estimate += diff / 15.0;
      continue;
    }
    if (p.depth >= opts.max_depth) {
      res.value += refined;
      res.error_estimate += diff;
      for (const Panel& rest : stack) res.value += rest.q;
      res.evaluations = evals;
      throw accuracy_error("adaptive quadrature hit subdivision depth cap", res);
    }
    stack.push_back({p.lo, m, ql, p.depth + 1});
    stack.push_back({m, p.hi, qr, p.depth + 1});
  }
  res.evaluations = evals;
  return res;
}

/// Bracket-preserving root refinement: bisection with secant acceleration.
/// The returned root is the best-|f| point seen, so its residual is the
/// minimum over the trace. Requires a sign change on [lo, hi].
RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                     const std::function<void(int, double, double, double)>& on_iterate = {});

}  // namespace trigprod

#endif
