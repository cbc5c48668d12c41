#include "trigprod/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trigprod/parallel.hpp"
#include "trigprod/pointeval.hpp"
#include "trigprod/quadrature.hpp"

namespace trigprod {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Window placement only: steers the refinement region around the dominant
// peak of Pi_n at t ~ w0/n. Norm correctness does not depend on its digits.
constexpr double kPeakCenter = 0.7912265710;

double log_profile_p(int n, double t) { return log_abs_pn(n, 2.0 * kPi * t).log_value(); }
double log_profile_q(int n, double t) { return log_abs_qn(n, 2.0 * kPi * t).log_value(); }

// Golden-section maximization of g on [lo, hi] down to width x_tol.
double golden_max(const std::function<double(double)>& g, double lo, double hi, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = g(x1);
    }
  }
  return std::fmax(f1, f2);
}

struct Piece {
  double lo, hi;
  int presplit;
};

// Shared implementation of the L^p quadrature norms. The peak value M is
// factored out and (profile/M)^p is integrated piecewise, so the arithmetic
// never leaves [0, 1] while the result magnitude can be e^{Kn} or 2^n.
NormResult lp_norm_impl(int n, double p, double tol, bool cosine) {
  if (n < 1) throw std::domain_error("lp norm requires n >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("lp norm requires finite p >= 1");
  }
  if (!(tol > 0)) throw std::domain_error("lp norm requires tol > 0");

  const auto profile = [n, cosine](double t) {
    return cosine ? log_profile_q(n, t) : log_profile_p(n, t);
  };

  // Refinement window around the dominant maximum, width ~ n^{-3/2}.
  const double halfwidth = 10.0 * std::pow(static_cast<double>(n), -1.5);
  const double center = cosine ? 0.0 : kPeakCenter / n;
  const double w_lo = std::clamp(center - halfwidth, 0.0, 0.5);
  const double w_hi = std::clamp(center + halfwidth, 0.0, 0.5);

  // Peak value: exact at t=0 for the cosine product, scanned + refined
  // otherwise. M only needs to be near the sup for scaling.
  double log_m;
  if (cosine) {
    log_m = n * std::numbers::ln2;
  } else {
    const int samples = 257;
    double best = -kInf;
    int best_i = 1;
    for (int i = 1; i < samples; ++i) {
      const double t = w_lo + (w_hi - w_lo) * static_cast<double>(i) / samples;
      const double v = profile(t);
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    const double step = (w_hi - w_lo) / samples;
    const double g_lo = std::fmax(w_lo, w_lo + (best_i - 1) * step);
    const double g_hi = std::fmin(w_hi, w_lo + (best_i + 1) * step);
    best = std::fmax(best, golden_max(profile, g_lo, g_hi, 1e-13));
    log_m = best;
  }

  const auto scaled = [&](double t) {
    const double v = profile(t);
    if (std::isinf(v)) return 0.0;  // an exact zero of the product
    return std::exp(p * (v - log_m));
  };

  // Window first: it carries 1 - o(1) of the mass and sets the scale for the
  // absolute tolerances of the tail pieces.
  IntegralResult window;
  double total = 0.0, err = 0.0;
  std::int64_t evals = 0;
  if (w_lo < w_hi) {
    window = integrate_adaptive(scaled, w_lo, w_hi, 1e-14, {8, 48});
    total += window.value;
    err += window.error_estimate;
    evals += window.evaluations;
  }

  const double tail_tol = std::fmax(tol * std::fmax(window.value, 1e-30) * 0.5, 1e-300);
  const auto tail_presplit = [n](double lo, double hi) {
    // Start from panels of roughly a bump width 1/(2n) so the Gauss nodes
    // cannot alias over the zero structure; capped for very large n where
    // the tail is exponentially dead.
    const double width = hi - lo;
    const int want = static_cast<int>(std::ceil(width * 2.0 * n));
    return std::clamp(want, 4, 1024);
  };
  for (const Piece& piece : {Piece{0.0, w_lo, 0}, Piece{w_hi, 0.5, 0}}) {
    if (piece.lo >= piece.hi) continue;
    IntegralResult part = integrate_adaptive(scaled, piece.lo, piece.hi, tail_tol,
                                             {tail_presplit(piece.lo, piece.hi), 48});
    total += part.value;
    err += part.error_estimate;
    evals += part.evaluations;
  }

  if (!(total > 0.0)) {
    throw accuracy_error("lp norm integral collapsed to zero", {total, err, evals});
  }

  // ||f||_p = M (2 * total)^{1/p}
  NormResult out;
  out.p = p;
  out.method = NormMethod::quadrature;
  out.value = ScaledMagnitude::from_log(log_m + std::log(2.0 * total) / p);
  out.error_estimate = std::fmax(err / total / p, 1e-12);
  return out;
}

}  // namespace

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::quadrature: return "quadrature";
    case NormMethod::parseval: return "parseval";
    case NormMethod::coefficient_sum: return "coefficient-sum";
    case NormMethod::scan_refine: return "scan-refine";
  }
  return "unknown";
}

NormResult lp_norm_pn(int n, double p, double tol) { return lp_norm_impl(n, p, tol, false); }

NormResult lp_norm_qn(int n, double p, double tol) { return lp_norm_impl(n, p, tol, true); }

namespace {

// Fast scan kernel: log prod 2|sin(k alpha)| at alpha = theta/2 via the
// rotation recurrence, with exponent tracking instead of per-factor logs.
// Resynced from std::sin periodically to bound drift; the refinement stage
// re-evaluates candidates with the accurate path anyway.
double scan_log_value(double alpha, int n) {
  const double s1 = std::sin(alpha);
  const double c1 = std::cos(alpha);
  double s = s1, c = c1;
  double prod = 1.0;
  int exponent = 0;
  for (int k = 1; k <= n; ++k) {
    prod *= 2.0 * std::fabs(s);
    if (prod == 0.0) return -kInf;
    if ((k & 63) == 0) {
      int e = 0;
      prod = std::frexp(prod, &e);
      exponent += e;
      if ((k & 1023) == 0) {
        s = std::sin((k + 1) * alpha);
        c = std::cos((k + 1) * alpha);
        continue;
      }
    }
    const double ns = s * c1 + c * s1;
    const double nc = c * c1 - s * s1;
    s = ns;
    c = nc;
  }
  return std::log(prod) + exponent * std::numbers::ln2;
}

struct Candidate {
  double value;
  double lo, hi;
  friend bool operator<(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.lo < b.lo;
  }
};

}  // namespace

NormResult linf_norm_pn(int n, double theta_tol) {
  if (n < 1) throw std::domain_error("linf norm requires n >= 1");
  const std::int64_t grid = 64 * static_cast<std::int64_t>(n) * n;
  const double step = kPi / static_cast<double>(grid);

  // Chunked scan with one point of overlap; each chunk reports its local
  // maxima so the merge is deterministic.
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t chunk = std::max<std::int64_t>((grid + threads - 1) / threads, 1024);
  const std::size_t chunks = static_cast<std::size_t>((grid + chunk - 1) / chunk);
  std::vector<std::vector<Candidate>> per_chunk(chunks);

  constexpr std::size_t kKeep = 32;
  parallel_for_index(chunks, [&](std::size_t ci) {
    const std::int64_t begin = static_cast<std::int64_t>(ci) * chunk;
    const std::int64_t end = std::min<std::int64_t>(begin + chunk, grid + 1);
    auto& heap = per_chunk[ci];
    double vm1 = begin >= 1 ? scan_log_value(0.5 * (begin - 1) * step, n) : -kInf;
    double v0 = scan_log_value(0.5 * begin * step, n);
    for (std::int64_t i = begin; i < end; ++i) {
      const double v1 = i + 1 <= grid ? scan_log_value(0.5 * (i + 1) * step, n) : -kInf;
      if (std::isfinite(v0) && v0 > vm1 && v0 >= v1) {
        heap.push_back({v0, (i - 1) * step, std::fmin((i + 1) * step, kPi)});
        std::push_heap(heap.begin(), heap.end(), [](const Candidate& a, const Candidate& b) {
          return b < a;  // min-heap on value
        });
        if (heap.size() > kKeep) {
          std::pop_heap(heap.begin(), heap.end(), [](const Candidate& a, const Candidate& b) {
            return b < a;
          });
          heap.pop_back();
        }
      }
      vm1 = v0;
      v0 = v1;
    }
  });

  std::vector<Candidate> all;
  for (const auto& c : per_chunk) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return b < a; });
  if (all.size() > kKeep) all.resize(kKeep);
  if (all.empty()) all.push_back({0.0, kPi - 2.0 * step, kPi});  // n = tiny fallback

  double best = -kInf;
  for (const Candidate& c : all) {
    const auto g = [n](double theta) { return log_abs_pn(n, theta).log_value(); };
    best = std::fmax(best, golden_max(g, c.lo, c.hi, theta_tol));
    best = std::fmax(best, c.value);
  }

  NormResult out;
  out.p = kInf;
  out.method = NormMethod::scan_refine;
  out.value = ScaledMagnitude::from_log(best);
  out.error_estimate = 0.0;  // achieved value: a certified lower bound
  return out;
}

NormResult lp_norm_coefficients(const CoefficientTable& table, double p) {
  if (!(p >= 1.0)) throw std::domain_error("coefficient norm requires p >= 1");
  NormResult out;
  out.p = p;
  out.method = NormMethod::coefficient_sum;
  if (std::isinf(p)) {
    BigInt best = 0;
    for (const BigInt& c : table.coeffs) {
      BigInt a = boost::multiprecision::abs(c);
      if (a > best) best = a;
    }
    out.value = ScaledMagnitude::from_log(log_abs(best));
    out.error_estimate = 0.0;
    return out;
  }
  if (p == 1.0) {
    BigInt sum = 0;
    for (const BigInt& c : table.coeffs) sum += boost::multiprecision::abs(c);
    out.value = sum == 0 ? ScaledMagnitude::zero() : ScaledMagnitude::from_log(log_abs(sum));
    out.error_estimate = 0.0;
    return out;
  }
  // Max-factoring in the log domain: ||a||_p = M (sum (|a_k|/M)^p)^{1/p}.
  double log_max = -kInf;
  std::vector<double> logs;
  logs.reserve(table.coeffs.size());
  for (const BigInt& c : table.coeffs) {
    const double l = log_abs(c);
    logs.push_back(l);
    if (l > log_max) log_max = l;
  }
  if (std::isinf(log_max)) {
    out.value = ScaledMagnitude::zero();
    return out;
  }
  double sum = 0.0;
  for (double l : logs) {
    if (std::isinf(l)) continue;
    sum += std::exp(p * (l - log_max));
  }
  out.value = ScaledMagnitude::from_log(log_max + std::log(sum) / p);
  out.error_estimate = 4e-16 * static_cast<double>(table.coeffs.size());
  return out;
}

NormResult l2_norm_from_coefficients(const CoefficientTable& table) {
  BigInt sum = 0;
  for (const BigInt& c : table.coeffs) sum += c * c;
  NormResult out;
  out.p = 2.0;
  out.method = NormMethod::parseval;
  out.value = sum == 0 ? ScaledMagnitude::zero() : ScaledMagnitude::from_log(0.5 * log_abs(sum));
  out.error_estimate = 1e-15;
  return out;
}

}  // namespace trigprod
