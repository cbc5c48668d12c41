#include "trigprod/pointeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace trigprod {

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

// Pairwise (tree) summation of term(lo..hi-1); rounding error O(log n) ulp.
template <class F>
double pairwise_sum(std::int64_t lo, std::int64_t hi, F& term) {
  const std::int64_t count = hi - lo;
  if (count <= 8) {
    double s = 0.0;
    for (std::int64_t k = lo; k < hi; ++k) s += term(k);
    return s;
  }
  const std::int64_t mid = lo + count / 2;
  const double left = pairwise_sum(lo, mid, term);
  return left + pairwise_sum(mid, hi, term);
}

// |x - nearest integer| <= one ulp at the given magnitude.
bool within_one_ulp(double x, double scale) {
  const double nearest = std::nearbyint(x);
  return std::fabs(x - nearest) <= std::numeric_limits<double>::epsilon() * scale;
}

// --- double-theta path ----------------------------------------------------

// log|2 sin(k theta / 2)|; zero iff k*theta/(2 pi) is within 1 ulp of an
// integer (so a true tiny theta still yields a finite, correct log).
struct SineTermDouble {
  double theta;
  bool hit_zero = false;
  double operator()(std::int64_t k) {
    const double r = (static_cast<double>(k) * theta) / (2.0 * kPi);
    if (within_one_ulp(r, std::fabs(r))) {
      hit_zero = true;
      return 0.0;
    }
    return kLog2 + std::log(std::fabs(std::sin(0.5 * static_cast<double>(k) * theta)));
  }
};

struct CosineTermDouble {
  double theta;
  bool hit_zero = false;
  double operator()(std::int64_t k) {
    // cos vanishes at half-integer values of k*theta/(2 pi).
    const double r = (static_cast<double>(k) * theta) / (2.0 * kPi);
    if (within_one_ulp(r - 0.5, std::fmax(std::fabs(r), 0.5))) {
      hit_zero = true;
      return 0.0;
    }
    return kLog2 + std::log(std::fabs(std::cos(0.5 * static_cast<double>(k) * theta)));
  }
};

// --- rational path ----------------------------------------------------------

// Angle of factor k is pi * (k*num) / (2*den); |sin| and |cos| have period
// 2 pi and are even, so everything reduces to q = k*num mod 2*den in
// [0, 2*den). Products are done in 128 bits.
std::uint64_t reduced_numerator(std::int64_t k, std::int64_t num, std::int64_t den) {
  const unsigned __int128 modulus = 2 * static_cast<unsigned __int128>(den);
  unsigned __int128 a;
  if (num >= 0) {
    a = static_cast<unsigned __int128>(num) % modulus;
  } else {
    a = modulus - static_cast<unsigned __int128>(-(num + 1)) % modulus - 1;
  }
  unsigned __int128 q = static_cast<unsigned __int128>(k) % modulus;
  q = (q * a) % modulus;
  return static_cast<std::uint64_t>(q);
}

// log|2 sin(pi q / (2 den))| for q in [0, 2 den); exact zero at q == 0.
// Folding to d = min(q, 2 den - q) keeps the argument in (0, pi/2] with no
// cancellation near the zeros.
double log_two_sin_rational(std::uint64_t q, std::int64_t den, bool& hit_zero) {
  const std::uint64_t period = 2 * static_cast<std::uint64_t>(den);
  if (q == 0) {
    hit_zero = true;
    return 0.0;
  }
  const std::uint64_t d = std::min(q, period - q);
  const double x = static_cast<double>(d) / static_cast<double>(period);  // in (0, 1/2]
  return kLog2 + std::log(std::sin(kPi * x));
}

// log|2 cos(pi q / (2 den))|; exact zero at q == den. The distance from the
// zero is the exact integer |den - q| over the same denominator.
double log_two_cos_rational(std::uint64_t q, std::int64_t den, bool& hit_zero) {
  const std::uint64_t b = static_cast<std::uint64_t>(den);
  if (q == b) {
    hit_zero = true;
    return 0.0;
  }
  const std::uint64_t d = q > b ? q - b : b - q;  // in (0, b]
  const double x = static_cast<double>(d) / static_cast<double>(2 * b);  // in (0, 1/2]
  return kLog2 + std::log(std::sin(kPi * x));
}

void check_rational(PiRational theta) {
  if (theta.den <= 0) throw std::domain_error("PiRational requires den > 0");
  if (theta.den > (std::int64_t{1} << 31)) {
    throw std::domain_error("PiRational denominator too large");
  }
}

void check_n(int n) {
  if (n < 1) throw std::domain_error("product evaluation requires n >= 1");
}

void check_finite(double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("theta must be finite");
}

template <class Term>
ScaledMagnitude sum_to_magnitude(int n, Term& term) {
  const double s = pairwise_sum(1, static_cast<std::int64_t>(n) + 1, term);
  if (term.hit_zero) return ScaledMagnitude::zero();
  return ScaledMagnitude::from_log(s);
}

struct RationalTerm {
  PiRational theta;
  bool cosine;
  bool hit_zero = false;
  double operator()(std::int64_t k) {
    const std::uint64_t q = reduced_numerator(k, theta.num, theta.den);
    bool zero = false;
    const double v = cosine ? log_two_cos_rational(q, theta.den, zero)
                            : log_two_sin_rational(q, theta.den, zero);
    if (zero) hit_zero = true;
    return v;
  }
};

}  // namespace

ScaledMagnitude log_abs_pn(int n, double theta) {
  check_n(n);
  check_finite(theta);
  SineTermDouble term{theta};
  return sum_to_magnitude(n, term);
}

ScaledMagnitude log_abs_pn(int n, PiRational theta) {
  check_n(n);
  check_rational(theta);
  RationalTerm term{theta, /*cosine=*/false};
  return sum_to_magnitude(n, term);
}

ScaledMagnitude log_abs_qn(int n, double theta) {
  check_n(n);
  check_finite(theta);
  CosineTermDouble term{theta};
  return sum_to_magnitude(n, term);
}

ScaledMagnitude log_abs_qn(int n, PiRational theta) {
  check_n(n);
  check_rational(theta);
  RationalTerm term{theta, /*cosine=*/true};
  return sum_to_magnitude(n, term);
}

ScaledMagnitude log_abs_pn_at_3pi_over_2n(int n) {
  check_n(n);
  return log_abs_pn(n, PiRational{3, 2 * static_cast<std::int64_t>(n)});
}

}  // namespace trigprod
