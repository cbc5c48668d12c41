#ifndef TRIGPROD_ASYMPTOTICS_HPP
#define TRIGPROD_ASYMPTOTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigprod/coeffs.hpp"
#include "trigprod/constants.hpp"
#include "trigprod/scaled_magnitude.hpp"

namespace trigprod {

enum class TheoremTag {
  t1,          // ||Phat_n||_inf ~ B e^{Kn} / n
  t2,          // L^p asymptotics of P_n (needs p)
  t3,          // |P_n(3 pi / 2n)| within n^{+-C0} e^{An}
  t4,          // L^2 lower bound via the two-point large-sieve inequality
  t5,          // ||Q_n||_1 = O(2^n / sqrt n) via the Wallis integral
  t6,          // L^p asymptotics of Q_n (needs p)
  t7,          // ||Qhat_n||_inf ~ 2^n sqrt(6/pi) n^{-3/2}
  bigpoint,    // alias focus of t3
  bigsmall,    // alias focus of t4
  littlewood,  // >= 1.5 sqrt(n) nonzero Fourier coefficients
  wallis,      // alias focus of t5
  wright_coeff,  // the refined coefficient formulas near k = N/2
  pentagonal,    // low-order P coefficients match Euler's series
};

std::string to_string(TheoremTag tag);
TheoremTag theorem_tag_from_string(const std::string& name);

struct VerificationReport {
  TheoremTag tag;
  std::vector<int> ns;
  std::vector<double> observed;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> extras;
};

/// The right-hand side of the named asymptotic formula, in the log domain.
/// p is ignored by tags that do not need it.
ScaledMagnitude asymptotic_value(TheoremTag tag, int n, double p, const ConstantsSet& consts);

/// observed = ||Phat_n||_inf n e^{-Kn} against B; pass needs the final point
/// within tolerance and the deviation non-increasing over the sampled range.
VerificationReport verify_wright_linf_coeff(const std::vector<int>& ns, const ConstantsSet& consts,
                                            double tolerance = 0.15);

/// Theorem 2 / Theorem 6 ratio checks at a given p.
VerificationReport verify_lp_ratio(TheoremTag tag, const std::vector<int>& ns, double p,
                                   const ConstantsSet& consts, double tolerance = 0.15);

/// observed_n = (log|P_n(3pi/2n)| - A n)/log n for 2 <= n <= n_max; the fitted
/// C0 is max |observed_n|; pass iff the max is not attained in the top decile.
VerificationReport verify_bigpoint(int n_max, const ConstantsSet& consts);

/// |P_n(3pi/2n)|^2 <= 2.2 n(n+1) ||Phat_n||_2^2 for every n in 2..n_max.
VerificationReport verify_bigsmall(int n_max);

/// nonzero_count(Phat_n) >= 1.5 sqrt(n) for every n in 1..n_max.
VerificationReport verify_littlewood_count(int n_max);

/// ||Q_n||_1 <= 2^{n+1} G_n / pi with G_n the Wallis integral, for every n in
/// 1..n_max, plus the G_n sqrt(n+2) -> sqrt(pi/2) limit at the top n.
VerificationReport verify_wallis_bound(int n_max, double limit_tolerance = 0.02);

/// max_j Qhat_n(j) n^{3/2} / 2^n against sqrt(6/pi), argmax at floor(N/2) or
/// ceil(N/2).
VerificationReport verify_qhat_max(const std::vector<int>& ns, double tolerance = 0.10);

/// Wallis integral G_n = int_0^{pi/2} cos^n t dt as a Gamma ratio.
double wallis_integral(int n);

struct WrightCoefficientParams {
  int n;
  std::int64_t k;
  std::int64_t big_n() const { return static_cast<std::int64_t>(n) * (n + 1) / 2; }
  double m() const { return static_cast<double>(k) - 0.5 * static_cast<double>(big_n()); }
  // L = (2N - k) w0 / n - n / 4
  double l(double w0) const {
    return (2.0 * static_cast<double>(big_n()) - static_cast<double>(k)) * w0 / n - 0.25 * n;
  }
};

enum class WrightVariant { plain, gaussian };

struct SignedMagnitude {
  ScaledMagnitude magnitude;
  int sign = 0;  // -1, 0, +1
  double real() const { return sign * magnitude.value(); }
};

/// The refined coefficient approximations near k = N/2, in log-magnitude +
/// sign form.
SignedMagnitude wright_coefficient_formula(const WrightCoefficientParams& params,
                                           const ConstantsSet& consts, WrightVariant variant);

/// Sweeps |k - N/2| <= 3n comparing the gaussian prediction with the exact
/// coefficients: sign agreement on the large predictions and Pearson
/// correlation across the window.
VerificationReport verify_wright_coefficient_window(int n, const ConstantsSet& consts,
                                                    double sign_fraction = 0.85,
                                                    double min_correlation = 0.90);

/// P coefficients of order <= n match the pentagonal series for all n <= n_max.
VerificationReport verify_pentagonal(int n_max);

struct RatioRow {
  int n;
  double ratio;
};

/// Data behind the l^p order-of-magnitude conjectures: ratio of ||Xhat_n||_p
/// to the conjectured order. No pass/fail.
std::vector<RatioRow> conjecture_ratio_series(ProductKind kind, double p, int n_max,
                                              const ConstantsSet& consts);

/// Every theorem runner at desk scale; n_max scales the ranges.
std::vector<VerificationReport> verify_all(int n_max, const ConstantsSet& consts);

/// Single-tag entry point used by the CLI.
std::vector<VerificationReport> verify_theorem(TheoremTag tag, int n_max,
                                               const ConstantsSet& consts);

}  // namespace trigprod

#endif
