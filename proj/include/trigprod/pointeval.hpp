#ifndef TRIGPROD_POINTEVAL_HPP
#define TRIGPROD_POINTEVAL_HPP

#include <cstdint>

#include "trigprod/scaled_magnitude.hpp"

namespace trigprod {

/// theta = num * pi / den, den > 0. Zero factors of the products are detected
/// symbolically for these angles.
struct PiRational {
  std::int64_t num;
  std::int64_t den;
};

/// log |P_n(theta)| = n log 2 + sum_k log|sin(k theta / 2)|.
/// Returns the zero sentinel iff some factor vanishes (k theta/2 = 0 mod pi);
/// for double theta a factor counts as zero only when k*theta/(2 pi) is
/// within 1 ulp of an integer.
ScaledMagnitude log_abs_pn(int n, double theta);
ScaledMagnitude log_abs_pn(int n, PiRational theta);

/// log |Q_n(theta)| = n log 2 + sum_k log|cos(k theta / 2)|.
ScaledMagnitude log_abs_qn(int n, double theta);
ScaledMagnitude log_abs_qn(int n, PiRational theta);

/// |P_n(3 pi / (2n))|, the Theorem-3 point, via the exact-rational path.
ScaledMagnitude log_abs_pn_at_3pi_over_2n(int n);

}  // namespace trigprod

#endif
