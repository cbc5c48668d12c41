#ifndef TRIGPROD_NORMS_HPP
#define TRIGPROD_NORMS_HPP

#include <string>

#include "trigprod/coeffs.hpp"
#include "trigprod/scaled_magnitude.hpp"

namespace trigprod {

enum class NormMethod { quadrature, parseval, coefficient_sum, scan_refine };

std::string to_string(NormMethod m);

struct NormResult {
  ScaledMagnitude value;
  double p = 1.0;  // +inf for the sup norm
  NormMethod method = NormMethod::quadrature;
  double error_estimate = 0.0;  // relative
};

/// ||P_n||_p = (2 int_0^{1/2} Pi_n(t)^p dt)^{1/p}, Pi_n(t) = prod 2|sin(pi k t)|,
/// by peak-aware adaptive quadrature in scaled arithmetic. 1 <= p < inf.
NormResult lp_norm_pn(int n, double p, double tol = 1e-10);

/// Same for Psi_n(t) = prod 2|cos(pi k t)|; the dominant mass sits at t = 0.
NormResult lp_norm_qn(int n, double p, double tol = 1e-10);

/// sup |P_n| by a coarse scan of 64 n^2 grid points on [0, pi] plus
/// golden-section refinement of the best brackets. The reported value is an
/// achieved value (lower-bound semantics).
NormResult linf_norm_pn(int n, double theta_tol = 1e-12);

/// l^p norm of the coefficient vector: exact integer arithmetic for p = 1 and
/// p = inf, log-domain max-factoring otherwise.
NormResult lp_norm_coefficients(const CoefficientTable& table, double p);

/// L^2 norm via Parseval: sqrt of the exact integer sum of squares.
NormResult l2_norm_from_coefficients(const CoefficientTable& table);

}  // namespace trigprod

#endif
