#ifndef TRIGPROD_CONSTANTS_HPP
#define TRIGPROD_CONSTANTS_HPP

namespace trigprod {

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

/// The analytic constants driving the growth of |P_n| and |Q_n|, each with a
/// first-order error estimate, plus the derived asymptotic prefactors.
struct ConstantsSet {
  ValueWithError w0;  // maximizer of w^{-1} int_0^w log sin(pi t) dt, in (0,1)
  ValueWithError K;   // exponential growth rate of the peak of |P_n|
  ValueWithError B;   // Wright prefactor
  ValueWithError C;   // peak-curvature constant, > 0
  ValueWithError G;   // Catalan's constant
  ValueWithError A;   // 2G / (3 pi)

  ValueWithError e_K;
  ValueWithError e_A;
  ValueWithError l2_prefactor_p;    // 2^{-3/4} pi^{-1/4} B C^{1/2}
  ValueWithError linf_prefactor_p;  // B C / sqrt(4 pi)
  ValueWithError q_l1_prefactor;    // sqrt(6 / pi)
};

/// Root of F(w) = int_0^w t cot(pi t) dt on [0.5, 0.95].
ValueWithError compute_w0(double tol);

/// K = log 2 + w0^{-1} int_0^{w0} log sin(pi t) dt.
ValueWithError compute_K(ValueWithError w0, double tol);

/// B = 2 e^K (1 - e^{2K}/4)^{-1/4}. Domain error if e^{2K} >= 4.
ValueWithError compute_B(ValueWithError K);

/// C = sqrt(-(1/2)(pi/w0) cot(pi w0)), needs w0 in (1/2, 1).
ValueWithError compute_C(ValueWithError w0);

/// Catalan's constant by accelerated summation of sum (-1)^k/(2k+1)^2.
ValueWithError compute_catalan(double tol);

/// Fills the derived prefactors from the base constants.
void derived_prefactors(ConstantsSet& set);

/// Computes everything once; tol applies to the quadratures and the series.
ConstantsSet compute_constants(double tol = 1e-12);

}  // namespace trigprod

#endif
